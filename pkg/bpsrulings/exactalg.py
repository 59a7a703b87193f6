# coding=utf-8
# Copyright 2026 The BPS Rulings Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact sparse Laurent polynomial arithmetic.

Three polynomial types carry every exact computation in the package:

+ `HalfLaurent`: Laurent polynomials in `s`, where `s**2 = q`. Storing the
  integer exponent of `s` keeps half-integer powers of `q` exact.
+ `ZLaurent`: Laurent polynomials in `z = s - 1/s`.
+ `AZPoly`: Laurent polynomials in `(a, s)`, the variables of the HOMFLY-PT
  polynomial.

`BpsSequence` is the coefficient vector `(c_0, ..., c_d)` of a polynomial in
`z**2`; `to_zsq` and `from_zsq` convert between it and palindromic
`HalfLaurent`s via `z**2 = q - 2 + 1/q`.

All values are immutable and coefficients are Python integers, so nothing
overflows and nothing rounds.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import functools

from scipy import special

from bpsrulings import errors


def _clean(coeffs):
  return {e: c for e, c in coeffs.items() if c}


@functools.lru_cache(maxsize=512)
def _binomial_row(n):
  """Returns (binom(n, 0), ..., binom(n, n)) as Python integers."""
  return tuple(int(special.comb(n, j, exact=True)) for j in range(n + 1))


def _term_string(coeff, monomial):
  if not monomial:
    return str(coeff)
  if coeff == 1:
    return monomial
  if coeff == -1:
    return '-' + monomial
  return '{}*{}'.format(coeff, monomial)


def _join_terms(terms):
  if not terms:
    return '0'
  text = terms[0]
  for term in terms[1:]:
    if term.startswith('-'):
      text += ' - ' + term[1:]
    else:
      text += ' + ' + term
  return text


class _SparseLaurent(object):
  """Univariate Laurent polynomial stored as {exponent: integer}."""

  variable = 'x'

  def __init__(self, coeffs=None):
    self._coeffs = _clean(dict(coeffs or {}))

  @classmethod
  def constant(cls, value):
    return cls({0: value})

  @classmethod
  def monomial(cls, exponent, coeff=1):
    return cls({exponent: coeff})

  @property
  def coeffs(self):
    """Copy of the {exponent: coefficient} map; never holds zeros."""
    return dict(self._coeffs)

  def items(self):
    return sorted(self._coeffs.items())

  def coefficient(self, exponent):
    return self._coeffs.get(exponent, 0)

  @property
  def degree(self):
    """Largest exponent with a nonzero coefficient; None for zero."""
    return max(self._coeffs) if self._coeffs else None

  @property
  def valuation(self):
    """Smallest exponent with a nonzero coefficient; None for zero."""
    return min(self._coeffs) if self._coeffs else None

  def shift(self, k):
    """Multiplies by the monomial variable**k."""
    return type(self)({e + k: c for e, c in self._coeffs.items()})

  def evaluate(self, x):
    return sum(c * x**e for e, c in self._coeffs.items())

  def _coerce(self, other):
    if isinstance(other, type(self)):
      return other
    if isinstance(other, int):
      return type(self).constant(other)
    return None

  def __bool__(self):
    return bool(self._coeffs)

  __nonzero__ = __bool__

  def __eq__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    return self._coeffs == other._coeffs  # pylint: disable=protected-access

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    return hash((type(self).__name__, frozenset(self._coeffs.items())))

  def __neg__(self):
    return type(self)({e: -c for e, c in self._coeffs.items()})

  def __add__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    coeffs = dict(self._coeffs)
    for e, c in other._coeffs.items():  # pylint: disable=protected-access
      coeffs[e] = coeffs.get(e, 0) + c
    return type(self)(coeffs)

  __radd__ = __add__

  def __sub__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other):
    return (-self) + other

  def __mul__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    coeffs = {}
    for e1, c1 in self._coeffs.items():
      for e2, c2 in other._coeffs.items():  # pylint: disable=protected-access
        coeffs[e1 + e2] = coeffs.get(e1 + e2, 0) + c1 * c2
    return type(self)(coeffs)

  __rmul__ = __mul__

  def __pow__(self, power):
    if not isinstance(power, int) or power < 0:
      raise ValueError('Only nonnegative integer powers are supported, got '
                       '{}.'.format(power))
    result = type(self).constant(1)
    base = self
    while power:
      if power & 1:
        result = result * base
      base = base * base
      power >>= 1
    return result

  def __str__(self):
    terms = []
    for e, c in sorted(self._coeffs.items(), reverse=True):
      if e == 0:
        monomial = ''
      elif e == 1:
        monomial = self.variable
      else:
        monomial = '{}^{}'.format(self.variable, e)
      terms.append(_term_string(c, monomial))
    return _join_terms(terms)

  def __repr__(self):
    return '<{} {}>'.format(type(self).__name__, self)


class HalfLaurent(_SparseLaurent):
  """Laurent polynomial in s = q^(1/2) with integer coefficients.

  #### Examples

  ```python
  q = HalfLaurent.q_monomial(1)
  (1 - q**2) == (1 - q) * (1 + q)
  HalfLaurent.s_monomial(1) - HalfLaurent.s_monomial(-1)  # z
  ```
  """

  variable = 's'

  @classmethod
  def s_monomial(cls, exponent, coeff=1):
    return cls({exponent: coeff})

  @classmethod
  def q_monomial(cls, exponent, coeff=1):
    """Returns coeff * q**exponent; `exponent` may be a half-integer."""
    doubled = 2 * exponent
    if doubled != int(doubled):
      raise ValueError('q-exponent {} is not a half-integer.'.format(exponent))
    return cls({int(doubled): coeff})

  @classmethod
  def from_q_coeffs(cls, coeffs):
    """Builds a polynomial from {integer q-exponent: coefficient}."""
    return cls({2 * e: c for e, c in coeffs.items()})

  def has_fractional_power(self):
    return any(e % 2 for e in self._coeffs)

  def q_coeffs(self):
    """Returns {q-exponent: coefficient}.

    Raises:
      FractionalPower: If an odd power of s is present.
    """
    if self.has_fractional_power():
      raise errors.FractionalPower(
          '{} has a half-integer power of q.'.format(self))
    return {e // 2: c for e, c in self._coeffs.items()}

  def substitute_inverse(self):
    """Returns the polynomial with s replaced by 1/s."""
    return HalfLaurent({-e: c for e, c in self._coeffs.items()})

  def is_q_palindromic(self):
    return self == self.substitute_inverse()

  def __str__(self):
    terms = []
    for e, c in sorted(self._coeffs.items(), reverse=True):
      if e == 0:
        monomial = ''
      elif e % 2:
        monomial = 'q^({}/2)'.format(e)
      elif e == 2:
        monomial = 'q'
      else:
        monomial = 'q^{}'.format(e // 2)
      terms.append(_term_string(c, monomial))
    return _join_terms(terms)


class ZLaurent(_SparseLaurent):
  """Laurent polynomial in z = s - 1/s with integer coefficients."""

  variable = 'z'


class BpsSequence(tuple):
  """Coefficients (c_0, ..., c_d) of the polynomial sum_h c_h z^(2h).

  A `BpsSequence` is a tuple of Python integers, so it compares equal to the
  plain tuple with the same entries.
  """

  def __new__(cls, coeffs):
    coeffs = tuple(int(c) for c in coeffs)
    if not coeffs:
      raise ValueError('A BpsSequence needs at least one coefficient.')
    return super(BpsSequence, cls).__new__(cls, coeffs)

  @property
  def delta(self):
    """Top index d; equals the delta-invariant for singularity links."""
    return len(self) - 1

  def is_nonnegative(self):
    return all(c >= 0 for c in self)

  def to_polynomial_string(self):
    terms = []
    for h, c in enumerate(self):
      if not c and len(self) > 1:
        continue
      if h == 0:
        terms.append(str(c))
      elif h == 1:
        terms.append(_term_string(c, 'z^2'))
      else:
        terms.append(_term_string(c, 'z^{}'.format(2 * h)))
    return _join_terms(terms)

  def __repr__(self):
    return 'BpsSequence({})'.format(tuple(self))


class AZPoly(object):
  """Laurent polynomial in (a, s) stored as {(a_exp, s_exp): integer}."""

  def __init__(self, coeffs=None):
    self._coeffs = _clean(dict(coeffs or {}))

  @classmethod
  def from_half_laurent(cls, poly, a_exponent=0):
    """Returns a**a_exponent * poly."""
    return cls({(a_exponent, e): c for e, c in poly.coeffs.items()})

  @classmethod
  def a_monomial(cls, exponent, coeff=1):
    return cls({(exponent, 0): coeff})

  @property
  def coeffs(self):
    return dict(self._coeffs)

  def by_a_power(self):
    """Returns {a-exponent: HalfLaurent coefficient}."""
    grouped = {}
    for (a_exp, s_exp), c in self._coeffs.items():
      grouped.setdefault(a_exp, {})[s_exp] = c
    return {a_exp: HalfLaurent(coeffs) for a_exp, coeffs in grouped.items()}

  def a_coefficient(self, a_exponent):
    return HalfLaurent({s: c for (a, s), c in self._coeffs.items()
                        if a == a_exponent})

  def a_degrees(self):
    return sorted({a for a, _ in self._coeffs})

  @property
  def lowest_a_degree(self):
    return min(a for a, _ in self._coeffs) if self._coeffs else None

  @property
  def highest_a_degree(self):
    return max(a for a, _ in self._coeffs) if self._coeffs else None

  def _coerce(self, other):
    if isinstance(other, AZPoly):
      return other
    if isinstance(other, HalfLaurent):
      return AZPoly.from_half_laurent(other)
    if isinstance(other, int):
      return AZPoly({(0, 0): other})
    return None

  def __bool__(self):
    return bool(self._coeffs)

  __nonzero__ = __bool__

  def __eq__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    return self._coeffs == other._coeffs  # pylint: disable=protected-access

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    return hash(('AZPoly', frozenset(self._coeffs.items())))

  def __neg__(self):
    return AZPoly({k: -c for k, c in self._coeffs.items()})

  def __add__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    coeffs = dict(self._coeffs)
    for k, c in other._coeffs.items():  # pylint: disable=protected-access
      coeffs[k] = coeffs.get(k, 0) + c
    return AZPoly(coeffs)

  __radd__ = __add__

  def __sub__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other):
    return (-self) + other

  def __mul__(self, other):
    other = self._coerce(other)
    if other is None:
      return NotImplemented
    coeffs = {}
    for (a1, s1), c1 in self._coeffs.items():
      for (a2, s2), c2 in other._coeffs.items():  # pylint: disable=protected-access
        key = (a1 + a2, s1 + s2)
        coeffs[key] = coeffs.get(key, 0) + c1 * c2
    return AZPoly(coeffs)

  __rmul__ = __mul__

  def __str__(self):
    return format_a_expansion(self.by_a_power())

  def __repr__(self):
    return '<AZPoly {}>'.format(self)


def format_a_expansion(coeffs):
  """Writes {a-exponent: Laurent coefficient} as a polynomial in a.

  Coefficients with several terms are parenthesized; a lone term is written
  inline, so -1 * a^4 reads `- a^4`.
  """
  terms = []
  for a_exp, coeff in sorted(coeffs.items()):
    if not coeff:
      continue
    if a_exp == 0:
      terms.append(str(coeff))
      continue
    monomial = 'a' if a_exp == 1 else 'a^{}'.format(a_exp)
    if len(coeff.coeffs) > 1:
      terms.append('({})*{}'.format(coeff, monomial))
    elif coeff.degree:
      terms.append('{}*{}'.format(coeff, monomial))
    else:
      terms.append(_term_string(coeff.coefficient(0), monomial))
  return _join_terms(terms)


Q = HalfLaurent.q_monomial(1)
Z_IN_S = HalfLaurent({1: 1, -1: -1})
ZSQ_IN_Q = HalfLaurent({2: 1, 0: -2, -2: 1})


def one_minus_q_power(r):
  """Returns 1 - q**r."""
  return HalfLaurent({0: 1, 2 * r: -1}) if r else HalfLaurent()


def exact_div(numerator, denominator):
  """Divides two `HalfLaurent`s whose quotient is a Laurent polynomial.

  Both operands are shifted to valuation zero and divided as ordinary
  polynomials, top-down. Since the shifted divisor is prime to `s`, the
  Laurent quotient exists iff the polynomial remainder vanishes.

  Args:
    numerator: HalfLaurent.
    denominator: Nonzero HalfLaurent.

  Returns:
    HalfLaurent quotient.

  Raises:
    ZeroDivisionError: If `denominator` is zero.
    DivisionInexact: If the division leaves a remainder. The exception's
      `remainder` is the (shifted back) leftover of the long division.
  """
  if not denominator:
    raise ZeroDivisionError('Division by the zero polynomial.')
  if not numerator:
    return HalfLaurent()
  num_val = numerator.valuation
  den_val = denominator.valuation
  num = [0] * (numerator.degree - num_val + 1)
  for e, c in numerator.coeffs.items():
    num[e - num_val] = c
  den = [(e - den_val, c) for e, c in denominator.coeffs.items()]
  den_deg = denominator.degree - den_val
  lead = denominator.coefficient(denominator.degree)

  quotient = {}
  for top in range(len(num) - 1, den_deg - 1, -1):
    c = num[top]
    if not c:
      continue
    if c % lead:
      break
    k = c // lead
    offset = top - den_deg
    quotient[offset] = k
    for e, d in den:
      num[e + offset] -= k * d
  remainder = {e + num_val: c for e, c in enumerate(num) if c}
  if remainder:
    remainder = HalfLaurent(remainder)
    raise errors.DivisionInexact(
        '({}) / ({}) leaves remainder {}.'.format(numerator, denominator,
                                                  remainder),
        remainder=remainder)
  return HalfLaurent({e + num_val - den_val: c for e, c in quotient.items()})


def az_exact_div(numerator, denominator):
  """Divides two `AZPoly`s, treated as polynomials in `a` over `HalfLaurent`.

  Each step divides the leading a-coefficients with `exact_div`, so the
  division succeeds iff it is exact over the integers.

  Args:
    numerator: AZPoly.
    denominator: Nonzero AZPoly.

  Returns:
    AZPoly quotient.

  Raises:
    ZeroDivisionError: If `denominator` is zero.
    DivisionInexact: If the division is not exact.
  """
  if not denominator:
    raise ZeroDivisionError('Division by the zero polynomial.')
  if not numerator:
    return AZPoly()
  num_val = numerator.lowest_a_degree
  den_val = denominator.lowest_a_degree
  num = [HalfLaurent()] * (numerator.highest_a_degree - num_val + 1)
  for e, c in numerator.by_a_power().items():
    num[e - num_val] = c
  den = [(e - den_val, c) for e, c in denominator.by_a_power().items()]
  den_deg = denominator.highest_a_degree - den_val
  lead = denominator.a_coefficient(denominator.highest_a_degree)

  quotient = AZPoly()
  for top in range(len(num) - 1, den_deg - 1, -1):
    c = num[top]
    if not c:
      continue
    k = exact_div(c, lead)
    offset = top - den_deg
    quotient += AZPoly.from_half_laurent(k, offset + num_val - den_val)
    for e, d in den:
      num[e + offset] = num[e + offset] - k * d
  remainder = AZPoly()
  for e, c in enumerate(num):
    remainder += AZPoly.from_half_laurent(c, e + num_val)
  if remainder:
    raise errors.DivisionInexact(
        '({}) / ({}) leaves remainder {}.'.format(numerator, denominator,
                                                  remainder),
        remainder=remainder)
  return quotient


def q_factorial(r):
  """Returns [r]_q! = (1 - q)(1 - q^2)...(1 - q^r), with [0]_q! = 1."""
  if r < 0:
    raise ValueError('q_factorial needs r >= 0, got {}.'.format(r))
  result = HalfLaurent.constant(1)
  for i in range(1, r + 1):
    result = result * one_minus_q_power(i)
  return result


def q_binomial(a, b):
  """Gaussian binomial [a b]_q = [a]_q! / ([b]_q! [a-b]_q!).

  Built one factor at a time: after step i the running value is
  [a i+1]_q, so every intermediate division is exact.

  Args:
    a: Nonnegative integer.
    b: Integer with 0 <= b <= a.

  Returns:
    HalfLaurent with integer q-powers and nonnegative coefficients.

  Raises:
    ValueError: If not 0 <= b <= a.
    DivisionInexact: Never for valid input; signals an arithmetic bug.
  """
  if not 0 <= b <= a:
    raise ValueError('q_binomial needs 0 <= b <= a, got ({}, {}).'.format(a, b))
  b = min(b, a - b)
  result = HalfLaurent.constant(1)
  for i in range(b):
    result = exact_div(result * one_minus_q_power(a - i),
                       one_minus_q_power(i + 1))
  return result


def to_zsq(poly):
  """Rewrites a palindromic Laurent polynomial in q as a polynomial in z^2.

  Repeatedly subtracts c * (q - 2 + 1/q)^d for the current top q-degree d.
  Each step lowers the degree, and the expansion of (q - 2 + 1/q)^d is the
  row (-1)^j binom(2d, j) of (s - 1/s)^(2d).

  Args:
    poly: HalfLaurent with only integer q-powers and poly(q) = poly(1/q).

  Returns:
    BpsSequence (c_0, ..., c_d) with poly = sum_h c_h (q - 2 + 1/q)^h.

  Raises:
    FractionalPower: If an odd power of s is present.
    NotPalindromic: If poly(q) != poly(1/q).
  """
  q_coeffs = poly.q_coeffs()
  if not poly.is_q_palindromic():
    raise errors.NotPalindromic('{} is not invariant under q -> 1/q.'
                                .format(poly))
  if not q_coeffs:
    return BpsSequence((0,))
  top = max(q_coeffs)
  dense = [0] * (2 * top + 1)
  for e, c in q_coeffs.items():
    dense[e + top] = c
  result = [0] * (top + 1)
  for h in range(top, -1, -1):
    c = dense[h + top]
    if not c:
      continue
    result[h] = c
    for j, binom in enumerate(_binomial_row(2 * h)):
      dense[h - j + top] -= c * binom if j % 2 == 0 else -c * binom
  if any(dense):
    raise errors.InvariantError(
        'Peeling {} left a nonzero residue.'.format(poly))
  return BpsSequence(result)


def from_zsq(coeffs):
  """Expands sum_h c_h (q - 2 + 1/q)^h into a HalfLaurent (Horner's rule)."""
  result = HalfLaurent()
  for c in reversed(tuple(coeffs)):
    result = result * ZSQ_IN_Q + c
  return result


def s_laurent_to_z(poly):
  """Rewrites a Laurent polynomial in s as a polynomial in z = s - 1/s.

  Args:
    poly: HalfLaurent with poly(s) = poly(-1/s).

  Returns:
    ZLaurent Z with Z(s - 1/s) = poly(s).

  Raises:
    NotZExpressible: If poly(s) != poly(-1/s).
  """
  coeffs = poly.coeffs
  for e, c in coeffs.items():
    mirrored = c if e % 2 == 0 else -c
    if coeffs.get(-e, 0) != mirrored:
      raise errors.NotZExpressible(
          '{} is not invariant under s -> -1/s.'.format(poly))
  result = {}
  while coeffs:
    top = max(coeffs)
    if top < 0:
      raise errors.NotZExpressible(
          '{} does not reduce to a polynomial in z.'.format(poly))
    c = coeffs[top]
    result[top] = c
    for j, binom in enumerate(_binomial_row(top)):
      e = top - 2 * j
      coeffs[e] = coeffs.get(e, 0) - (c * binom if j % 2 == 0 else -c * binom)
    coeffs = _clean(coeffs)
  return ZLaurent(result)


def q_binomial_theorem_check(n):
  """Checks prod_{j<n} (1 + q^j t) = sum_j q^(j(j-1)/2) [n j]_q t^j.

  The formal variable t is carried as the `a` variable of an `AZPoly`.

  Args:
    n: Nonnegative integer.

  Returns:
    True iff both sides agree exactly.
  """
  lhs = AZPoly({(0, 0): 1})
  for j in range(n):
    lhs = lhs * (AZPoly({(0, 0): 1}) +
                 AZPoly.from_half_laurent(HalfLaurent.q_monomial(j), 1))
  rhs = AZPoly()
  for j in range(n + 1):
    term = HalfLaurent.q_monomial(j * (j - 1) // 2) * q_binomial(n, j)
    rhs += AZPoly.from_half_laurent(term, j)
  return lhs == rhs
