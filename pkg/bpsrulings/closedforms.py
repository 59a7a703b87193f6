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

"""Closed forms for torus knots, ADE singularities and Dynkin diagrams.

Torus knots T(n, m) get their normalized ruling polynomial from the
Gaussian binomial

    R~ = q^(-(n-1)(m-1)/2) [m+n n]_q / [m+n 1]_q,   z^2 = q - 2 + 1/q,

and their HOMFLY-PT polynomial from Jones' sum over hook representations.
ADE singularities get their BPS sequences from binomial formulas, and the
reversed sequence counts independent vertex sets of the Dynkin diagram.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import math

from absl import logging
import networkx as nx
import numpy as np
from scipy import special

from bpsrulings import braidcore
from bpsrulings import concavity
from bpsrulings import errors
from bpsrulings import exactalg

A = 'A'
D = 'D'
E = 'E'

_E_BPS = {
    6: (5, 10, 6, 1),
    7: (2, 11, 15, 7, 1),
    8: (7, 21, 21, 8, 1),
}


def _binom(a, b):
  """binom(a, b), zero unless 0 <= b <= a."""
  if b < 0 or a < 0 or b > a:
    return 0
  return int(special.comb(a, b, exact=True))


def _binomial_walk(a, b, count):
  """Yields binom(a + h, b - h) for h = 0, ..., count - 1.

  Only the first nonzero entry goes through `special.comb`; later ones follow
  from binom(t, u) = binom(t - 1, u + 1) t (u + 1) / ((t - u - 1)(t - u)).
  """
  value = None
  for h in range(count):
    top, bottom = a + h, b - h
    if bottom < 0 or top < 0 or bottom > top:
      value = None
      yield 0
      continue
    if value is None:
      value = _binom(top, bottom)
    else:
      value = (value * top * (bottom + 1) //
               ((top - bottom - 1) * (top - bottom)))
    yield value


def _factorial(r):
  return int(special.factorial(r, exact=True))


class AdeLabel(collections.namedtuple('AdeLabel', ['family', 'index'])):
  """Simple singularity type: A_n (n >= 1), D_n (n >= 4) or E_n (n = 6, 7, 8).

  #### Examples

  ```python
  AdeLabel('D', 5)
  AdeLabel.parse('E7')
  ```
  """
  __slots__ = ()

  def __new__(cls, family, index):
    family = str(family).upper()
    index = int(index)
    if family == A:
      valid = index >= 1
    elif family == D:
      valid = index >= 4
    elif family == E:
      valid = index in (6, 7, 8)
    else:
      raise ValueError('Unknown ADE family {!r}.'.format(family))
    if not valid:
      raise ValueError('{}_{} is not a simple singularity.'.format(
          family, index))
    return super(AdeLabel, cls).__new__(cls, family, index)

  @classmethod
  def parse(cls, text):
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
      raise ValueError('Cannot parse ADE label {!r}.'.format(text))
    return cls(text[0], int(text[1:]))

  def __str__(self):
    return '{}{}'.format(self.family, self.index)


class DynkinGraph(object):
  """Simple graph on the vertices 1..N, expected to be a forest.

  Acyclicity is not enforced on construction so that arbitrary edge lists can
  be loaded and rejected by `independence_poly` with `NotAForest`.
  """

  def __init__(self, num_vertices, edges=()):
    if num_vertices < 0:
      raise ValueError('num_vertices must be >= 0, got {}.'.format(
          num_vertices))
    graph = nx.Graph()
    graph.add_nodes_from(range(1, num_vertices + 1))
    for u, v in edges:
      if u == v:
        raise ValueError('Self-loop at vertex {}.'.format(u))
      if not (1 <= u <= num_vertices and 1 <= v <= num_vertices):
        raise ValueError('Edge ({}, {}) leaves the vertex range 1..{}.'.format(
            u, v, num_vertices))
      graph.add_edge(u, v)
    self._graph = graph

  @classmethod
  def from_edge_list(cls, text):
    """Parses one "u v" pair per line.

    A line with a single integer declares an isolated vertex. Blank lines and
    lines starting with '#' are skipped. Vertices are 1..N with N the largest
    label seen.

    Args:
      text: Edge-list text.

    Returns:
      DynkinGraph.

    Raises:
      ValueError: On a malformed line.
    """
    edges = []
    top = 0
    for lineno, line in enumerate(text.splitlines(), 1):
      line = line.strip()
      if not line or line.startswith('#'):
        continue
      fields = line.split()
      try:
        labels = [int(field) for field in fields]
      except ValueError:
        raise ValueError('Line {}: expected integers, got {!r}.'.format(
            lineno, line))
      if len(labels) not in (1, 2) or min(labels) < 1:
        raise ValueError('Line {}: expected "u v" with u, v >= 1, got '
                         '{!r}.'.format(lineno, line))
      top = max([top] + labels)
      if len(labels) == 2:
        edges.append(tuple(labels))
    return cls(top, edges)

  @property
  def num_vertices(self):
    return self._graph.number_of_nodes()

  @property
  def vertices(self):
    return tuple(sorted(self._graph.nodes))

  @property
  def edges(self):
    return tuple(sorted(tuple(sorted(edge)) for edge in self._graph.edges))

  @property
  def graph(self):
    """A copy of the underlying `networkx.Graph`."""
    return self._graph.copy()

  def is_forest(self):
    return not self.num_vertices or nx.is_forest(self._graph)

  def __eq__(self, other):
    if not isinstance(other, DynkinGraph):
      return NotImplemented
    return (self.num_vertices, self.edges) == (other.num_vertices, other.edges)

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    return hash((self.num_vertices, self.edges))

  def __repr__(self):
    return 'DynkinGraph({}, {})'.format(self.num_vertices, list(self.edges))


def _add(a, b):
  size = max(len(a), len(b))
  return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
               for i in range(size))


def independence_poly(graph):
  """Counts independent vertex sets by size.

  Each tree is rooted and processed leaves first: a vertex's "in" polynomial
  is x times the product of its children's "out" polynomials, and its "out"
  polynomial is the product of its children's in + out. Components multiply.

  Args:
    graph: DynkinGraph.

  Returns:
    Tuple (m_0, m_1, ...) where m_k counts independent sets of size k.

  Raises:
    NotAForest: If the graph has a cycle.

  #### Examples

  ```python
  independence_poly(ade_graph(AdeLabel('D', 4)))
  # ==> (1, 4, 3, 1)
  ```
  """
  if not graph.is_forest():
    raise errors.NotAForest('{!r} contains a cycle.'.format(graph))
  g = graph.graph
  result = (1,)
  for component in sorted(nx.connected_components(g), key=min):
    root = min(component)
    inside = {}
    outside = {}
    for vertex in nx.dfs_postorder_nodes(g, source=root):
      children = [u for u in g.neighbors(vertex) if u in inside]
      with_vertex = (0, 1)
      without_vertex = (1,)
      for child in children:
        with_vertex = concavity.convolve(with_vertex, outside[child])
        without_vertex = concavity.convolve(
            without_vertex, _add(inside[child], outside[child]))
      inside[vertex] = with_vertex
      outside[vertex] = without_vertex
    result = concavity.convolve(result, _add(inside[root], outside[root]))
  while len(result) > 1 and not result[-1]:
    result = result[:-1]
  return result


def ade_graph(label):
  """The Dynkin diagram of an ADE label.

  A_n is the path 1..n; D_n is the path 1..n-2 with n-1 and n both attached
  to n-2; E_n is the path 1..n-1 with n attached to vertex 3.
  """
  n = label.index
  if label.family == A:
    edges = [(i, i + 1) for i in range(1, n)]
  elif label.family == D:
    edges = [(i, i + 1) for i in range(1, n - 2)]
    edges += [(n - 2, n - 1), (n - 2, n)]
  else:
    edges = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
  return DynkinGraph(n, edges)


def ade_braid(label):
  """Positive braid whose rainbow closure is the link of the singularity.

  A_n: sigma_1^(n+1) on 2 strands. D_n: sigma_1^(n-2) sigma_2 sigma_1^2
  sigma_2 on 3 strands. E_n: sigma_1^(n-3) sigma_2 sigma_1^3 sigma_2 on 3
  strands.
  """
  n = label.index
  if label.family == A:
    return braidcore.BraidWord(2, [1] * (n + 1))
  if label.family == D:
    return braidcore.BraidWord(3, [1] * (n - 2) + [2, 1, 1, 2])
  return braidcore.BraidWord(3, [1] * (n - 3) + [2, 1, 1, 1, 2])


def delta_invariant(label):
  n = label.index
  if label.family == A:
    return (n + 1) // 2
  if label.family == D:
    return n // 2 + 1
  return {6: 3, 7: 4, 8: 4}[n]


def branches(label):
  """Number of branches, i.e. link components of the singularity."""
  n = label.index
  if label.family == A:
    return 2 if n % 2 else 1
  if label.family == D:
    return 3 if n % 2 == 0 else 2
  return {6: 1, 7: 2, 8: 1}[n]


def two_strand_bps(k):
  """R~ of the rainbow closure of sigma_1^k on 2 strands.

  sigma_1^k closes to the link of A_(k-1); k = 0 and k = 1 give (1,).
  """
  if k < 0:
    raise ValueError('two_strand_bps needs k >= 0, got {}.'.format(k))
  if k <= 1:
    return exactalg.BpsSequence((1,))
  return ade_bps(AdeLabel(A, k - 1))


def ade_bps(label):
  """BPS sequence (n_0, ..., n_delta) of an ADE singularity in closed form.

  Args:
    label: AdeLabel.

  Returns:
    BpsSequence.

  #### Examples

  ```python
  ade_bps(AdeLabel('A', 4))  # ==> (3, 4, 1)
  ade_bps(AdeLabel('D', 4))  # ==> (1, 3, 4, 1)
  ade_bps(AdeLabel('E', 7))  # ==> (2, 11, 15, 7, 1)
  ```
  """
  delta = delta_invariant(label)
  n = label.index
  size = delta + 1
  if label.family == A:
    if n % 2:
      values = list(_binomial_walk(delta, delta, size))
    else:
      values = list(_binomial_walk(delta + 1, delta, size))
  elif label.family == D:
    # D_(2 delta - 1) for odd n, D_(2 delta - 2) for even n.
    shift = 2 if n % 2 else 3
    values = [
        x + 2 * y + w for x, y, w in zip(
            _binomial_walk(delta - shift, delta, size),
            _binomial_walk(delta - shift, delta - 1, size),
            _binomial_walk(delta - shift + 1, delta - 2, size))
    ]
  else:
    values = _E_BPS[n]
  return exactalg.BpsSequence(values)


def torus_rtilde(n, m):
  """Normalized ruling polynomial of the torus link T(n, m), in z^2.

  Args:
    n: Positive integer.
    m: Positive integer coprime to n.

  Returns:
    BpsSequence of length (n-1)(m-1)/2 + 1.

  Raises:
    NotCoprime: If gcd(n, m) != 1.
    ValueError: If n or m is not positive.

  #### Examples

  ```python
  torus_rtilde(3, 4)  # ==> (5, 10, 6, 1)
  torus_rtilde(3, 5)  # ==> (7, 21, 21, 8, 1)
  ```
  """
  if n < 1 or m < 1:
    raise ValueError('torus_rtilde needs n, m >= 1, got ({}, {}).'.format(
        n, m))
  if math.gcd(n, m) != 1:
    raise errors.NotCoprime('T({}, {}) is not a knot: gcd is {}.'.format(
        n, m, math.gcd(n, m)))
  # [m+n 1]_q = (1 - q^(m+n)) / (1 - q).
  numerator = (exactalg.q_binomial(m + n, n) *
               exactalg.one_minus_q_power(1))
  quotient = exactalg.exact_div(numerator,
                                exactalg.one_minus_q_power(m + n))
  return exactalg.to_zsq(quotient.shift(-(n - 1) * (m - 1)))


def torus_homfly(n, m):
  """HOMFLY-PT polynomial of T(n, m) by Jones' formula.

  Uses P(unknot) = 1 and z = s - 1/s. The sum over hooks is brought over
  the common denominator [n-1]_q! so that the numerator is a polynomial;
  the division by (1 - q^n)(1 - a^2)[n-1]_q! is done last and must be exact.

  Args:
    n: Integer >= 2.
    m: Positive integer coprime to n.

  Returns:
    AZPoly in (a, s) whose lowest a-degree is (n-1)(m-1).

  Raises:
    NotCoprime: If gcd(n, m) != 1.
    DivisionInexact: Never for valid input; signals an arithmetic bug.
  """
  if n < 2 or m < 1:
    raise ValueError('torus_homfly needs n >= 2 and m >= 1, got ({}, {}).'
                     .format(n, m))
  if math.gcd(n, m) != 1:
    raise errors.NotCoprime('T({}, {}) is not a knot: gcd is {}.'.format(
        n, m, math.gcd(n, m)))
  mu = (n - 1) * (m - 1)
  a_squared = exactalg.AZPoly.a_monomial(2)
  total = exactalg.AZPoly()
  for j in range(n):
    power = j * m + (n - j - 1) * (n - j) // 2
    term = exactalg.AZPoly.from_half_laurent(
        exactalg.HalfLaurent.q_monomial(power, (-1)**j) *
        exactalg.q_binomial(n - 1, j))
    for i in range(-(n - 1 - j), j + 1):
      term = term * (exactalg.HalfLaurent.q_monomial(i) - a_squared)
    total += term
  numerator = (total * exactalg.one_minus_q_power(1) *
               exactalg.AZPoly({(mu, -mu): 1}))
  denominator = (exactalg.AZPoly.from_half_laurent(
      exactalg.one_minus_q_power(n) * exactalg.q_factorial(n - 1)) *
                 (1 - a_squared))
  return exactalg.az_exact_div(numerator, denominator)


def homfly_z_coefficients(poly):
  """Rewrites each a-coefficient of a HOMFLY-PT AZPoly in z = s - 1/s.

  Returns:
    Dict {a-exponent: ZLaurent}.

  Raises:
    NotZExpressible: If a coefficient is not a Laurent polynomial in z.
  """
  return {a_exp: exactalg.s_laurent_to_z(coeff)
          for a_exp, coeff in poly.by_a_power().items()}


def format_homfly(poly):
  """Writes a HOMFLY-PT AZPoly as a polynomial in a with z-coefficients.

  #### Examples

  ```python
  format_homfly(torus_homfly(2, 3))  # ==> '(z^2 + 2)*a^2 - a^4'
  ```
  """
  return exactalg.format_a_expansion(homfly_z_coefficients(poly))


def coprime_torus_pairs(max_delta):
  """Yields coprime (n, m) with 2 <= n < m and (n-1)(m-1)/2 <= max_delta."""
  n = 2
  while (n - 1) * n // 2 <= max_delta:
    m = n + 1
    while (n - 1) * (m - 1) // 2 <= max_delta:
      if math.gcd(n, m) == 1:
        yield n, m
      m += 1
    n += 1


def torus_sweep(max_delta):
  """Evaluates `torus_rtilde` and its report on every pair up to max_delta.

  Returns:
    List of (n, m, BpsSequence, ConjectureReport) in (n, m) order.
  """
  results = []
  for n, m in coprime_torus_pairs(max_delta):
    sequence = torus_rtilde(n, m)
    report = concavity.conjecture_report(sequence)
    if not report.all_hold:
      logging.error('T(%d, %d): %s violates %s.', n, m, sequence,
                    report.first_violation)
    results.append((n, m, sequence, report))
    logging.log_every_n_seconds(logging.INFO, 'Torus sweep at T(%d, %d).',
                                10, n, m)
  logging.info('Torus sweep: %d coprime pairs with delta <= %d.',
               len(results), max_delta)
  return results


def torus_w_roots(n, m):
  """Complex roots of torus_rtilde(n, m) as a polynomial in w = z^2."""
  sequence = torus_rtilde(n, m)
  if sequence.delta == 0:
    return np.zeros(0, dtype=complex)
  return np.roots(np.array(sequence[::-1], dtype=float)).astype(complex)


def d_poly_f(n, k):
  """f(n, k) = n(n-2k+1)(n-2k+2) + k(k-1)(n-k)."""
  return n * (n - 2 * k + 1) * (n - 2 * k + 2) + k * (k - 1) * (n - k)


def d_poly_f_expanded(n, k):
  """f(n, k) expanded as a cubic in k."""
  return (-k**3 + (5 * n + 1) * k**2 - (4 * n**2 + 7 * n) * k +
          n**3 + 3 * n**2 + 2 * n)


def d_poly_F(n, k):  # pylint: disable=invalid-name
  """F(n, k) = f(n, k-1) f(n, k+1) - f(n, k)^2, expanded."""
  return (-3 * k**4 + (20 * n + 4) * k**3 -
          (50 * n**2 + 20 * n - 1) * k**2 +
          (34 * n**3 + 60 * n**2 - 8 * n - 2) * k -
          6 * n**4 - 24 * n**3 - 6 * n**2)


def mk_dn(n, k):
  """Number of independent k-sets of the D_n diagram.

  m_k = binom(n-k, k) + binom(n-k-1, k-1) + binom(n-k, k-2), splitting on
  whether the two terminal nodes are used.

  Args:
    n: Integer >= 4.
    k: Integer >= 0.

  Returns:
    Nonnegative integer; zero when k exceeds the independence number.
  """
  if n < 4 or k < 0:
    raise ValueError('mk_dn needs n >= 4 and k >= 0, got ({}, {}).'.format(
        n, k))
  return (_binom(n - k, k) + _binom(n - k - 1, k - 1) +
          _binom(n - k, k - 2))


def mk_dn_factorial(n, k):
  """m_k = (n-k-1)! f(n, k) / (k! (n-2k+2)!).

  Args:
    n: Integer >= 4.
    k: Integer with 0 <= k and 2k <= n + 2 and k <= n - 1.

  Returns:
    The integer value.

  Raises:
    ValueError: Outside the domain of the factorials.
    DivisionInexact: If the quotient is not an integer.
  """
  if n < 4 or k < 0 or 2 * k > n + 2 or k > n - 1:
    raise ValueError('Factorial form undefined at ({}, {}).'.format(n, k))
  numerator = _factorial(n - k - 1) * d_poly_f(n, k)
  denominator = _factorial(k) * _factorial(n - 2 * k + 2)
  value, remainder = divmod(numerator, denominator)
  if remainder:
    raise errors.DivisionInexact(
        'Factorial form at ({}, {}) is not an integer.'.format(n, k),
        remainder=remainder)
  return value


def d_middle_values(k):
  """(m_{k-1}, m_k, m_{k+1}) for D_(2k), k >= 2, from their closed forms."""
  if k < 2:
    raise ValueError('d_middle_values needs k >= 2, got {}.'.format(k))
  return ((k**4 - 2 * k**3 + 23 * k**2 + 2 * k) // 24,
          (k**2 - k + 4) // 2,
          1)


def a_odd_polynomial(delta):
  """Coefficients of p_delta(w) = sum_h binom(delta+h, 2h) w^h."""
  if delta < 0:
    raise ValueError('a_odd_polynomial needs delta >= 0, got {}.'.format(
        delta))
  return tuple(_binom(delta + h, 2 * h) for h in range(delta + 1))


def a_odd_recurrence(delta):
  """p_delta from p_0 = 1, p_1 = 1 + w, p_(d+1) = (2 + w) p_d - p_(d-1)."""
  if delta < 0:
    raise ValueError('a_odd_recurrence needs delta >= 0, got {}.'.format(
        delta))
  previous, current = (1,), (1, 1)
  if delta == 0:
    return previous
  for _ in range(delta - 1):
    shifted = concavity.convolve(current, (2, 1))
    padded = previous + (0,) * (len(shifted) - len(previous))
    previous, current = current, tuple(x - y for x, y in zip(shifted, padded))
  return current


def a_odd_gap(delta, h):
  """n_h^2 - n_(h-1) n_(h+1) for the A_(2 delta - 1) sequence."""
  return (_binom(delta + h, delta - h)**2 -
          _binom(delta + h - 1, delta - h + 1) *
          _binom(delta + h + 1, delta - h - 1))


def a_odd_factor_roots(delta):
  """The constants c_j with p_delta(w) = prod_j (w + c_j).

  c_j = 4 sin^2((2j + 1) pi / (2 (2 delta + 1))) for j = 0..delta-1; all lie
  in (0, 4).

  Args:
    delta: Integer >= 1.

  Returns:
    List of floats, increasing.
  """
  if delta < 1:
    raise ValueError('a_odd_factor_roots needs delta >= 1, got {}.'.format(
        delta))
  j = np.arange(delta)
  angles = (2 * j + 1) * np.pi / (2 * (2 * delta + 1))
  return (4 * np.sin(angles)**2).tolist()


def a_odd_factorization_check(delta, rtol=1e-9):
  """Whether prod_j (w + c_j) reproduces p_delta coefficientwise.

  Coefficients are compared with relative tolerance `rtol` (and the same
  absolute tolerance), since they grow like binom(2 delta, delta).
  """
  monic = np.poly(-np.array(a_odd_factor_roots(delta)))[::-1]
  expected = np.array(a_odd_polynomial(delta), dtype=float)
  return bool(np.allclose(monic, expected, rtol=rtol, atol=rtol))
