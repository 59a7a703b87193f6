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

"""Positive braid words and their classical invariants.

Strands are labelled 1..n from bottom to top and the generator sigma_i
crosses strands i and i+1. Only positive generators occur. The text syntax
used by the command line is a comma-separated list of generator indices with
optional caret exponents and an optional strand count, e.g.

  1^2,2^2,3^2,4^2,3^2,2,1@5

When the strand count is omitted it defaults to the largest index plus one.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import itertools
import re

from bpsrulings import errors

ClassicalInvariants = collections.namedtuple(
    'ClassicalInvariants', ['e', 'tb', 'mu', 'ell', 'delta'])

PeakDecomposition = collections.namedtuple(
    'PeakDecomposition', ['beta1', 'gamma', 'beta2', 'n', 'm'])

_LETTER_RE = re.compile(r'^(\d+)(?:\^(\d+))?$')


class BraidWord(object):
  """A positive braid word on a fixed number of strands.

  #### Examples

  ```python
  word = BraidWord(3, [1, 1, 2])
  word.grouped()  # ((1, 2), (2, 1))
  ```
  """

  __slots__ = ('_strands', '_letters')

  def __init__(self, strands, letters=()):
    """Creates a braid word.

    Args:
      strands: Positive integer number of strands n.
      letters: Iterable of generator indices, each in [1, n - 1].

    Raises:
      ValueError: If `strands` < 1 or a letter is out of range.
    """
    if strands < 1:
      raise ValueError('A braid needs at least one strand, got {}.'
                       .format(strands))
    letters = tuple(int(i) for i in letters)
    for i in letters:
      if not 1 <= i <= strands - 1:
        raise ValueError('Generator index {} out of range for {} strands.'
                         .format(i, strands))
    self._strands = strands
    self._letters = letters

  @property
  def strands(self):
    return self._strands

  @property
  def letters(self):
    return self._letters

  @property
  def crossings(self):
    """e(beta): the number of crossings."""
    return len(self._letters)

  def __len__(self):
    return len(self._letters)

  def grouped(self):
    """Returns ((index, exponent), ...) merging runs of equal letters."""
    return tuple((i, len(list(run)))
                 for i, run in itertools.groupby(self._letters))

  def concat(self, other):
    """Returns the product self * other.

    Raises:
      StrandMismatch: If the strand counts differ.
    """
    if self.strands != other.strands:
      raise errors.StrandMismatch(
          'Cannot concatenate words on {} and {} strands.'.format(
              self.strands, other.strands))
    return BraidWord(self.strands, self._letters + other.letters)

  __add__ = concat

  def with_strands(self, strands):
    """Returns the same letters viewed on `strands` strands."""
    return BraidWord(strands, self._letters)

  def __eq__(self, other):
    if not isinstance(other, BraidWord):
      return NotImplemented
    return (self._strands, self._letters) == (other.strands, other.letters)

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __lt__(self, other):
    if not isinstance(other, BraidWord):
      return NotImplemented
    return ((self._strands, len(self), self._letters) <
            (other.strands, len(other), other.letters))

  def __hash__(self):
    return hash((self._strands, self._letters))

  def __str__(self):
    return format_word(self)

  def __repr__(self):
    return '<BraidWord {}>'.format(format_word(self))


def parse_word(text):
  """Parses the text syntax `i^e,...@n` into a BraidWord.

  Args:
    text: String such as "1^2,2,1@3", "1,1,1" or "@4" (empty word).

  Returns:
    BraidWord.

  Raises:
    BraidSyntaxError: If the string is malformed or a letter is out of range.
  """
  body, sep, strands_text = text.strip().partition('@')
  letters = []
  body = body.strip()
  if body:
    for token in body.split(','):
      match = _LETTER_RE.match(token.strip())
      if not match:
        raise errors.BraidSyntaxError(
            'Bad braid letter {!r} in {!r}.'.format(token, text))
      index = int(match.group(1))
      exponent = int(match.group(2)) if match.group(2) else 1
      if index < 1:
        raise errors.BraidSyntaxError(
            'Generator indices start at 1, got {} in {!r}.'.format(index, text))
      letters.extend([index] * exponent)
  if sep:
    if not strands_text.strip().isdigit():
      raise errors.BraidSyntaxError(
          'Bad strand count in {!r}.'.format(text))
    strands = int(strands_text)
  else:
    strands = max(letters) + 1 if letters else 1
  try:
    return BraidWord(strands, letters)
  except ValueError as e:
    raise errors.BraidSyntaxError(str(e))


def format_word(word, grouped=True):
  """Renders a BraidWord in the text syntax read by `parse_word`."""
  if grouped:
    tokens = [str(i) if e == 1 else '{}^{}'.format(i, e)
              for i, e in word.grouped()]
  else:
    tokens = [str(i) for i in word.letters]
  return '{}@{}'.format(','.join(tokens), word.strands)


def torus_braid(n, m):
  """Returns (sigma_1 ... sigma_{n-1})^m on n strands."""
  return BraidWord(n, list(range(1, n)) * m)


def permutation(word):
  """Returns the strand permutation of a braid word.

  Crossings are applied in word order; entry i - 1 of the result is the
  final position of the strand that starts at position i.

  Args:
    word: BraidWord.

  Returns:
    Tuple of length `word.strands` with entries in 1..n.
  """
  at_position = list(range(1, word.strands + 1))
  for i in word.letters:
    at_position[i - 1], at_position[i] = at_position[i], at_position[i - 1]
  final = [0] * word.strands
  for position, strand in enumerate(at_position, 1):
    final[strand - 1] = position
  return tuple(final)


def closure_components(word):
  """Number of components of the closure: the cycle count of the permutation."""
  perm = permutation(word)
  seen = [False] * len(perm)
  cycles = 0
  for start in range(len(perm)):
    if seen[start]:
      continue
    cycles += 1
    i = start
    while not seen[i]:
      seen[i] = True
      i = perm[i] - 1
  return cycles


def classical_invariants(word):
  """Returns e, tb = e - n, mu = tb + 1, ell and delta = (mu + ell - 1) / 2.

  e - n + ell is even (it has the parity of the permutation plus its cycle
  count) and nonnegative (each crossing merges at most two components), so
  delta is always a nonnegative integer. It is the top index of the
  normalized ruling polynomial.
  """
  e = word.crossings
  tb = e - word.strands
  mu = tb + 1
  ell = closure_components(word)
  delta = (mu + ell - 1) // 2
  return ClassicalInvariants(e=e, tb=tb, mu=mu, ell=ell, delta=delta)


def shift_embed(gamma, n):
  """Adds n - 1 parallel strands below `gamma`.

  Args:
    gamma: BraidWord on m strands.
    n: Positive integer.

  Returns:
    BraidWord on n + m - 1 strands with every index raised by n - 1.
  """
  if n < 1:
    raise ValueError('shift_embed needs n >= 1, got {}.'.format(n))
  return BraidWord(n + gamma.strands - 1, [i + n - 1 for i in gamma.letters])


def canonical_rotation(word):
  """Returns the lexicographically least cyclic rotation of the letters."""
  letters = word.letters
  if not letters:
    return word
  best = min(letters[k:] + letters[:k] for k in range(len(letters)))
  return BraidWord(word.strands, best)


def single_peak_decompose(word):
  """Splits a single-peak word at its peak block.

  With grouped form sigma_{i1}^{e1} ... sigma_{iM}^{eM} and indices
  i_1 < ... < i_k > ... > i_M, the peak block sigma_{i_k}^{e_k} is the
  shifted 2-strand braid sigma_1^{e_k}, and the flanks live on n = i_k
  strands.

  Args:
    word: BraidWord.

  Returns:
    PeakDecomposition(beta1, gamma, beta2, n, m) with m = 2, or None if the
    word is empty or its grouped indices are not single-peak.
  """
  blocks = word.grouped()
  if not blocks:
    return None
  indices = [i for i, _ in blocks]
  peak = indices.index(max(indices))
  rising = all(a < b for a, b in zip(indices[:peak], indices[1:peak + 1]))
  falling = all(a > b for a, b in zip(indices[peak:], indices[peak + 1:]))
  if not (rising and falling):
    return None
  n = indices[peak]
  before = sum(e for _, e in blocks[:peak])
  exponent = blocks[peak][1]
  letters = word.letters
  return PeakDecomposition(
      beta1=BraidWord(n, letters[:before]),
      gamma=BraidWord(2, [1] * exponent),
      beta2=BraidWord(n, letters[before + exponent:]),
      n=n,
      m=2)
