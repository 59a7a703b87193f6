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

"""Normal rulings of rainbow closures by dynamic programming.

The front of the rainbow closure of a braid on n strands is cut into vertical
slices with 2n points, numbered 1..2n from bottom to top: the n braid strands
lie below the n rainbow arcs. The left cusps pair point i with point
2n + 1 - i, and a ruling is read left to right as a pairing of the points
(which two strands bound the same eye). At a crossing sigma_k the pairing
either

+ switches: the paths turn and the pairing by position is unchanged, which is
  only allowed when the two eyes are nested or disjoint (normality); or
+ passes: the strands swap places and the pairing is conjugated by (k k+1).

The two strands of a single eye never cross. A ruling is a choice at every
crossing that ends at the nested pairing required by the right cusps.
Rulings are counted by their number of switches; the DP keeps, for each
reachable pairing, the distribution of switch counts so far.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
from bpsrulings import braidcore
from bpsrulings import errors
from bpsrulings import exactalg

# Involutions on 2 * 8 points number 2,027,025.
MAX_STRANDS = 8


def _pack(partners):
  code = 0
  for j in reversed(partners):
    code = (code << 4) | (j - 1)
  return code


class RulingState(tuple):
  """Fixed-point-free involution on the points 1..2n of a slice.

  Entry i - 1 is the partner of point i.
  """

  def __new__(cls, partners):
    partners = tuple(partners)
    size = len(partners)
    if size % 2:
      raise ValueError('A ruling state needs an even number of points.')
    for i, j in enumerate(partners, 1):
      if not 1 <= j <= size or j == i or partners[j - 1] != i:
        raise ValueError('{} is not a fixed-point-free involution.'
                         .format(partners))
    return super(RulingState, cls).__new__(cls, partners)

  @classmethod
  def _trusted(cls, partners):
    return tuple.__new__(cls, partners)

  @classmethod
  def nested(cls, n):
    return cls._trusted(2 * n + 1 - i for i in range(1, 2 * n + 1))

  @classmethod
  def from_pairs(cls, pairs):
    """Builds a state from pairs of 1-based points, e.g. [(1, 4), (2, 3)]."""
    partners = [0] * (2 * len(pairs))
    for i, j in pairs:
      partners[i - 1] = j
      partners[j - 1] = i
    return cls(partners)

  def partner(self, i):
    return self[i - 1]

  def pairs(self):
    return tuple((i, j) for i, j in enumerate(self, 1) if i < j)

  def pack(self):
    """Canonical integer encoding: partner - 1 in 4 bits per point."""
    return _pack(self)

  @classmethod
  def unpack(cls, code, size):
    """Inverse of `pack` for a state on `size` points."""
    partners = []
    for _ in range(size):
      partners.append((code & 15) + 1)
      code >>= 4
    return cls._trusted(partners)

  def __repr__(self):
    return 'RulingState({})'.format(self.pairs())


class SwitchDistribution(dict):
  """Map from switch count to the number of rulings with that many switches."""

  def total(self):
    return sum(self.values())

  def has_uniform_parity(self):
    return len({s % 2 for s in self}) <= 1


def initial_state(n):
  """The nested pairing cut out by n nested left cusps."""
  if n < 1:
    raise ValueError('initial_state needs n >= 1, got {}.'.format(n))
  return RulingState.nested(n)


def switch_allowed(state, k):
  """Whether a switch at the crossing of points k and k+1 is normal.

  Args:
    state: RulingState.
    k: Point index with 1 <= k <= n - 1.

  Returns:
    True iff k and k+1 are not partners and the eyes through them, as
    intervals [min, max], are nested or disjoint.
  """
  a = state[k - 1]
  b = state[k]
  if a == k + 1:
    return False
  lo1, hi1 = min(k, a), max(k, a)
  lo2, hi2 = min(k + 1, b), max(k + 1, b)
  nested = (lo1 < lo2 and hi2 < hi1) or (lo2 < lo1 and hi1 < hi2)
  disjoint = hi1 < lo2 or hi2 < lo1
  return nested or disjoint


def _pass_through(state, k):
  """Conjugates the pairing by the transposition (k k+1)."""
  a = state[k - 1]
  b = state[k]
  partners = list(state)
  partners[k - 1] = b
  partners[k] = a
  partners[a - 1] = k + 1
  partners[b - 1] = k
  return tuple(partners)


def step(state, k, switch):
  """Advances a ruling state across the crossing sigma_k.

  Args:
    state: RulingState.
    k: Crossing position with 1 <= k <= n - 1.
    switch: Whether the ruling switches at this crossing.

  Returns:
    The next RulingState, or None if the choice is not allowed.
  """
  if state[k - 1] == k + 1:
    return None
  if switch:
    return state if switch_allowed(state, k) else None
  return RulingState._trusted(_pass_through(state, k))  # pylint: disable=protected-access


def _check_resources(word):
  if word.strands > MAX_STRANDS:
    raise errors.ResourceExceeded(
        'Ruling enumeration supports at most {} strands, got {}.'.format(
            MAX_STRANDS, word.strands))


def _merge(target, code, dist, shift):
  bucket = target.setdefault(code, {})
  for s, count in dist.items():
    bucket[s + shift] = bucket.get(s + shift, 0) + count


def final_state_distribution(word):
  """Runs the DP without the final-state filter.

  Args:
    word: BraidWord on at most MAX_STRANDS strands.

  Returns:
    Dict mapping every reachable final RulingState to the SwitchDistribution
    of the choice sequences that end there.

  Raises:
    ResourceExceeded: If the word has more than MAX_STRANDS strands.
  """
  _check_resources(word)
  size = 2 * word.strands
  layer = {initial_state(word.strands).pack(): {0: 1}}
  for k in word.letters:
    next_layer = {}
    for code, dist in layer.items():
      state = RulingState.unpack(code, size)
      if state[k - 1] == k + 1:
        continue
      if switch_allowed(state, k):
        _merge(next_layer, code, dist, 1)
      _merge(next_layer, _pack(_pass_through(state, k)), dist, 0)
    layer = next_layer
  logging.vlog(1, 'Ruling DP for %s ended in %d states.',
               braidcore.format_word(word), len(layer))
  return {RulingState.unpack(code, size): SwitchDistribution(dist)
          for code, dist in layer.items()}


def enumerate_rulings(word):
  """Counts the normal rulings of the rainbow closure by switch number.

  Args:
    word: BraidWord on at most MAX_STRANDS strands.

  Returns:
    SwitchDistribution of the choice sequences ending at the nested state.

  Raises:
    ResourceExceeded: If the word has more than MAX_STRANDS strands.
  """
  final = final_state_distribution(word)
  return final.get(initial_state(word.strands), SwitchDistribution())


def enumerate_exhaustive(word):
  """Counts rulings by walking every switch subset; no memoization."""
  _check_resources(word)
  start = initial_state(word.strands)
  letters = word.letters
  counts = SwitchDistribution()

  def walk(state, position, switches):
    if position == len(letters):
      if state == start:
        counts[switches] = counts.get(switches, 0) + 1
      return
    for switch in (True, False):
      following = step(state, letters[position], switch)
      if following is not None:
        walk(following, position + 1, switches + int(switch))

  walk(start, 0, 0)
  return counts


def ruling_poly(word):
  """R(z) = sum over rulings of z^(switches - n)."""
  dist = enumerate_rulings(word)
  return exactalg.ZLaurent({s - word.strands: c for s, c in dist.items()})


def normalized_ruling_poly(word):
  """R~(z) = z^ell R(z) as the coefficient sequence of a polynomial in z^2.

  Args:
    word: BraidWord on at most MAX_STRANDS strands.

  Returns:
    BpsSequence (a_0, ..., a_d) with R~(z) = sum_j a_j z^(2j).

  Raises:
    NotEvenPolynomial: If z^ell R(z) has an odd or negative power of z. This
      cannot happen for rainbow closures.
  """
  ell = braidcore.closure_components(word)
  normalized = ruling_poly(word).shift(ell)
  coeffs = normalized.coeffs
  if any(e % 2 or e < 0 for e in coeffs):
    raise errors.NotEvenPolynomial(
        'z^{} R(z) = {} for {} is not a polynomial in z^2.'.format(
            ell, normalized, braidcore.format_word(word)))
  sequence = [0] * (normalized.degree // 2 + 1)
  for e, c in coeffs.items():
    sequence[e // 2] = c
  return exactalg.BpsSequence(sequence)


def bps_from_braid(word):
  """BPS invariants (n_0, ..., n_delta) read off the normalized ruling poly."""
  return normalized_ruling_poly(word)
