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

"""Sequence predicates: log-concavity, internal zeros and unimodality.

A sequence (a_0, ..., a_d) of nonnegative integers is

+ log-concave if a_j^2 >= a_{j-1} a_{j+1} for 0 < j < d;
+ free of internal zeros if no zero lies strictly between two nonzero
  entries;
+ unimodal if it weakly increases up to some index and weakly decreases
  after it.

The first two properties together imply the third, and both survive
multiplication of the generating polynomials (`convolve`).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import functools

from bpsrulings import errors

LOG_CONCAVE = 'log_concave'
INTERNAL_ZERO = 'internal_zero'
UNIMODAL = 'unimodal'


class ConjectureReport(
    collections.namedtuple(
        'ConjectureReport',
        ['log_concave', 'no_internal_zeros', 'unimodal', 'first_violation'])):
  """Outcome of the three sequence predicates on one sequence.

  `first_violation` is None when all predicates hold, and otherwise a pair
  `(kind, index)` where kind is one of 'log_concave', 'internal_zero' or
  'unimodal', checked in that order.
  """
  __slots__ = ()

  @property
  def all_hold(self):
    return self.log_concave and self.no_internal_zeros and self.unimodal


def _checked(sequence):
  sequence = tuple(sequence)
  for i, value in enumerate(sequence):
    if value < 0:
      raise errors.NegativeEntry(
          'Entry {} of {} is negative.'.format(i, sequence))
  return sequence


def _log_concave_violation(a):
  for j in range(1, len(a) - 1):
    if a[j] * a[j] < a[j - 1] * a[j + 1]:
      return j
  return None


def _internal_zero_violation(a):
  support = [i for i, value in enumerate(a) if value]
  if not support:
    return None
  for i in range(support[0], support[-1] + 1):
    if not a[i]:
      return i
  return None


def _unimodal_violation(a):
  i = 0
  while i + 1 < len(a) and a[i] <= a[i + 1]:
    i += 1
  while i + 1 < len(a) and a[i] >= a[i + 1]:
    i += 1
  return i + 1 if i + 1 < len(a) else None


def is_log_concave(sequence):
  """Whether a_j^2 >= a_{j-1} a_{j+1} at every interior index.

  Args:
    sequence: Iterable of nonnegative integers.

  Returns:
    bool. Sequences of length at most 2 are log-concave.

  Raises:
    NegativeEntry: If an entry is negative.
  """
  return _log_concave_violation(_checked(sequence)) is None


def no_internal_zeros(sequence):
  """Whether no zero sits strictly between two nonzero entries.

  Leading and trailing zeros are allowed.

  Raises:
    NegativeEntry: If an entry is negative.
  """
  return _internal_zero_violation(_checked(sequence)) is None


def is_unimodal(sequence):
  """Whether the sequence weakly increases and then weakly decreases.

  Raises:
    NegativeEntry: If an entry is negative.
  """
  return _unimodal_violation(_checked(sequence)) is None


def conjecture_report(sequence):
  """Evaluates all three predicates and locates the first violation.

  Args:
    sequence: Iterable of nonnegative integers, typically a BpsSequence.

  Returns:
    ConjectureReport.

  Raises:
    NegativeEntry: If an entry is negative.
    InvariantError: If the sequence is log-concave without internal zeros
      but not unimodal.

  #### Examples

  ```python
  conjecture_report((2, 0, 0, 1))
  # ==> ConjectureReport(log_concave=True, no_internal_zeros=False,
  #                      unimodal=False, first_violation=('internal_zero', 1))
  ```
  """
  a = _checked(sequence)
  violations = [
      (LOG_CONCAVE, _log_concave_violation(a)),
      (INTERNAL_ZERO, _internal_zero_violation(a)),
      (UNIMODAL, _unimodal_violation(a)),
  ]
  log_concave, zero_free, unimodal = [index is None for _, index in violations]
  if log_concave and zero_free and not unimodal:
    raise errors.InvariantError(
        '{} is log-concave without internal zeros but not unimodal.'.format(a))
  first_violation = None
  for kind, index in violations:
    if index is not None:
      first_violation = (kind, index)
      break
  return ConjectureReport(log_concave, zero_free, unimodal, first_violation)


def convolve(a, b):
  """Coefficients of the product of the polynomials with coefficients a, b."""
  a = tuple(a)
  b = tuple(b)
  if not a or not b:
    raise ValueError('convolve needs two nonempty sequences.')
  result = [0] * (len(a) + len(b) - 1)
  for i, x in enumerate(a):
    if not x:
      continue
    for j, y in enumerate(b):
      result[i + j] += x * y
  return tuple(result)


def product(*sequences):
  """Iterated `convolve`; the empty product is (1,)."""
  return functools.reduce(convolve, sequences, (1,))
