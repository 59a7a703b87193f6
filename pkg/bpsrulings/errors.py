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

"""Errors raised by bpsrulings.

Contract errors (bad input) subclass `ValueError` as well as `Error`, so
callers that only expect `ValueError` keep working. `InvariantError`s signal
conditions that cannot happen for valid input; seeing one means a bug.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class Error(Exception):
  """Base class for all bpsrulings errors."""


class InvariantError(Error, AssertionError):
  """An internal invariant failed."""


class NotPalindromic(Error, ValueError):
  """A Laurent polynomial in q is not invariant under q -> 1/q."""


class FractionalPower(Error, ValueError):
  """A Laurent polynomial carries an odd power of s = q^(1/2)."""


class NotZExpressible(Error, ValueError):
  """A Laurent polynomial in s is not a polynomial in z = s - 1/s."""


class NotCoprime(Error, ValueError):
  """Torus parameters are not coprime."""


class NotAForest(Error, ValueError):
  """A graph contains a cycle."""


class NegativeEntry(Error, ValueError):
  """A sequence handed to a concavity predicate has a negative entry."""


class StrandMismatch(Error, ValueError):
  """Braid words that must share a strand count do not."""


class NotSinglePeak(Error, ValueError):
  """A braid word has no single-peak decomposition."""


class BraidSyntaxError(Error, ValueError):
  """A braid word string does not parse."""


class CacheCorrupt(Error, ValueError):
  """A complete line of a scan cache does not decode."""


class ResourceExceeded(Error, ValueError):
  """The ruling DP would exceed its state-space bound."""


class DivisionInexact(InvariantError):
  """An exact polynomial division left a nonzero remainder.

  Attributes:
    remainder: The nonzero remainder of the division.
  """

  def __init__(self, message, remainder=None):
    super(DivisionInexact, self).__init__(message)
    self.remainder = remainder


class NotEvenPolynomial(InvariantError):
  """A normalized ruling polynomial is not a polynomial in z^2."""
