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

"""Tests for torus, ADE and Dynkin closed forms."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

from absl.testing import absltest
from absl.testing import parameterized
import bpsrulings as br
import numpy as np
from scipy import special

closedforms = br.closedforms
AdeLabel = br.AdeLabel


def _all_labels(max_index):
  labels = [AdeLabel('A', n) for n in range(1, max_index + 1)]
  labels += [AdeLabel('D', n) for n in range(4, max_index + 1)]
  labels += [AdeLabel('E', n) for n in (6, 7, 8)]
  return labels


def _binom(a, b):
  return int(special.comb(a, b, exact=True)) if 0 <= b <= a else 0


def _entry(sequence, k):
  return sequence[k] if 0 <= k < len(sequence) else 0


class TorusTest(parameterized.TestCase):

  @parameterized.parameters(
      (2, 3, (2, 1)),
      (3, 4, (5, 10, 6, 1)),
      (3, 5, (7, 21, 21, 8, 1)),
      (2, 1, (1,)),
      (1, 5, (1,)),
      (2, 5, (3, 4, 1)),
  )
  def testTorusRtilde(self, n, m, expected):
    self.assertEqual(closedforms.torus_rtilde(n, m), expected)

  def testTorusRtildeErrors(self):
    with self.assertRaises(br.errors.NotCoprime):
      closedforms.torus_rtilde(2, 4)
    with self.assertRaises(ValueError):
      closedforms.torus_rtilde(0, 3)

  def testTorusRtildeMatchesRulings(self):
    for n in range(1, 5):
      for m in range(1, 8):
        if math.gcd(n, m) != 1:
          continue
        self.assertEqual(
            closedforms.torus_rtilde(n, m),
            br.bps_from_braid(br.torus_braid(n, m)), msg=(n, m))

  def testTorusRtildeMatchesRulingsUpToDelta40(self):
    for n, m in closedforms.coprime_torus_pairs(40):
      if n > 4:
        continue
      self.assertEqual(
          closedforms.torus_rtilde(n, m),
          br.bps_from_braid(br.torus_braid(n, m)), msg=(n, m))

  def testTorusRtildeIsSymmetric(self):
    self.assertEqual(closedforms.torus_rtilde(3, 7),
                     closedforms.torus_rtilde(7, 3))

  def testCoprimePairs(self):
    self.assertEqual(list(closedforms.coprime_torus_pairs(3)),
                     [(2, 3), (2, 5), (2, 7), (3, 4)])

  def testSweepHasNoViolations(self):
    results = closedforms.torus_sweep(200)
    self.assertNotEmpty(results)
    for n, m, sequence, report in results:
      self.assertEqual(sequence.delta, (n - 1) * (m - 1) // 2)
      self.assertTrue(report.all_hold, msg=(n, m))

  @parameterized.parameters((2, 3), (2, 7), (3, 4), (3, 5), (4, 5))
  def testRootsLieInCyclotomicRange(self, n, m):
    roots = closedforms.torus_w_roots(n, m)
    self.assertLen(roots, (n - 1) * (m - 1) // 2)
    self.assertTrue(np.all(np.abs(roots.imag) <= 1e-6))
    self.assertTrue(np.all(roots.real >= -4 - 1e-6))
    self.assertTrue(np.all(roots.real <= 1e-6))

  def testRootsOfTrefoil(self):
    np.testing.assert_allclose(closedforms.torus_w_roots(2, 3), [-2.])


class HomflyTest(parameterized.TestCase):

  def testTrefoil(self):
    expected = br.AZPoly({(2, 2): 1, (2, -2): 1, (4, 0): -1})
    poly = closedforms.torus_homfly(2, 3)
    self.assertEqual(poly, expected)
    self.assertEqual(
        closedforms.homfly_z_coefficients(poly),
        {2: br.ZLaurent({0: 2, 2: 1}), 4: br.ZLaurent({0: -1})})

  def testUnknot(self):
    self.assertEqual(closedforms.torus_homfly(2, 1), 1)

  def testFormatInZ(self):
    self.assertEqual(
        closedforms.format_homfly(closedforms.torus_homfly(2, 3)),
        '(z^2 + 2)*a^2 - a^4')
    poly = br.AZPoly({(0, 0): 1, (1, 1): 1, (1, -1): -1, (2, 0): 3,
                      (3, 1): -1, (3, -1): 1})
    self.assertEqual(closedforms.format_homfly(poly),
                     '1 + z*a + 3*a^2 - z*a^3')
    self.assertEqual(closedforms.format_homfly(br.AZPoly()), '0')

  @parameterized.parameters((2, 3), (2, 5), (2, 7), (3, 4), (3, 5))
  def testLowestCoefficientIsZTimesRulingPoly(self, n, m):
    poly = closedforms.torus_homfly(n, m)
    mu = (n - 1) * (m - 1)
    self.assertEqual(poly.lowest_a_degree, mu)
    lowest = br.exactalg.s_laurent_to_z(poly.a_coefficient(mu))
    z_ruling = (br.ZLaurent.monomial(1) *
                br.ruling_poly(br.torus_braid(n, m)))
    self.assertEqual(lowest, z_ruling)

  def testErrors(self):
    with self.assertRaises(br.errors.NotCoprime):
      closedforms.torus_homfly(2, 2)
    with self.assertRaises(ValueError):
      closedforms.torus_homfly(1, 3)


class AdeTest(parameterized.TestCase):

  @parameterized.parameters(
      ('E6', (5, 10, 6, 1)),
      ('E7', (2, 11, 15, 7, 1)),
      ('E8', (7, 21, 21, 8, 1)),
      ('D4', (1, 3, 4, 1)),
      ('D5', (2, 6, 5, 1)),
      ('A1', (1, 1)),
      ('A2', (2, 1)),
      ('A4', (3, 4, 1)),
  )
  def testAdeBps(self, text, expected):
    self.assertEqual(closedforms.ade_bps(AdeLabel.parse(text)), expected)

  def testLabels(self):
    self.assertEqual(AdeLabel.parse('E7'), ('E', 7))
    self.assertEqual(str(AdeLabel('d', 5)), 'D5')
    for text in ['E9', 'D3', 'A0', 'X5', 'E', 'Ex']:
      with self.assertRaises(ValueError):
        AdeLabel.parse(text)

  def testTripleAgreement(self):
    for label in _all_labels(12):
      closed = closedforms.ade_bps(label)
      graph = closedforms.independence_poly(closedforms.ade_graph(label))
      braid = br.bps_from_braid(closedforms.ade_braid(label))
      self.assertEqual(tuple(closed), graph[::-1], msg=str(label))
      self.assertEqual(closed, braid, msg=str(label))
      self.assertEqual(closed.delta, closedforms.delta_invariant(label))

  def testMilnorNumberAndBranches(self):
    for label in _all_labels(12):
      delta = closedforms.delta_invariant(label)
      b = closedforms.branches(label)
      self.assertEqual(2 * delta + 1 - b, label.index, msg=str(label))
      invariants = br.classical_invariants(closedforms.ade_braid(label))
      self.assertEqual(invariants.mu, label.index, msg=str(label))
      self.assertEqual(invariants.ell, b, msg=str(label))

  def testBraids(self):
    self.assertEqual(closedforms.ade_braid(AdeLabel('A', 2)),
                     br.BraidWord(2, [1, 1, 1]))
    self.assertEqual(closedforms.ade_braid(AdeLabel('D', 5)),
                     br.BraidWord(3, [1, 1, 1, 2, 1, 1, 2]))
    self.assertEqual(closedforms.ade_braid(AdeLabel('E', 8)),
                     br.BraidWord(3, [1, 1, 1, 1, 1, 2, 1, 1, 1, 2]))

  def testGraphs(self):
    self.assertEqual(closedforms.ade_graph(AdeLabel('A', 2)).edges, ((1, 2),))
    self.assertEqual(closedforms.ade_graph(AdeLabel('D', 4)).edges,
                     ((1, 2), (2, 3), (2, 4)))
    self.assertEqual(closedforms.ade_graph(AdeLabel('E', 6)).edges,
                     ((1, 2), (2, 3), (3, 4), (3, 6), (4, 5)))

  def testTwoStrand(self):
    self.assertEqual(closedforms.two_strand_bps(0), (1,))
    self.assertEqual(closedforms.two_strand_bps(1), (1,))
    self.assertEqual(closedforms.two_strand_bps(3), (2, 1))
    with self.assertRaises(ValueError):
      closedforms.two_strand_bps(-1)

  def testLogConcaveUpToIndex2000(self):
    for n in range(1, 2001):
      for label in [AdeLabel('A', n)] + ([AdeLabel('D', n)] if n >= 4 else []):
        sequence = closedforms.ade_bps(label)
        self.assertLen(sequence, closedforms.delta_invariant(label) + 1)
        self.assertTrue(br.is_log_concave(sequence), msg=str(label))
        self.assertTrue(br.no_internal_zeros(sequence), msg=str(label))

  def testMatchesBinomialFormulas(self):
    for n in range(1, 120):
      delta = closedforms.delta_invariant(AdeLabel('A', n))
      top = delta if n % 2 else delta + 1
      self.assertEqual(
          closedforms.ade_bps(AdeLabel('A', n)),
          tuple(_binom(top + h, delta - h) for h in range(delta + 1)),
          msg=n)
    for n in range(4, 120):
      delta = closedforms.delta_invariant(AdeLabel('D', n))
      shift = 2 if n % 2 else 3
      expected = tuple(
          _binom(delta + h - shift, delta - h) +
          2 * _binom(delta + h - shift, delta - h - 1) +
          _binom(delta + h - shift + 1, delta - h - 2)
          for h in range(delta + 1))
      self.assertEqual(closedforms.ade_bps(AdeLabel('D', n)), expected, msg=n)

  @parameterized.parameters('A1999', 'A2000', 'D1999', 'D2000')
  def testLogConcaveAtLargeIndex(self, text):
    sequence = closedforms.ade_bps(AdeLabel.parse(text))
    self.assertTrue(br.conjecture_report(sequence).all_hold)


class IndependencePolyTest(parameterized.TestCase):

  def testSmallGraphs(self):
    self.assertEqual(
        closedforms.independence_poly(closedforms.DynkinGraph(1)), (1, 1))
    self.assertEqual(
        closedforms.independence_poly(closedforms.DynkinGraph(0)), (1,))
    self.assertEqual(
        closedforms.independence_poly(
            closedforms.DynkinGraph(3, [(1, 2), (2, 3)])), (1, 3, 1))
    self.assertEqual(
        closedforms.independence_poly(
            closedforms.ade_graph(AdeLabel('D', 4))), (1, 4, 3, 1))
    self.assertEqual(
        closedforms.independence_poly(
            closedforms.DynkinGraph(4, [(1, 2), (3, 4)])), (1, 4, 4))

  def testCycleIsRejected(self):
    triangle = closedforms.DynkinGraph(3, [(1, 2), (2, 3), (1, 3)])
    self.assertFalse(triangle.is_forest())
    with self.assertRaises(br.errors.NotAForest):
      closedforms.independence_poly(triangle)

  def testInvalidEdges(self):
    with self.assertRaises(ValueError):
      closedforms.DynkinGraph(2, [(1, 3)])
    with self.assertRaises(ValueError):
      closedforms.DynkinGraph(2, [(2, 2)])

  def testEdgeListText(self):
    graph = closedforms.DynkinGraph.from_edge_list('1 2\n2 3\n# note\n\n5\n')
    self.assertEqual(graph.num_vertices, 5)
    self.assertEqual(graph.edges, ((1, 2), (2, 3)))
    self.assertEqual(closedforms.independence_poly(graph), (1, 5, 8, 5, 1))
    for text in ['1 x', '1 2 3', '0 1']:
      with self.assertRaises(ValueError):
        closedforms.DynkinGraph.from_edge_list(text)

  @parameterized.parameters(range(4, 13))
  def testDnRecursion(self, n):
    d_n = closedforms.independence_poly(
        closedforms.ade_graph(AdeLabel('D', n)))
    a_big = closedforms.independence_poly(
        closedforms.ade_graph(AdeLabel('A', n - 1)))
    a_small = closedforms.independence_poly(
        closedforms.ade_graph(AdeLabel('A', n - 3)))
    for k in range(len(d_n) + 2):
      self.assertEqual(
          _entry(d_n, k),
          _entry(a_big, k) + _entry(a_small, k - 1) + _entry(a_small, k - 2),
          msg=(n, k))


class TypeDAlgebraTest(parameterized.TestCase):

  @parameterized.parameters((4, 2, 12), (10, 3, 342), (5, 0, 210))
  def testF(self, n, k, expected):
    self.assertEqual(closedforms.d_poly_f(n, k), expected)

  def testFExpansions(self):
    self.assertEqual(closedforms.d_poly_F(4, 0), -3168)
    for n in range(4, 101):
      for k in range(0, n + 1):
        f = closedforms.d_poly_f
        self.assertEqual(closedforms.d_poly_f_expanded(n, k), f(n, k))
        self.assertEqual(closedforms.d_poly_F(n, k),
                         f(n, k - 1) * f(n, k + 1) - f(n, k)**2)

  def testDiscreteTaylorIdentity(self):
    for n, k in [(7, 2), (10, 3), (25, 11)]:
      f = closedforms.d_poly_f(n, k)
      df = -3 * k**2 + 2 * (5 * n + 1) * k - (4 * n**2 + 7 * n)
      ddf = -6 * k + 2 * (5 * n + 1)
      self.assertEqual(4 * closedforms.d_poly_F(n, k),
                       4 * f * ddf - 4 * df**2 + ddf**2 + 8 * df - 4)

  @parameterized.parameters((4, 2, 3), (8, 3, 21), (4, 0, 1), (9, 0, 1),
                            (4, 1, 4), (4, 5, 0))
  def testMkDn(self, n, k, expected):
    self.assertEqual(closedforms.mk_dn(n, k), expected)

  def testMkDnCountsIndependentSets(self):
    for n in range(4, 13):
      graph = closedforms.independence_poly(
          closedforms.ade_graph(AdeLabel('D', n)))
      for k in range(len(graph) + 2):
        self.assertEqual(closedforms.mk_dn(n, k), _entry(graph, k),
                         msg=(n, k))

  def testMkDnFactorialForm(self):
    for n in range(4, 61):
      for k in range(1, (n - 1) // 2 + 1):
        self.assertEqual(closedforms.mk_dn_factorial(n, k),
                         closedforms.mk_dn(n, k), msg=(n, k))
    with self.assertRaises(ValueError):
      closedforms.mk_dn_factorial(4, 4)

  def testMiddleValues(self):
    for k in range(2, 31):
      n = 2 * k
      self.assertEqual(
          closedforms.d_middle_values(k),
          tuple(closedforms.mk_dn(n, j) for j in (k - 1, k, k + 1)))

  def testMkDnLogConcave(self):
    for n in range(4, 200):
      sequence = [closedforms.mk_dn(n, k) for k in range(n // 2 + 2)]
      self.assertTrue(br.is_log_concave(sequence), msg=n)


class TypeAOddTest(parameterized.TestCase):

  def testRecurrenceMatchesBinomials(self):
    for delta in range(0, 51):
      self.assertEqual(closedforms.a_odd_recurrence(delta),
                       closedforms.a_odd_polynomial(delta), msg=delta)

  def testPolynomialIsTheBpsSequence(self):
    for delta in range(1, 30):
      self.assertEqual(
          closedforms.a_odd_polynomial(delta),
          tuple(closedforms.ade_bps(AdeLabel('A', 2 * delta - 1))))

  def testSmallPolynomials(self):
    self.assertEqual(closedforms.a_odd_polynomial(1), (1, 1))
    self.assertEqual(closedforms.a_odd_polynomial(2), (1, 3, 1))

  def testFactorRoots(self):
    np.testing.assert_allclose(closedforms.a_odd_factor_roots(1), [1.])
    for delta in range(1, 21):
      roots = closedforms.a_odd_factor_roots(delta)
      self.assertLen(roots, delta)
      self.assertTrue(all(0 < r < 4 for r in roots))
      self.assertTrue(closedforms.a_odd_factorization_check(delta),
                      msg=delta)
    with self.assertRaises(ValueError):
      closedforms.a_odd_factor_roots(0)

  def testGapIsPositive(self):
    self.assertEqual(closedforms.a_odd_gap(1, 0), 1)
    self.assertEqual(closedforms.a_odd_gap(2, 1), 8)
    for delta in range(1, 31):
      for h in range(delta + 1):
        self.assertGreater(closedforms.a_odd_gap(delta, h), 0)


if __name__ == '__main__':
  absltest.main()
