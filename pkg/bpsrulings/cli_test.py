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

"""Tests for the command-line interface."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import contextlib
import io
import json
import os

from absl import app
from absl import flags
from absl.testing import absltest
from absl.testing import flagsaver
import bpsrulings as br
from bpsrulings import cli

FLAGS = flags.FLAGS

RAINBOW = '1^2,2^2,3^2,4^2,3^2,2,1@5'


class CliTest(absltest.TestCase):

  def setUp(self):
    super(CliTest, self).setUp()
    if not FLAGS.is_parsed():
      FLAGS.mark_as_parsed()

  def _run(self, *args):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
      exit_code = cli.main(['bpsrulings'] + list(args))
    return exit_code, out.getvalue()

  def _run_json(self, *args):
    with flagsaver.flagsaver(json=True):
      exit_code, output = self._run(*args)
    return exit_code, [json.loads(line) for line in output.splitlines()]

  def testRulingJson(self):
    exit_code, rows = self._run_json('ruling', RAINBOW)
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertLen(rows, 1)
    row = rows[0]
    self.assertEqual(row['rtilde'], [4, 20, 33, 24, 8, 1])
    self.assertEqual((row['ell'], row['tb'], row['mu'], row['delta']),
                     (3, 7, 8, 5))
    self.assertEqual(row['factors'], [[1, 1], [1, 3, 1], [2, 1], [2, 1]])
    self.assertTrue(row['log_concave'])

  def testRulingTable(self):
    exit_code, output = self._run('ruling', '1^3@2')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertIn('rtilde:', output)
    self.assertIn('[2, 1]', output)

  def testTorus(self):
    exit_code, rows = self._run_json('torus', '3', '4')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertEqual(rows[0]['rtilde'], [5, 10, 6, 1])
    self.assertEqual(rows[0]['cross_check'], 'ok')

  def testTorusSweep(self):
    with flagsaver.flagsaver(max_delta=5):
      exit_code, rows = self._run_json('torus')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertLen(rows, len(list(br.closedforms.coprime_torus_pairs(5))))
    self.assertTrue(all(row['log_concave'] for row in rows))

  def testHomfly(self):
    exit_code, rows = self._run_json('homfly', '2', '3')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertEqual(rows[0]['lowest_a_degree'], 2)
    self.assertEqual(rows[0]['cross_check'], 'ok')
    self.assertEqual(rows[0]['homfly'], '(z^2 + 2)*a^2 - a^4')

  def testHomflyTableIsInZ(self):
    exit_code, output = self._run('homfly', '2', '3')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertIn('(z^2 + 2)*a^2 - a^4', output)
    self.assertNotIn('+ -', output)

  def testAde(self):
    exit_code, rows = self._run_json('ade', 'E7')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertEqual(rows[0]['rtilde'], [2, 11, 15, 7, 1])
    self.assertEqual(rows[0]['independence_poly'], [1, 7, 15, 11, 2])
    self.assertEqual(rows[0]['branches'], 2)

  def testCheckReportsWithoutFailing(self):
    exit_code, rows = self._run_json('check', '1,0,1')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertFalse(rows[0]['no_internal_zeros'])
    self.assertEqual(rows[0]['first_violation'], ['log_concave', 1])

  def testIndep(self):
    graph = self.create_tempfile(content='1 2\n2 3\n')
    exit_code, rows = self._run_json('indep', graph.full_path)
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertEqual(rows[0]['independence_poly'], [1, 3, 1])

  def testRegress(self):
    self.assertTrue(all(passed for _, passed in cli.regress()))
    exit_code, rows = self._run_json('regress')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertLen(rows, len(cli.REGRESSION_VECTORS))
    self.assertEqual(rows[0]['sequence'][:5], [0, 0, 0, 0, 2640])

  def testMultiply(self):
    exit_code, rows = self._run_json('multiply', '1^2,2^2,3^2@4', '1^2@2',
                                     '3^2,2,1@4')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertTrue(rows[0]['holds'])
    self.assertEqual(rows[0]['rtilde_lhs'], [4, 20, 33, 24, 8, 1])
    with flagsaver.flagsaver(seed=3):
      exit_code, rows = self._run_json('multiply')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertLen(rows, 200)

  def testScanCsv(self):
    with flagsaver.flagsaver(csv=True, max_strands=2, max_length=4):
      exit_code, output = self._run('scan')
    self.assertEqual(exit_code, cli.EXIT_OK)
    lines = output.splitlines()
    self.assertEqual(lines[0], ','.join(cli._ROW_FIELDS['scan']))
    self.assertLen(lines, 5)
    self.assertTrue(lines[4].startswith('1^4@2,2,'))

  def testScanJsonRowsAreRecords(self):
    with flagsaver.flagsaver(max_strands=3, max_length=4):
      exit_code, rows = self._run_json('scan')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertNotEmpty(rows)
    for row in rows:
      record = br.scanner.record_from_json_dict(row)
      self.assertEqual(record, br.scanner.evaluate_word(record.word))
      line = br.scanner.format_cache_line(record)
      self.assertEqual(br.scanner.parse_cache_line(line), record)
      self.assertEqual(row['rtilde'], list(record.rtilde))

  def _set_workers_env(self, value):
    previous = os.environ.get(cli.WORKERS_ENV)
    os.environ[cli.WORKERS_ENV] = value

    def restore():
      if previous is None:
        os.environ.pop(cli.WORKERS_ENV, None)
      else:
        os.environ[cli.WORKERS_ENV] = previous

    self.addCleanup(restore)

  def testWorkersFromEnvironment(self):
    self._set_workers_env('2')
    with flagsaver.flagsaver(max_strands=2, max_length=3):
      exit_code, rows = self._run_json('scan')
    self.assertEqual(exit_code, cli.EXIT_OK)
    self.assertLen(rows, 3)

  def testMalformedWorkersEnvironmentIsUsageError(self):
    self._set_workers_env('two')
    with flagsaver.flagsaver(max_strands=2, max_length=3):
      with self.assertRaises(app.UsageError) as cm:
        self._run('scan')
    self.assertEqual(cm.exception.exitcode, cli.EXIT_USAGE)
    self.assertIn(cli.WORKERS_ENV, str(cm.exception))
    with flagsaver.flagsaver(max_strands=2, max_length=3, workers=1):
      exit_code, _ = self._run('scan')
    self.assertEqual(exit_code, cli.EXIT_OK)

  def testUsageErrors(self):
    bad_invocations = [
        [],
        ['frobnicate'],
        ['torus', '2', '4'],
        ['torus', 'x', '4'],
        ['ruling', '1,0'],
        ['ruling'],
        ['check', '1,a'],
        ['ade', 'E9'],
        ['indep', '/nonexistent/graph.txt'],
    ]
    for args in bad_invocations:
      with self.assertRaises(app.UsageError, msg=args) as cm:
        self._run(*args)
      self.assertEqual(cm.exception.exitcode, cli.EXIT_USAGE)

  def testResourceBoundIsUsageError(self):
    with flagsaver.flagsaver(max_strands=9):
      with self.assertRaises(app.UsageError):
        self._run('scan')

  def testExclusiveFormats(self):
    with flagsaver.flagsaver(json=True, csv=True):
      with self.assertRaises(app.UsageError):
        self._run('check', '1')


if __name__ == '__main__':
  absltest.main()
