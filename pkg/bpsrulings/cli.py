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

"""Command-line interface.

Usage:

  bpsrulings ruling 1^2,2^2,3^2,4^2,3^2,2,1@5 --json
  bpsrulings torus 3 4
  bpsrulings torus --max_delta=200
  bpsrulings homfly 2 3
  bpsrulings ade E7
  bpsrulings scan --max_strands=4 --max_length=10 --workers=8 --cache=scan.tsv
  bpsrulings check 1,0,1
  bpsrulings indep graph.txt
  bpsrulings regress
  bpsrulings multiply 1^2,2^2,3^2@4 1^2@2 3^2,2,1@4
  bpsrulings multiply --seed=7

Results go to stdout as a human-readable table, or one JSON object per
record with --json, or CSV with --csv. Diagnostics go to stderr. Exit codes:
0 success, 2 usage error, 3 conjecture violation found by a scan or sweep,
4 internal invariant failure.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import csv
import json
import os
import sys

from absl import app
from absl import flags
from absl import logging

from bpsrulings import braidcore
from bpsrulings import closedforms
from bpsrulings import concavity
from bpsrulings import errors
from bpsrulings import exactalg
from bpsrulings import rulingdp
from bpsrulings import scanner

flags.DEFINE_bool('json', False, 'Emit one JSON object per record.')
flags.DEFINE_bool('csv', False, 'Emit CSV with a header row.')
flags.DEFINE_integer('workers', None,
                     'Worker processes for scan. Defaults to the '
                     'BPSRULINGS_WORKERS environment variable, else 1.')
flags.DEFINE_string('cache', None, 'Append-only result cache for scan.')
flags.DEFINE_bool('resume', False, 'Reuse the records already in --cache.')
flags.DEFINE_integer('max_strands', 4, 'Largest strand count for scan.')
flags.DEFINE_integer('max_length', 10, 'Largest word length for scan.')
flags.DEFINE_integer('seed', 0, 'Random seed for randomized self-checks.')
flags.DEFINE_integer('max_delta', None,
                     'With torus: sweep all coprime (n, m) with '
                     '(n-1)(m-1)/2 <= max_delta instead of one pair.')
FLAGS = flags.FLAGS

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3
EXIT_INVARIANT = 4

WORKERS_ENV = 'BPSRULINGS_WORKERS'

RegressionVector = collections.namedtuple('RegressionVector',
                                          ['name', 'sequence', 'source'])

REGRESSION_VECTORS = (
    RegressionVector(
        name='character-variety',
        sequence=exactalg.BpsSequence(
            (0, 0, 0, 0, 2640, 51120, 225000, 461160, 552720, 429340, 227630,
             84340, 21902, 3916, 460, 32, 1)),
        source='stored: z-expansion of a character-variety E-polynomial, '
        'lowest term 2640 z^8'),
    RegressionVector(
        name='E6',
        sequence=exactalg.BpsSequence((5, 10, 6, 1)),
        source='stored: BPS invariants of y^3 + x^4'),
    RegressionVector(
        name='E7',
        sequence=exactalg.BpsSequence((2, 11, 15, 7, 1)),
        source='stored: BPS invariants of y^3 + y x^3'),
    RegressionVector(
        name='E8',
        sequence=exactalg.BpsSequence((7, 21, 21, 8, 1)),
        source='stored: BPS invariants of y^3 + x^5'),
    RegressionVector(
        name='rainbow-1^2,2^2,3^2,4^2,3^2,2,1@5',
        sequence=exactalg.BpsSequence((4, 20, 33, 24, 8, 1)),
        source='stored: (1+z^2)(2+z^2)^2(1+3z^2+z^4)'),
)

_ROW_FIELDS = {
    'ruling': ['word', 'strands', 'e', 'tb', 'mu', 'ell', 'delta',
               'ruling_poly', 'rtilde', 'bps', 'factors', 'log_concave',
               'no_internal_zeros', 'unimodal', 'first_violation'],
    'torus': ['n', 'm', 'delta', 'rtilde', 'bps', 'cross_check',
              'log_concave', 'no_internal_zeros', 'unimodal'],
    'homfly': ['n', 'm', 'homfly', 'homfly_s', 'lowest_a_degree', 'mu',
               'lowest_a_coefficient', 'z_times_ruling_poly', 'cross_check'],
    'ade': ['label', 'delta', 'branches', 'rtilde', 'independence_poly',
            'braid', 'braid_rtilde', 'cross_check', 'log_concave',
            'no_internal_zeros', 'unimodal'],
    'scan': ['word', 'strands', 'ell', 'tb', 'mu', 'rtilde', 'log_concave',
             'no_internal_zeros', 'unimodal', 'first_violation'],
    'check': ['sequence', 'log_concave', 'no_internal_zeros', 'unimodal',
              'first_violation'],
    'indep': ['vertices', 'edges', 'independence_poly'],
    'regress': ['name', 'sequence', 'source', 'log_concave',
                'no_internal_zeros', 'unimodal', 'passed'],
    'multiply': ['beta1', 'gamma', 'beta2', 'combined', 'lhs', 'rhs',
                 'rtilde_lhs', 'rtilde_rhs', 'holds'],
}

# Largest strand count for which commands add a ruling DP cross-check.
_CROSS_CHECK_STRANDS = 6

# Triples checked by `multiply` without arguments.
_RANDOM_TRIPLES = 200


def _report_fields(report):
  return collections.OrderedDict([
      ('log_concave', report.log_concave),
      ('no_internal_zeros', report.no_internal_zeros),
      ('unimodal', report.unimodal),
      ('first_violation', (list(report.first_violation)
                           if report.first_violation else None)),
  ])


def _expect_args(args, count, usage):
  if len(args) != count:
    raise app.UsageError('Usage: bpsrulings {}'.format(usage),
                         exitcode=EXIT_USAGE)


def _parse_int(text, name):
  try:
    return int(text)
  except ValueError:
    raise app.UsageError('{} must be an integer, got {!r}.'.format(name, text),
                         exitcode=EXIT_USAGE)


def _cross_check(expected, actual, what):
  if tuple(expected) != tuple(actual):
    raise errors.InvariantError('{}: closed form {} but ruling DP {}.'.format(
        what, tuple(expected), tuple(actual)))
  return 'ok'


def _cmd_ruling(args):
  """R, R~ and the predicates for one braid word."""
  _expect_args(args, 1, 'ruling <word>')
  word = braidcore.parse_word(args[0])
  record = scanner.evaluate_word(word)
  invariants = braidcore.classical_invariants(word)
  try:
    factors = [list(f) for f in scanner.singlepeak_factors(word)]
    if tuple(concavity.product(*factors)) != tuple(record.rtilde):
      raise errors.InvariantError(
          'Single-peak product {} disagrees with ruling DP {}.'.format(
              factors, tuple(record.rtilde)))
  except errors.NotSinglePeak:
    factors = None
  row = record.to_json_dict()
  row.update(_report_fields(record.report))
  row.update(e=invariants.e, delta=invariants.delta,
             ruling_poly=str(rulingdp.ruling_poly(word)),
             bps=record.rtilde.to_polynomial_string(), factors=factors)
  return [row], EXIT_OK


def _torus_row(n, m, sequence, report):
  if n <= _CROSS_CHECK_STRANDS:
    cross_check = _cross_check(
        sequence, rulingdp.bps_from_braid(braidcore.torus_braid(n, m)),
        'T({}, {})'.format(n, m))
  else:
    cross_check = 'skipped'
  row = collections.OrderedDict([
      ('n', n), ('m', m), ('delta', sequence.delta),
      ('rtilde', list(sequence)), ('bps', sequence.to_polynomial_string()),
      ('cross_check', cross_check)])
  row.update(_report_fields(report))
  return row


def _cmd_torus(args):
  """Closed form of one torus knot, or the sweep up to --max_delta."""
  if FLAGS.max_delta is not None:
    _expect_args(args, 0, 'torus --max_delta=D')
    rows = []
    exit_code = EXIT_OK
    for n, m, sequence, report in closedforms.torus_sweep(FLAGS.max_delta):
      if not (report.log_concave and report.no_internal_zeros):
        exit_code = EXIT_VIOLATION
      row = collections.OrderedDict([
          ('n', n), ('m', m), ('delta', sequence.delta),
          ('rtilde', list(sequence)),
          ('bps', sequence.to_polynomial_string()),
          ('cross_check', 'skipped')])
      row.update(_report_fields(report))
      rows.append(row)
    return rows, exit_code
  _expect_args(args, 2, 'torus <n> <m>')
  n = _parse_int(args[0], 'n')
  m = _parse_int(args[1], 'm')
  sequence = closedforms.torus_rtilde(n, m)
  return [_torus_row(n, m, sequence,
                     concavity.conjecture_report(sequence))], EXIT_OK


def _cmd_homfly(args):
  """Jones' HOMFLY-PT polynomial of T(n, m) and its lowest a-coefficient."""
  _expect_args(args, 2, 'homfly <n> <m>')
  n = _parse_int(args[0], 'n')
  m = _parse_int(args[1], 'm')
  poly = closedforms.torus_homfly(n, m)
  mu = (n - 1) * (m - 1)
  lowest = poly.lowest_a_degree
  if lowest != mu:
    raise errors.InvariantError(
        'Lowest a-degree of T({}, {}) is {}, expected {}.'.format(
            n, m, lowest, mu))
  lowest_z = exactalg.s_laurent_to_z(poly.a_coefficient(lowest))
  row = collections.OrderedDict([
      ('n', n), ('m', m), ('homfly', closedforms.format_homfly(poly)),
      ('homfly_s', str(poly)), ('lowest_a_degree', lowest),
      ('mu', mu), ('lowest_a_coefficient', str(lowest_z))])
  if n <= _CROSS_CHECK_STRANDS:
    z_ruling = (exactalg.ZLaurent.monomial(1) *
                rulingdp.ruling_poly(braidcore.torus_braid(n, m)))
    if z_ruling != lowest_z:
      raise errors.InvariantError(
          'Lowest a-coefficient {} of T({}, {}) is not z R = {}.'.format(
              lowest_z, n, m, z_ruling))
    row.update(z_times_ruling_poly=str(z_ruling), cross_check='ok')
  else:
    row.update(z_times_ruling_poly=None, cross_check='skipped')
  return [row], EXIT_OK


def _cmd_ade(args):
  """Closed form, Dynkin independence polynomial and braid DP for one label."""
  _expect_args(args, 1, 'ade <label>')
  label = closedforms.AdeLabel.parse(args[0])
  sequence = closedforms.ade_bps(label)
  independent = closedforms.independence_poly(closedforms.ade_graph(label))
  braid = closedforms.ade_braid(label)
  braid_rtilde = rulingdp.bps_from_braid(braid)
  _cross_check(sequence, independent[::-1], '{} independence'.format(label))
  cross_check = _cross_check(sequence, braid_rtilde, '{} braid'.format(label))
  row = collections.OrderedDict([
      ('label', str(label)), ('delta', closedforms.delta_invariant(label)),
      ('branches', closedforms.branches(label)), ('rtilde', list(sequence)),
      ('independence_poly', list(independent)),
      ('braid', braidcore.format_word(braid)),
      ('braid_rtilde', list(braid_rtilde)), ('cross_check', cross_check)])
  row.update(_report_fields(concavity.conjecture_report(sequence)))
  return [row], EXIT_OK


def _resolve_workers():
  """--workers if given, else $BPSRULINGS_WORKERS, else 1."""
  if FLAGS.workers is not None:
    return FLAGS.workers
  text = os.environ.get(WORKERS_ENV, '1')
  try:
    return int(text)
  except ValueError:
    raise app.UsageError(
        '{} must be an integer, got {!r}.'.format(WORKERS_ENV, text),
        exitcode=EXIT_USAGE)


def _cmd_scan(args):
  """Conjecture scan over canonical positive braid words."""
  _expect_args(args, 0, 'scan [--max_strands=N --max_length=L ...]')
  config = scanner.ScanConfig(
      max_strands=FLAGS.max_strands, max_length=FLAGS.max_length,
      workers=_resolve_workers(), cache_path=FLAGS.cache, resume=FLAGS.resume)
  rows = []
  violations = 0
  for record in scanner.scan(config):
    if record.is_violation:
      violations += 1
    row = record.to_json_dict()
    row.update(_report_fields(record.report))
    if FLAGS.json or FLAGS.csv or record.is_violation:
      rows.append(row)
  logging.info('Scan finished with %d violations.', violations)
  if not (FLAGS.json or FLAGS.csv):
    print('violations: {}'.format(violations))
  return rows, EXIT_VIOLATION if violations else EXIT_OK


def _cmd_check(args):
  """Predicates on a user-supplied comma-separated sequence."""
  _expect_args(args, 1, 'check <c0,c1,...>')
  try:
    sequence = tuple(int(c) for c in args[0].split(','))
  except ValueError:
    raise app.UsageError('Bad sequence {!r}.'.format(args[0]),
                         exitcode=EXIT_USAGE)
  row = collections.OrderedDict([('sequence', list(sequence))])
  row.update(_report_fields(concavity.conjecture_report(sequence)))
  return [row], EXIT_OK


def _cmd_indep(args):
  """Independence polynomial of a forest given as an edge-list file."""
  _expect_args(args, 1, 'indep <edge-file>')
  with open(args[0]) as f:
    graph = closedforms.DynkinGraph.from_edge_list(f.read())
  row = collections.OrderedDict([
      ('vertices', graph.num_vertices),
      ('edges', [list(edge) for edge in graph.edges]),
      ('independence_poly', list(closedforms.independence_poly(graph)))])
  return [row], EXIT_OK


def regress():
  """Evaluates the predicates on every stored regression vector.

  Returns:
    List of (RegressionVector, passed) pairs.
  """
  results = []
  for vector in REGRESSION_VECTORS:
    report = concavity.conjecture_report(vector.sequence)
    results.append((vector, report.all_hold))
  return results


def _cmd_regress(args):
  _expect_args(args, 0, 'regress')
  rows = []
  exit_code = EXIT_OK
  for vector, passed in regress():
    if not passed:
      logging.error('Regression vector %s fails: %s.', vector.name,
                    vector.sequence)
      exit_code = EXIT_INVARIANT
    row = collections.OrderedDict([
        ('name', vector.name), ('sequence', list(vector.sequence)),
        ('source', vector.source)])
    row.update(_report_fields(concavity.conjecture_report(vector.sequence)))
    row['passed'] = passed
    rows.append(row)
  return rows, exit_code


def _multiply_row(beta1, gamma, beta2):
  holds = scanner.verify_multiplicativity(beta1, gamma, beta2)
  total = beta1.strands + gamma.strands - 1
  combined = (beta1.with_strands(total) +
              braidcore.shift_embed(gamma, beta1.strands) +
              beta2.with_strands(total))
  flanks = beta1 + beta2
  rhs = (exactalg.ZLaurent.monomial(1) * rulingdp.ruling_poly(gamma) *
         rulingdp.ruling_poly(flanks))
  return collections.OrderedDict([
      ('beta1', braidcore.format_word(beta1)),
      ('gamma', braidcore.format_word(gamma)),
      ('beta2', braidcore.format_word(beta2)),
      ('combined', braidcore.format_word(combined)),
      ('lhs', str(rulingdp.ruling_poly(combined))), ('rhs', str(rhs)),
      ('rtilde_lhs', list(rulingdp.normalized_ruling_poly(combined))),
      ('rtilde_rhs', list(concavity.convolve(
          rulingdp.normalized_ruling_poly(gamma),
          rulingdp.normalized_ruling_poly(flanks)))),
      ('holds', holds)])


def _cmd_multiply(args):
  """Multiplicativity of R across a shared strand.

  With three words, checks that triple. Without arguments, checks
  _RANDOM_TRIPLES random triples drawn with --seed.
  """
  if args:
    _expect_args(args, 3, 'multiply [<beta1> <gamma> <beta2>]')
    triples = [tuple(braidcore.parse_word(text) for text in args)]
  else:
    triples = scanner.random_triples(FLAGS.seed, _RANDOM_TRIPLES)
  rows = [_multiply_row(*triple) for triple in triples]
  if not all(row['holds'] for row in rows):
    return rows, EXIT_INVARIANT
  return rows, EXIT_OK


_COMMANDS = collections.OrderedDict([
    ('ruling', _cmd_ruling),
    ('torus', _cmd_torus),
    ('homfly', _cmd_homfly),
    ('ade', _cmd_ade),
    ('scan', _cmd_scan),
    ('check', _cmd_check),
    ('indep', _cmd_indep),
    ('regress', _cmd_regress),
    ('multiply', _cmd_multiply),
])


def _csv_value(value):
  if isinstance(value, (list, tuple)):
    return ' '.join(str(v) for v in value)
  return value


def _emit(command, rows):
  """Writes result rows to stdout in the selected format."""
  fields = _ROW_FIELDS[command]
  if FLAGS.json:
    for row in rows:
      print(json.dumps(row))
  elif FLAGS.csv:
    writer = csv.DictWriter(sys.stdout, fieldnames=fields,
                            extrasaction='ignore', lineterminator='\n')
    writer.writeheader()
    for row in rows:
      writer.writerow({key: _csv_value(row.get(key)) for key in fields})
  else:
    width = max(len(key) for key in fields) + 2
    for i, row in enumerate(rows):
      if i:
        print()
      for key in fields:
        if key in row:
          print('{:<{width}}{}'.format(key + ':', row[key], width=width))


def main(argv):
  if len(argv) < 2 or argv[1] not in _COMMANDS:
    raise app.UsageError(
        'Expected one of the commands: {}.'.format(', '.join(_COMMANDS)),
        exitcode=EXIT_USAGE)
  if FLAGS.json and FLAGS.csv:
    raise app.UsageError('--json and --csv are exclusive.',
                         exitcode=EXIT_USAGE)
  command = argv[1]
  try:
    rows, exit_code = _COMMANDS[command](argv[2:])
  except errors.InvariantError as e:
    logging.error('Internal invariant failure: %s', e)
    return EXIT_INVARIANT
  except (errors.Error, ValueError, IOError) as e:
    raise app.UsageError(str(e), exitcode=EXIT_USAGE)
  _emit(command, rows)
  return exit_code


def run(argv=None):
  """Console-script entry point."""
  app.run(main, argv=argv)


if __name__ == '__main__':
  app.run(main)
