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

"""Multiplicativity checks, single-peak evaluation and the conjecture scan.

The scan walks positive braid words up to cyclic rotation, computes the
normalized ruling polynomial of each rainbow closure and reports whether its
coefficients are log-concave without internal zeros. Results are streamed to
an append-only cache with one tab-separated line per word:

  word  strands  ell  tb  rtilde  log_concave  no_internal_zeros  unimodal

`word` and `rtilde` are comma-joined decimal integers and the booleans are
'true' or 'false'.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import itertools
import multiprocessing
import os
import time

from absl import logging
import numpy as np

from bpsrulings import braidcore
from bpsrulings import closedforms
from bpsrulings import concavity
from bpsrulings import errors
from bpsrulings import exactalg
from bpsrulings import rulingdp

_TRUE = 'true'
_FALSE = 'false'
_NUM_FIELDS = 8


class ScanConfig(
    collections.namedtuple(
        'ScanConfig',
        ['max_strands', 'max_length', 'workers', 'cache_path', 'resume'])):
  """Parameters of a conjecture scan.

  Attributes:
    max_strands: Largest strand count scanned, 2..rulingdp.MAX_STRANDS.
    max_length: Largest word length scanned, >= 1.
    workers: Number of worker processes, >= 1.
    cache_path: Optional path of the append-only result cache.
    resume: Whether to reuse records already in the cache.
  """
  __slots__ = ()

  def __new__(cls, max_strands, max_length, workers=1, cache_path=None,
              resume=False):
    if max_strands > rulingdp.MAX_STRANDS:
      raise errors.ResourceExceeded(
          'max_strands={} exceeds the ruling DP bound of {} strands.'.format(
              max_strands, rulingdp.MAX_STRANDS))
    if max_strands < 2:
      raise ValueError('max_strands must be >= 2, got {}.'.format(max_strands))
    if max_length < 1:
      raise ValueError('max_length must be >= 1, got {}.'.format(max_length))
    if workers < 1:
      raise ValueError('workers must be >= 1, got {}.'.format(workers))
    if resume and not cache_path:
      raise ValueError('resume needs a cache_path.')
    return super(ScanConfig, cls).__new__(cls, max_strands, max_length,
                                          workers, cache_path, bool(resume))


class ScanRecord(
    collections.namedtuple('ScanRecord',
                           ['word', 'ell', 'tb', 'mu', 'rtilde', 'report'])):
  """Result of one scanned word.

  Attributes:
    word: Canonical-rotation BraidWord.
    ell: Number of components of the closure.
    tb: Thurston-Bennequin number, crossings minus strands.
    mu: tb + 1.
    rtilde: BpsSequence of the normalized ruling polynomial.
    report: ConjectureReport of `rtilde`.
  """
  __slots__ = ()

  @property
  def is_violation(self):
    return not (self.report.log_concave and self.report.no_internal_zeros)

  def to_json_dict(self):
    return {
        'word': braidcore.format_word(self.word),
        'strands': self.word.strands,
        'ell': self.ell,
        'tb': self.tb,
        'mu': self.mu,
        'rtilde': list(self.rtilde),
        'report': {
            'log_concave': self.report.log_concave,
            'no_internal_zeros': self.report.no_internal_zeros,
            'unimodal': self.report.unimodal,
            'first_violation': (list(self.report.first_violation)
                                if self.report.first_violation else None),
        },
    }


def _build_record(word, ell, tb, rtilde, flags=None):
  """Assembles a ScanRecord, checking stored flags against a fresh report."""
  report = concavity.conjecture_report(rtilde)
  if flags is not None and tuple(flags) != tuple(report[:3]):
    raise errors.CacheCorrupt(
        'Stored predicates {} for {} disagree with {}.'.format(
            flags, braidcore.format_word(word), report))
  return ScanRecord(word=word, ell=ell, tb=tb, mu=tb + 1, rtilde=rtilde,
                    report=report)


def record_from_json_dict(obj):
  """Inverse of `ScanRecord.to_json_dict`.

  Raises:
    CacheCorrupt: If a field is missing or inconsistent.
  """
  try:
    word = braidcore.parse_word(obj['word'])
    report = obj['report']
    flags = (report['log_concave'], report['no_internal_zeros'],
             report['unimodal'])
    rtilde = exactalg.BpsSequence(obj['rtilde'])
    record = _build_record(word, int(obj['ell']), int(obj['tb']), rtilde,
                           flags)
  except (KeyError, TypeError, ValueError) as e:
    raise errors.CacheCorrupt('Bad JSON record {!r}: {}'.format(obj, e))
  if record.mu != obj.get('mu', record.mu):
    raise errors.CacheCorrupt('Inconsistent mu in {!r}.'.format(obj))
  return record


def format_cache_line(record):
  """Encodes a ScanRecord as one tab-separated cache line, no newline."""
  fields = [
      ','.join(str(i) for i in record.word.letters),
      str(record.word.strands),
      str(record.ell),
      str(record.tb),
      ','.join(str(c) for c in record.rtilde),
  ] + [_TRUE if flag else _FALSE for flag in record.report[:3]]
  return '\t'.join(fields)


def _parse_bool(text):
  if text == _TRUE:
    return True
  if text == _FALSE:
    return False
  raise ValueError('expected {!r} or {!r}, got {!r}'.format(
      _TRUE, _FALSE, text))


def parse_cache_line(line):
  """Decodes one cache line.

  The word must be in canonical rotation and its classical invariants must
  match the stored ones; the predicates are recomputed and compared.

  Args:
    line: A line without its trailing newline.

  Returns:
    ScanRecord.

  Raises:
    CacheCorrupt: If the line is malformed or inconsistent.
  """
  fields = line.split('\t')
  if len(fields) != _NUM_FIELDS:
    raise errors.CacheCorrupt('Expected {} fields, got {}: {!r}.'.format(
        _NUM_FIELDS, len(fields), line))
  try:
    letters = [int(i) for i in fields[0].split(',')] if fields[0] else []
    word = braidcore.BraidWord(int(fields[1]), letters)
    ell = int(fields[2])
    tb = int(fields[3])
    rtilde = exactalg.BpsSequence(int(c) for c in fields[4].split(','))
    flags = tuple(_parse_bool(text) for text in fields[5:])
  except ValueError as e:
    raise errors.CacheCorrupt('Malformed cache line {!r}: {}'.format(line, e))
  if braidcore.canonical_rotation(word) != word:
    raise errors.CacheCorrupt('{} is not in canonical rotation.'.format(
        braidcore.format_word(word)))
  invariants = braidcore.classical_invariants(word)
  if (invariants.ell, invariants.tb) != (ell, tb):
    raise errors.CacheCorrupt('Stored (ell, tb) = ({}, {}) for {} should be '
                              '({}, {}).'.format(ell, tb,
                                                 braidcore.format_word(word),
                                                 invariants.ell, invariants.tb))
  return _build_record(word, ell, tb, rtilde, flags)


def cache_append(path, record):
  """Appends one record and flushes, so a crash loses at most one line."""
  with open(path, 'a') as f:
    f.write(format_cache_line(record) + '\n')
    f.flush()


def cache_load(path):
  """Loads every complete record of a cache file.

  A missing file loads as empty. A final line without its newline is the
  remains of an interrupted write: it is dropped with a warning.

  Args:
    path: Cache file path.

  Returns:
    Set of ScanRecord.

  Raises:
    CacheCorrupt: On a malformed complete line.
  """
  if not os.path.exists(path):
    return set()
  with open(path) as f:
    content = f.read()
  complete, _, tail = content.rpartition('\n')
  if tail:
    logging.warning('Discarding truncated last line of %s: %r', path, tail)
  records = set()
  for lineno, line in enumerate(complete.split('\n') if complete else [], 1):
    if not line:
      continue
    try:
      records.add(parse_cache_line(line))
    except errors.CacheCorrupt as e:
      raise errors.CacheCorrupt('{}:{}: {}'.format(path, lineno, e))
  logging.info('Loaded %d cached records from %s.', len(records), path)
  return records


def verify_multiplicativity(beta1, gamma, beta2):
  """Checks R(beta1 gamma~ beta2) = z R(gamma) R(beta1 beta2).

  gamma~ is gamma shifted to the top m strands of n + m - 1, so that it
  shares exactly one strand with the flanks. The check is made on ruling
  polynomials and again on normalized ones, where it reads
  R~(beta1 gamma~ beta2) = R~(gamma) R~(beta1 beta2).

  Args:
    beta1: BraidWord on n strands.
    gamma: BraidWord on m strands.
    beta2: BraidWord on n strands.

  Returns:
    True iff both identities hold.

  Raises:
    StrandMismatch: If beta1 and beta2 have different strand counts.
  """
  if beta1.strands != beta2.strands:
    raise errors.StrandMismatch(
        'Flanks live on {} and {} strands.'.format(beta1.strands,
                                                   beta2.strands))
  n = beta1.strands
  total = n + gamma.strands - 1
  combined = (beta1.with_strands(total) +
              braidcore.shift_embed(gamma, n) +
              beta2.with_strands(total))
  flanks = beta1 + beta2
  lhs = rulingdp.ruling_poly(combined)
  rhs = (exactalg.ZLaurent.monomial(1) * rulingdp.ruling_poly(gamma) *
         rulingdp.ruling_poly(flanks))
  normalized_lhs = rulingdp.normalized_ruling_poly(combined)
  normalized_rhs = concavity.convolve(
      rulingdp.normalized_ruling_poly(gamma),
      rulingdp.normalized_ruling_poly(flanks))
  holds = lhs == rhs and tuple(normalized_lhs) == normalized_rhs
  if not holds:
    logging.error('Multiplicativity fails for %s | %s | %s: %s != %s.',
                  braidcore.format_word(beta1), braidcore.format_word(gamma),
                  braidcore.format_word(beta2), lhs, rhs)
  return holds


def random_triples(seed, count, max_strands=3, max_length=6):
  """Draws (beta1, gamma, beta2) triples for multiplicativity checks.

  Args:
    seed: Seed of the `numpy.random.RandomState`.
    count: Number of triples.
    max_strands: Largest strand count of the flanks and of gamma.
    max_length: Largest length of each of the three words.

  Returns:
    List of BraidWord triples; flanks share a strand count n >= 2 and gamma
    has m >= 2 strands.
  """
  rng = np.random.RandomState(seed)

  def draw(strands):
    length = rng.randint(0, max_length + 1)
    return braidcore.BraidWord(
        strands, [int(i) for i in rng.randint(1, strands, size=length)])

  triples = []
  for _ in range(count):
    n = int(rng.randint(2, max_strands + 1))
    m = int(rng.randint(2, max_strands + 1))
    triples.append((draw(n), draw(m), draw(n)))
  return triples


def singlepeak_factors(word):
  """Factors R~ of a single-peak word into two-strand closed forms.

  The peak block is peeled off repeatedly; what remains after each step is
  again single-peak, and a word in sigma_1 alone is the last factor.

  Args:
    word: BraidWord whose grouped indices rise strictly and then fall
      strictly.

  Returns:
    List of BpsSequence, one per peeled block; [(1,)] for the empty word.

  Raises:
    NotSinglePeak: If the grouped indices are not single-peak.
  """
  factors = []
  current = word
  while current.letters:
    current = current.with_strands(max(current.letters) + 1)
    if current.strands == 2:
      factors.append(closedforms.two_strand_bps(current.crossings))
      break
    split = braidcore.single_peak_decompose(current)
    if split is None:
      raise errors.NotSinglePeak(
          '{} has no unique peak.'.format(braidcore.format_word(word)))
    factors.append(closedforms.two_strand_bps(split.gamma.crossings))
    current = split.beta1 + split.beta2
  return factors or [exactalg.BpsSequence((1,))]


def singlepeak_eval(word):
  """R~ of a single-peak word as the product of its `singlepeak_factors`."""
  return exactalg.BpsSequence(concavity.product(*singlepeak_factors(word)))


def evaluate_word(word):
  """Computes the ScanRecord of one word; the unit of work of `scan`."""
  rtilde = rulingdp.normalized_ruling_poly(word)
  if not rtilde.is_nonnegative():
    raise errors.InvariantError('Negative coefficient in {} for {}.'.format(
        rtilde, braidcore.format_word(word)))
  invariants = braidcore.classical_invariants(word)
  return _build_record(word, invariants.ell, invariants.tb, rtilde)


def enumerate_words(config):
  """Yields canonical words ordered by (strands, length, letters).

  Every word is the least rotation of its letters, so each rotation class is
  visited once. Words that skip a generator are kept.
  """
  for strands in range(2, config.max_strands + 1):
    for length in range(1, config.max_length + 1):
      for letters in itertools.product(range(1, strands), repeat=length):
        word = braidcore.BraidWord(strands, letters)
        if braidcore.canonical_rotation(word) == word:
          yield word


def _key(word):
  return word.strands, word.letters


def _drop_partial_tail(path):
  """Truncates `path` just after its last newline."""
  if not os.path.exists(path):
    return
  with open(path, 'rb+') as f:
    content = f.read()
    keep = content.rfind(b'\n') + 1
    if keep < len(content):
      logging.warning('Truncating %s from %d to %d bytes before appending.',
                      path, len(content), keep)
      f.truncate(keep)


def _prepare_cache(config):
  if not config.cache_path:
    return {}
  if config.resume:
    cached = {_key(record.word): record
              for record in cache_load(config.cache_path)}
    _drop_partial_tail(config.cache_path)
    return cached
  if os.path.exists(config.cache_path) and os.path.getsize(config.cache_path):
    logging.warning('Overwriting existing cache %s; pass resume to reuse it.',
                    config.cache_path)
  open(config.cache_path, 'w').close()
  return {}


def _evaluate_all(words, workers):
  """Yields evaluate_word(w) for each w in order."""
  if workers == 1 or len(words) < 2:
    for word in words:
      yield evaluate_word(word)
    return
  chunksize = max(1, len(words) // (workers * 16))
  with multiprocessing.Pool(processes=workers) as pool:
    for record in pool.imap(evaluate_word, words, chunksize=chunksize):
      yield record


def scan(config):
  """Runs the conjecture scan.

  Records come out in the order of `enumerate_words`, independent of the
  number of workers. Fresh records are appended to the cache by this
  process only. Violations are logged with full reproduction data and still
  yielded.

  Args:
    config: ScanConfig.

  Yields:
    ScanRecord per canonical word.

  Raises:
    CacheCorrupt: If a resumed cache has a malformed line.
  """
  cached = _prepare_cache(config)
  words = list(enumerate_words(config))
  pending = [word for word in words if _key(word) not in cached]
  logging.info('Scanning %d canonical words on <= %d strands, length <= %d: '
               '%d cached, %d to compute with %d workers.', len(words),
               config.max_strands, config.max_length,
               len(words) - len(pending), len(pending), config.workers)
  fresh = _evaluate_all(pending, config.workers)
  start_time = time.time()
  computed = 0
  for word in words:
    record = cached.get(_key(word))
    if record is None:
      record = next(fresh)
      computed += 1
      if config.cache_path:
        cache_append(config.cache_path, record)
      time_elapsed = time.time() - start_time
      words_per_sec = computed / max(time_elapsed, 1e-9)
      logging.log_every_n_seconds(
          logging.INFO,
          '%.1f%% completion: %d/%d words. %.1f words/s. ETA: %.0f s.', 30,
          100. * computed / len(pending), computed, len(pending),
          words_per_sec, (len(pending) - computed) / words_per_sec)
    if record.is_violation:
      logging.error('Conjecture violation: word %s, rtilde %s, %s at index %d.',
                    braidcore.format_word(record.word), tuple(record.rtilde),
                    record.report.first_violation[0],
                    record.report.first_violation[1])
    yield record
  fresh.close()
