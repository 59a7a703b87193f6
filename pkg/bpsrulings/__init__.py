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

"""BPS invariants of planar curve singularities from normal rulings.

The BPS invariants of a planar curve singularity are the coefficients of the
normalized ruling polynomial of its Legendrian link, presented as the
rainbow closure of a positive braid. This package computes ruling
polynomials exactly, evaluates the closed forms for torus knots and ADE
singularities, and tests the coefficient sequences for log-concavity.

```python
import bpsrulings as br

word = br.parse_word('1^2,2^2,3^2,4^2,3^2,2,1@5')
br.bps_from_braid(word)  # ==> (4, 20, 33, 24, 8, 1)
br.conjecture_report(br.torus_rtilde(3, 4))
```

The command line lives in `bpsrulings.cli`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from bpsrulings import braidcore
from bpsrulings import closedforms
from bpsrulings import concavity
from bpsrulings import errors
from bpsrulings import exactalg
from bpsrulings import rulingdp
from bpsrulings import scanner
from bpsrulings.braidcore import BraidWord
from bpsrulings.braidcore import canonical_rotation
from bpsrulings.braidcore import classical_invariants
from bpsrulings.braidcore import format_word
from bpsrulings.braidcore import parse_word
from bpsrulings.braidcore import single_peak_decompose
from bpsrulings.braidcore import torus_braid
from bpsrulings.closedforms import ade_braid
from bpsrulings.closedforms import ade_bps
from bpsrulings.closedforms import ade_graph
from bpsrulings.closedforms import AdeLabel
from bpsrulings.closedforms import DynkinGraph
from bpsrulings.closedforms import format_homfly
from bpsrulings.closedforms import independence_poly
from bpsrulings.closedforms import torus_homfly
from bpsrulings.closedforms import torus_rtilde
from bpsrulings.concavity import conjecture_report
from bpsrulings.concavity import ConjectureReport
from bpsrulings.concavity import convolve
from bpsrulings.concavity import is_log_concave
from bpsrulings.concavity import is_unimodal
from bpsrulings.concavity import no_internal_zeros
from bpsrulings.exactalg import AZPoly
from bpsrulings.exactalg import BpsSequence
from bpsrulings.exactalg import HalfLaurent
from bpsrulings.exactalg import ZLaurent
from bpsrulings.rulingdp import bps_from_braid
from bpsrulings.rulingdp import enumerate_rulings
from bpsrulings.rulingdp import normalized_ruling_poly
from bpsrulings.rulingdp import ruling_poly
from bpsrulings.scanner import scan
from bpsrulings.scanner import ScanConfig
from bpsrulings.scanner import ScanRecord
from bpsrulings.scanner import singlepeak_eval
from bpsrulings.scanner import verify_multiplicativity
from bpsrulings.version import __version__
from bpsrulings.version import VERSION

__all__ = [
    "AZPoly",
    "AdeLabel",
    "BpsSequence",
    "BraidWord",
    "ConjectureReport",
    "DynkinGraph",
    "HalfLaurent",
    "ScanConfig",
    "ScanRecord",
    "ZLaurent",
    "ade_braid",
    "ade_bps",
    "ade_graph",
    "bps_from_braid",
    "braidcore",
    "canonical_rotation",
    "classical_invariants",
    "closedforms",
    "concavity",
    "conjecture_report",
    "convolve",
    "enumerate_rulings",
    "errors",
    "exactalg",
    "format_homfly",
    "format_word",
    "independence_poly",
    "is_log_concave",
    "is_unimodal",
    "no_internal_zeros",
    "normalized_ruling_poly",
    "parse_word",
    "ruling_poly",
    "rulingdp",
    "scan",
    "scanner",
    "single_peak_decompose",
    "singlepeak_eval",
    "torus_braid",
    "torus_homfly",
    "torus_rtilde",
    "verify_multiplicativity",
    "__version__",
    "VERSION",
]
