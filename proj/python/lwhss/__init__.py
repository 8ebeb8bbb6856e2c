# Copyright 2026 The lwhss Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Linear homomorphic secret sharing from labelweight codes.

The heavy lifting lives in the compiled ``_lwhss`` extension. This wrapper
turns exact ratios into :class:`fractions.Fraction` and adds a few helpers.
"""

from fractions import Fraction

from . import _lwhss
from ._lwhss import (
    Field,
    LabeledCode,
    LwhssError,
    Scheme,
    ball_volume,
    entropy,
    goppa_code,
    hermitian_code,
    privacy_audit,
    rs_code,
    synthesize,
    table,
)

__all__ = [
    "Field",
    "LabeledCode",
    "LwhssError",
    "Scheme",
    "ball_volume",
    "entropy",
    "goppa_code",
    "gv_monte_carlo",
    "hermitian_code",
    "privacy_audit",
    "rate",
    "rs_code",
    "synthesize",
    "table",
]


def rate(obj):
    """Download rate of a code or scheme as a Fraction."""
    num, den = obj.rate
    return Fraction(num, den)


def gv_monte_carlo(q, w, s, delta, epsilon, trials, seed=0):
    """Sample random generators and compare the failure rate with the GV bound.

    ``delta`` may be a Fraction, an int or a string such as ``"1/3"``.
    """
    delta = Fraction(delta)
    return _lwhss.gv_monte_carlo(q, w, s, delta.numerator, delta.denominator, epsilon, trials, seed)
