# Copyright 2026 The wpl Authors
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

"""Python front end for the wpl engine."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    InvariantViolation,
    ParseError,
    PreconditionError,
    Quiver,
    SearchFailure,
    UnknownFixture,
    VerificationFailure,
    bundle_class,
    bundle_eq,
    canonical_form,
    delta,
    desuspend,
    euler_lines,
    ext1_dim,
    find_isomorphism,
    fixture_names,
    hom_dim,
    injective_hull,
    normal_form,
    projective_cover,
    reduce_line,
    replacement_verdict,
    search,
    suspend,
)


def weights(value):
    """Accept (p1, p2, p3) or "p1,p2,p3"."""
    if isinstance(value, str):
        value = [int(part) for part in value.split(",")]
    return tuple(value)


def slope(w, bundle):
    num, den = _core.slope(weights(w), bundle)
    return Fraction(num, den)


def replay(kind):
    """Run one of the replays "244", "236", "333" and return the report."""
    return json.loads(_core.replay_json(str(kind)))


def quiver_dict(q):
    return json.loads(q.to_json())


__all__ = [
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "Quiver",
    "SearchFailure",
    "UnknownFixture",
    "VerificationFailure",
    "bundle_class",
    "bundle_eq",
    "canonical_form",
    "delta",
    "desuspend",
    "euler_lines",
    "ext1_dim",
    "find_isomorphism",
    "fixture_names",
    "hom_dim",
    "injective_hull",
    "normal_form",
    "projective_cover",
    "quiver_dict",
    "reduce_line",
    "replacement_verdict",
    "replay",
    "search",
    "slope",
    "suspend",
    "weights",
]
