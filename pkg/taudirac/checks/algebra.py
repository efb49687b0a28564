""" Copyright 2026 The taudirac Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

"""Clifford algebra verification suite."""

import itertools

import numpy as np

from taudirac.checks import Result, check
from taudirac.clifford import (
    analytic_trace,
    anticommutator_residual,
    gamma5_residual,
    representation,
    slash,
    trace_product,
)
from taudirac.config import RunConfig
from taudirac.minkowski import commutator_residual, dot, sample_momenta

ANTICOMMUTATOR_TOLERANCE = 1e-13
TRACE_TOLERANCE = 1e-12
COMMUTATOR_TOLERANCE = 1e-6


def _result(metric: str, value: float, threshold: float) -> Result:
    status = value <= threshold
    message = f'{metric} {value:.3e} {"<=" if status else ">"} {threshold:.0e}'
    return Result(status, message, {metric: value})


@check('algebra')
def anticommutators(config: RunConfig) -> Result:
    """{γ^μ, γ^ν} = −2g^{μν}I₄ for all index pairs."""
    value = anticommutator_residual(representation(config.representation))
    return _result('max_anticommutator_residual', value, ANTICOMMUTATOR_TOLERANCE)


@check('algebra')
def gamma5(config: RunConfig) -> Result:
    value = gamma5_residual(representation(config.representation))
    return _result('max_gamma5_residual', value, ANTICOMMUTATOR_TOLERANCE)


@check('algebra')
def four_gamma_traces(config: RunConfig) -> Result:
    """All 256 traces Tr(γ^μγ^νγ^ργ^σ) against the contraction rules."""
    gammas = representation(config.representation)
    worst = max(
        abs(trace_product(indices, gammas) - analytic_trace(indices))
        for indices in itertools.product(range(4), repeat=4)
    )
    return _result('max_trace_residual', float(worst), TRACE_TOLERANCE)


@check('algebra')
def slash_squares(config: RunConfig) -> Result:
    gammas = representation(config.representation)
    rng = np.random.default_rng(config.seed)
    worst = 0.0
    for p in sample_momenta(rng, 100):
        square = slash(p.p, gammas) @ slash(p.p, gammas)
        scale = max(1.0, float(p.p[0]) ** 2)
        worst = max(worst, float(np.abs(square + dot(p.p, p.p) * np.eye(4)).max()) / scale)
    return _result('max_slash_square_residual', worst, TRACE_TOLERANCE)


@check('algebra')
def canonical_commutator(config: RunConfig) -> Result:
    """[x^μ, p^ν] = i g^{μν} on plane wave modes by finite differences."""
    rng = np.random.default_rng(config.seed)
    worst = max(
        commutator_residual(rng.normal(size=4), rng.uniform(-1, 1, size=4)) for _ in range(10)
    )
    return _result('max_commutator_residual', float(worst), COMMUTATOR_TOLERANCE)
