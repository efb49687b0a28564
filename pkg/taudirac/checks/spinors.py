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

"""Spinor basis and TPC verification suite."""

import itertools

import numpy as np

from taudirac.checks import Result, check
from taudirac.clifford import representation
from taudirac.config import RunConfig
from taudirac.minkowski import sample_momenta
from taudirac.spinor_basis import PlaneWave, antiparticle_wave, basis_residuals, build_basis, tpc_conjugate

BASIS_MOMENTA = 1000
TPC_MOMENTA = 50
TPC_TOLERANCE = 1e-12
TPC_TAUS = (-1.5, -0.25, 0.0, 0.75, 2.0)


@check('spinors')
def orthonormality(config: RunConfig) -> Result:
    """ūu = I₂, v̄v = −I₂, ūv = 0 and completeness at random momenta."""
    gammas = representation(config.representation)
    rng = np.random.default_rng(config.seed)
    metrics = dict.fromkeys(('u_bar_u', 'v_bar_v', 'u_bar_v', 'completeness'), 0.0)
    for p in sample_momenta(rng, BASIS_MOMENTA):
        for key, value in basis_residuals(build_basis(p.p, gammas)).items():
            metrics[key] = max(metrics[key], value)
    worst = max(metrics.values())
    status = worst <= config.tolerance
    return Result(status, f'{BASIS_MOMENTA} momenta, worst {worst:.3e}', metrics)


@check('spinors')
def evenness(config: RunConfig) -> Result:
    """build_basis(p) = build_basis(−p)."""
    gammas = representation(config.representation)
    rng = np.random.default_rng(config.seed + 1)
    worst = 0.0
    for p in sample_momenta(rng, BASIS_MOMENTA):
        a, b = build_basis(p.p, gammas), build_basis(-p.p, gammas)
        worst = max(worst, float(np.abs(a.u - b.u).max()), float(np.abs(a.v - b.v).max()))
    status = worst <= config.tolerance
    return Result(status, f'{BASIS_MOMENTA} momenta, worst {worst:.3e}', {'max_evenness_residual': worst})


@check('spinors')
def tpc_identity(config: RunConfig) -> Result:
    """−iγ⁵f(+)_p(−x, τ) = h(−)_p(x, τ) = −i f(−)_{−p}(x, τ) on a 4⁴ event grid times a τ sweep."""
    gammas = representation(config.representation)
    rng = np.random.default_rng(config.seed + 2)
    events = [np.array(x) for x in itertools.product(np.arange(4) / 4, repeat=4)]
    worst = 0.0
    for p in sample_momenta(rng, TPC_MOMENTA, signs=False):
        conjugated = tpc_conjugate(PlaneWave(p, 1, gammas=gammas), gammas)
        positron = antiparticle_wave(p, gammas=gammas)
        reflected = PlaneWave(p.reflected(), -1, gammas=gammas)
        for x, tau in itertools.product(events, TPC_TAUS):
            h = positron(x, tau)
            worst = max(
                worst,
                float(np.abs(conjugated(x, tau) - h).max()),
                float(np.abs(-1j * reflected(x, tau) - h).max()),
            )
    status = worst <= TPC_TOLERANCE
    metrics = {'max_tpc_residual': worst, 'events': len(events), 'tau_values': len(TPC_TAUS)}
    return Result(
        status, f'{TPC_MOMENTA} momenta x {len(events)} events x {len(TPC_TAUS)} τ, worst {worst:.3e}', metrics
    )
