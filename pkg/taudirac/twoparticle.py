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

"""Two-particle parametrized Dirac states and their currents.

A two-particle state Ψ(x, y, τ) is a 16 component spinor in the tensor
product of two Dirac spaces, slot 1 for event x and slot 2 for event y.
States are finite sums of products c·ψ(x, τ)⊗ξ(y, τ) of single-particle
fields, so the current and its decomposition into single-particle parts
and interference are exact.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
import numpy.typing as npt

from taudirac.clifford import GammaBasis, IDENTITY, Spinor, representation, slash
from taudirac.logger import logger
from taudirac.minkowski import FourVector
from taudirac.spinor_basis import Field, PlaneWave

Potential = Callable[[FourVector], npt.NDArray[np.float64]]

SEPARABLE = 'separable'
ANTISYMMETRIC = 'antisymmetric'
SYMMETRIC = 'symmetric'


@dataclass(frozen=True, slots=True, eq=False)
class TwoParticleState:
    """Sum of products c·ψ(x)⊗ξ(y).

    Attributes:
        terms (tuple): (coefficient, slot 1 field, slot 2 field) triples.
        tag (str): `separable`, `antisymmetric` or `symmetric`.
        gammas (GammaBasis): Representation.
    """

    terms: tuple[tuple[complex, Field, Field], ...]
    tag: str = SEPARABLE
    gammas: GammaBasis | None = None

    def __call__(self, x: FourVector, y: FourVector, tau: float) -> Spinor:
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        total = np.zeros(16, dtype=np.complex128)
        for coefficient, first, second in self.terms:
            total = total + coefficient * np.kron(first(x, tau), second(y, tau))
        return total


def separable(psi: Field, xi: Field, gammas: GammaBasis | None = None) -> TwoParticleState:
    """Return the product state ψ(x)⊗ξ(y)."""
    return TwoParticleState(((1.0, psi, xi),), SEPARABLE, gammas)


def build_entangled(
    psi: Field, xi: Field, sign: int, gammas: GammaBasis | None = None
) -> TwoParticleState:
    """Return Ψ∓ = ψ⊗ξ ∓ ξ⊗ψ.

    Args:
        psi (Callable): First single-particle field.
        xi (Callable): Second single-particle field.
        sign (int): −1 for the antisymmetric Ψ₋, +1 for the symmetric Ψ₊.
        gammas (GammaBasis): (optional) Representation.

    Returns:
        `TwoParticleState`.
    """

    if sign not in (-1, 1):
        raise ValueError(f'sign must be ±1, got {sign}.')
    tag = ANTISYMMETRIC if sign < 0 else SYMMETRIC
    return TwoParticleState(((1.0, psi, xi), (float(sign), xi, psi)), tag, gammas)


def swap_slots(values: Spinor) -> Spinor:
    """Exchange the two spinor slots of a 16 component value."""
    return np.asarray(values).reshape(4, 4).T.ravel()


def two_particle_residual(
    state: TwoParticleState,
    potential: Potential | None,
    point: tuple[FourVector, FourVector, float],
    charges: tuple[float, float] = (-1.0, -1.0),
    step: float = 1e-4,
) -> Spinor:
    """Return (1/i)∂_τΨ + slash(π(x))⊗I₄Ψ + I₄⊗slash(π(y))Ψ.

    π_μ = (1/i)∂_μ − e A_μ for each particle, derivatives by central
    differences.

    Args:
        state (TwoParticleState): State.
        potential (Callable | None): External A^μ(x), None for A = 0.
        point (tuple): (x, y, τ).
        charges (tuple): (optional) Charges e₁, e₂.
        step (float): (optional) Difference step.

    Returns:
        16 component residual, zero for solutions.
    """

    gammas = state.gammas or representation()
    x, y, tau = point
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)

    residual = (state(x, y, tau + step) - state(x, y, tau - step)) / (2 * step)
    for mu in range(4):
        shift = np.zeros(4)
        shift[mu] = step
        d_x = (state(x + shift, y, tau) - state(x - shift, y, tau)) / (2 * step)
        d_y = (state(x, y + shift, tau) - state(x, y - shift, tau)) / (2 * step)
        residual = residual + np.kron(gammas.gamma[mu], IDENTITY) @ d_x
        residual = residual + np.kron(IDENTITY, gammas.gamma[mu]) @ d_y
    residual = -1j * residual

    if potential is not None:
        value = state(x, y, tau)
        e1, e2 = charges
        residual = residual - e1 * np.kron(slash(potential(x), gammas), IDENTITY) @ value
        residual = residual - e2 * np.kron(IDENTITY, slash(potential(y), gammas)) @ value
    return residual


def _bar(value: Spinor, gammas: GammaBasis) -> Spinor:
    return value.conj() @ gammas.gamma[0]


def total_current(
    state: TwoParticleState, x: FourVector, y: FourVector, tau: float
) -> npt.NDArray[np.float64]:
    """Return Ψ̄(γ^λ⊗I₄ + I₄⊗γ^λ)Ψ with Ψ̄ = Ψ†(γ⁰⊗γ⁰)."""
    gammas = state.gammas or representation()
    value = state(x, y, tau)
    bar = value.conj() @ np.kron(gammas.gamma[0], gammas.gamma[0])
    current = [
        bar @ (np.kron(gammas.gamma[lam], IDENTITY) + np.kron(IDENTITY, gammas.gamma[lam])) @ value
        for lam in range(4)
    ]
    return np.real(np.array(current))


def parts_current(
    state: TwoParticleState, x: FourVector, y: FourVector, tau: float
) -> npt.NDArray[np.float64]:
    """Return Σ|c|²[J_ψ(x)ρ_ξ(y) + ρ_ψ(x)J_ξ(y)] over the product terms.

    J = ψ̄γ^λψ is the single-particle current and ρ = ψ̄ψ.
    """

    gammas = state.gammas or representation()
    total = np.zeros(4)
    for coefficient, first, second in state.terms:
        a, b = first(x, tau), second(y, tau)
        a_bar, b_bar = _bar(a, gammas), _bar(b, gammas)
        j_a = np.einsum('i,mij,j->m', a_bar, gammas.gamma, a)
        j_b = np.einsum('i,mij,j->m', b_bar, gammas.gamma, b)
        total = total + abs(coefficient) ** 2 * np.real(j_a * (b_bar @ b) + (a_bar @ a) * j_b)
    return total


def cross_terms(
    state: TwoParticleState, x: FourVector, y: FourVector, tau: float
) -> npt.NDArray[np.float64]:
    """Return the interference of a two-term state from its factor bilinears.

    For Ψ = ψ⊗ξ + sξ⊗ψ this is 2s·Re{[ψ̄γ^λξ](x)[ξ̄ψ](y) + [ψ̄ξ](x)[ξ̄γ^λψ](y)}.
    Product states have no cross terms.
    """

    if len(state.terms) == 1:
        return np.zeros(4)
    gammas = state.gammas or representation()
    (_, psi, xi), (sign, _, _) = state.terms
    psi_x, xi_x, psi_y, xi_y = psi(x, tau), xi(x, tau), psi(y, tau), xi(y, tau)
    psi_x_bar, xi_y_bar = _bar(psi_x, gammas), _bar(xi_y, gammas)
    mixed = (
        np.einsum('i,mij,j->m', psi_x_bar, gammas.gamma, xi_x) * (xi_y_bar @ psi_y)
        + (psi_x_bar @ xi_x) * np.einsum('i,mij,j->m', xi_y_bar, gammas.gamma, psi_y)
    )
    return 2 * np.real(sign) * np.real(mixed)


@dataclass(frozen=True, slots=True, eq=False)
class CurrentReport:
    """Current of a two-particle state on a lattice of x with fixed partner y.

    Attributes:
        events (ndarray): (n, 4) lattice events x.
        partner (FourVector): Fixed event y.
        total (ndarray): (n, 4) total current.
        parts (ndarray): (n, 4) sum of single-particle parts.
        interference (ndarray): (n, 4) total − parts.
        norm (float): Root mean square of the interference over the lattice.
    """

    events: npt.NDArray[np.float64]
    partner: FourVector
    total: npt.NDArray[np.float64]
    parts: npt.NDArray[np.float64]
    interference: npt.NDArray[np.float64]
    norm: float

    @property
    def timelike(self) -> npt.NDArray[np.float64]:
        """Timelike component of the total current on the lattice."""
        return self.total[:, 0]

    def as_dict(self, grids: bool = False) -> dict[str, object]:
        """Return a JSON-ready dictionary."""
        report: dict[str, object] = {
            'norm': self.norm,
            'partner': self.partner.tolist(),
            'points': len(self.events),
            'max_interference': float(np.abs(self.interference).max()),
        }
        if grids:
            report.update(
                events=self.events.tolist(),
                total=self.total.tolist(),
                interference=self.interference.tolist(),
            )
        return report


def relative_periods(state: TwoParticleState) -> npt.NDArray[np.float64]:
    """Return one phase period 2π/|Δ_μ| per axis of the relative wavevector.

    Δ is the wavevector difference of the two plane wave factors; axes
    with Δ_μ = 0, and states built from other fields, use 2π.
    """

    periods = np.full(4, 2 * math.pi)
    fields = [f for term in state.terms[:1] for f in term[1:]]
    if all(isinstance(f, PlaneWave) for f in fields):
        delta = fields[0].wavevector - fields[1].wavevector
        mask = np.abs(delta) > 1e-12
        periods[mask] = 2 * math.pi / np.abs(delta[mask])
    return periods


def lattice(periods: Sequence[float], points: int = 4, origin: FourVector | None = None) -> npt.NDArray[np.float64]:
    """Return a points⁴ lattice spanning one period per axis."""
    origin = np.zeros(4) if origin is None else np.asarray(origin, dtype=np.float64)
    axes = [np.arange(points) * period / points for period in periods]
    return np.array([origin + np.array(event) for event in itertools.product(*axes)])


def current_report(
    state: TwoParticleState,
    partner: FourVector | None = None,
    tau: float = 0.0,
    points: int = 4,
) -> CurrentReport:
    """Return the current decomposition of a state on a lattice of x.

    Args:
        state (TwoParticleState): State.
        partner (FourVector): (optional) Fixed event y, origin by default.
        tau (float): (optional) Parameter value.
        points (int): (optional) Lattice points per axis.

    Returns:
        `CurrentReport`; interference is total − parts by construction.
    """

    partner = np.zeros(4) if partner is None else np.asarray(partner, dtype=np.float64)
    events = lattice(relative_periods(state), points)
    total = np.array([total_current(state, x, partner, tau) for x in events])
    parts = np.array([parts_current(state, x, partner, tau) for x in events])
    interference = total - parts
    norm = float(math.sqrt(np.mean(np.sum(interference**2, axis=1))))
    logger.debug('%s state: nonadditivity norm %.6g over %s events.', state.tag, norm, len(events))
    return CurrentReport(events, partner, total, parts, interference, norm)
