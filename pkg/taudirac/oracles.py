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

"""Closed-form cross sections used as comparison values.

Everything here is textbook QED at tree level and independent of the
parametrized machinery. Dot products in the trace forms use the
(+−−−) convention, so callers pass −(a·b) of the (−+++) metric.
"""

import math

import numpy as np
import numpy.typing as npt


def classical_radius(m: float, alpha: float) -> float:
    """Return r = α/m."""
    return alpha / m


def thomson(m: float, alpha: float) -> float:
    """Return the Thomson cross section (8π/3)(α/m)²."""
    return 8 * math.pi / 3 * classical_radius(m, alpha) ** 2


def compton_energy(omega: float, cos_theta: npt.ArrayLike, m: float) -> npt.NDArray[np.float64]:
    """Return the scattered photon energy ω′ = ω/(1 + (ω/m)(1 − cos θ))."""
    return omega / (1 + omega / m * (1 - np.asarray(cos_theta)))


def klein_nishina(
    omega: float, cos_theta: npt.ArrayLike, m: float, alpha: float
) -> npt.NDArray[np.float64]:
    """Return the lab frame Klein–Nishina dσ/dΩ.

    (r²/2)(ω′/ω)²(ω′/ω + ω/ω′ − sin²θ).
    """

    cos_theta = np.asarray(cos_theta, dtype=np.float64)
    ratio = compton_energy(omega, cos_theta, m) / omega
    sin2 = 1 - cos_theta**2
    return classical_radius(m, alpha) ** 2 / 2 * ratio**2 * (ratio + 1 / ratio - sin2)


def klein_nishina_total(omega: float, m: float, alpha: float) -> float:
    """Return the total Klein–Nishina cross section.

    Below ω/m = 1e-4 the low energy series σ_T(1 − 2x + 26x²/5) is used.
    """

    x = omega / m
    if x < 1e-4:
        return thomson(m, alpha) * (1 - 2 * x + 26 * x**2 / 5)
    log = math.log1p(2 * x)
    return (
        2 * math.pi * classical_radius(m, alpha) ** 2
        * (
            (1 + x) / x**3 * (2 * x * (1 + x) / (1 + 2 * x) - log)
            + log / (2 * x)
            - (1 + 3 * x) / (1 + 2 * x) ** 2
        )
    )


def compton_trace(pk: float, pk_out: float, m: float, coupling: float) -> float:
    """Return ¼Σ|M|² of Compton scattering with 2m spinor normalization.

    Args:
        pk (float): p·k in the (+−−−) convention.
        pk_out (float): p·k′ in the (+−−−) convention.
        m (float): Electron mass.
        coupling (float): Charge e.
    """

    a = 1 / pk - 1 / pk_out
    return 2 * coupling**4 * (pk_out / pk + pk / pk_out + 2 * m**2 * a + m**4 * a**2)


def annihilation_trace(pk1: float, pk2: float, m: float, coupling: float) -> float:
    """Return ¼Σ|M|² of e⁻e⁺ → γγ with 2m spinor normalization."""
    a = 1 / pk1 + 1 / pk2
    return 2 * coupling**4 * (pk2 / pk1 + pk1 / pk2 + 2 * m**2 * a - m**4 * a**2)


def muon_pair_trace(
    p1: npt.ArrayLike,
    p2: npt.ArrayLike,
    p3: npt.ArrayLike,
    p4: npt.ArrayLike,
    m_e: float,
    m_mu: float,
    coupling: float,
) -> float:
    """Return ¼Σ|M|² of e⁻e⁺ → μ⁻μ⁺ with 2m spinor normalization.

    Momenta are contravariant four-vectors; the products are taken in the
    (+−−−) convention internally.
    """

    def mdot(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
        a, b = np.asarray(a), np.asarray(b)
        return float(a[0] * b[0] - a[1:] @ b[1:])

    s = mdot(np.add(p1, p2), np.add(p1, p2))
    return (
        8 * coupling**4 / s**2
        * (
            mdot(p1, p3) * mdot(p2, p4)
            + mdot(p1, p4) * mdot(p2, p3)
            + m_mu**2 * mdot(p1, p2)
            + m_e**2 * mdot(p3, p4)
            + 2 * m_e**2 * m_mu**2
        )
    )


def muon_pair_differential(
    s: float, cos_theta: npt.ArrayLike, m_e: float, m_mu: float, alpha: float
) -> npt.NDArray[np.float64]:
    """Return the centre of mass dσ/dΩ of e⁻e⁺ → μ⁻μ⁺ with both masses.

    (α²/4s)(β_μ/β_e)[1 + β_e²β_μ² cos²θ + 4(m_e² + m_μ²)/s].
    """

    cos_theta = np.asarray(cos_theta, dtype=np.float64)
    beta_e = math.sqrt(1 - 4 * m_e**2 / s)
    beta_mu = math.sqrt(1 - 4 * m_mu**2 / s)
    return (
        alpha**2 / (4 * s) * beta_mu / beta_e
        * (1 + beta_e**2 * beta_mu**2 * cos_theta**2 + 4 * (m_e**2 + m_mu**2) / s)
    )


def muon_pair_total(s: float, m_e: float, m_mu: float, alpha: float) -> float:
    """Return σ(e⁻e⁺ → μ⁻μ⁺) = (4πα²/3s)(β_μ/β_e)(1 + 2m_e²/s)(1 + 2m_μ²/s)."""
    beta_e = math.sqrt(1 - 4 * m_e**2 / s)
    beta_mu = math.sqrt(1 - 4 * m_mu**2 / s)
    return (
        4 * math.pi * alpha**2 / (3 * s) * beta_mu / beta_e
        * (1 + 2 * m_e**2 / s) * (1 + 2 * m_mu**2 / s)
    )


def muon_pair_massless_electron(s: float, m_mu: float, alpha: float) -> float:
    """Return σ = (4πα²/3s)√(1 − 4m_μ²/s)(1 + 2m_μ²/s) for a massless electron."""
    return 4 * math.pi * alpha**2 / (3 * s) * math.sqrt(1 - 4 * m_mu**2 / s) * (1 + 2 * m_mu**2 / s)


def annihilation_total(s: float, m: float, alpha: float) -> float:
    """Return Dirac's σ(e⁻e⁺ → γγ), identical photons counted once.

    γ is the positron Lorentz factor in the electron rest frame.
    """

    gamma = s / (2 * m**2) - 1
    root = math.sqrt(gamma**2 - 1)
    return (
        math.pi * classical_radius(m, alpha) ** 2 / (gamma + 1)
        * ((gamma**2 + 4 * gamma + 1) / (gamma**2 - 1) * math.log(gamma + root) - (gamma + 3) / root)
    )


def standard_differential(
    average_square: float, flux: float, k: float, energy_total: float, energy_3: float, projection: float
) -> float:
    """Return the textbook 2 → 2 dσ/dΩ in an arbitrary frame.

    dσ/dΩ = ⟨|M|²⟩ k² / (64π² F (k E − E₃ **P**·n̂)), with ⟨|M|²⟩ in the 2m
    spinor normalization, F = √((p₁·p₂)² − m₁²m₂²), k = |**p**₃| and E,
    **P** the total energy and momentum.
    """

    return average_square * k**2 / (64 * math.pi**2 * flux * (k * energy_total - energy_3 * projection))
