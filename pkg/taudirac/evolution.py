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

"""Spectral τ-evolution of the free parametrized Dirac equation in 1+1D.

Fields live on a periodic N⁰×N³ lattice of events (t, 0, 0, z) and are
stored as mode coefficients c(p) of exp(i p·x) = exp(i(−p⁰t + p³z)).
Each mode advances by the closed form exponential of −i slash(p) dτ,
which uses slash(p)² = −(p·p) I₄.

The quantity conserved by the free flow is the Dirac norm Σ c̄(p)c(p);
Σ|c(p)|² is conserved only for fields built from on-shell modes of one
branch.
"""

import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np
import numpy.typing as npt

from taudirac.clifford import GammaBasis, IDENTITY, representation, slash
from taudirac.logger import logger
from taudirac.minkowski import OnShellMomentum
from taudirac.spinor_basis import Field, PlaneWave
from taudirac.sweep import gather_ordered

Coefficients = npt.NDArray[np.complex128]

LATTICE_TOLERANCE: float = 1e-9
# spacelike modes at or below this fraction of the largest mode are round-off
NOISE_FLOOR: float = 1e-13


def wavenumbers(lattice: tuple[int, int], spacing: tuple[float, float]) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Return the lattice components p⁰ and p³ in FFT order.

    The sign of p⁰ follows from the phase −p⁰t of exp(i p·x).
    """
    (n0, n3), (dt, dz) = lattice, spacing
    return -2 * math.pi * np.fft.fftfreq(n0, dt), 2 * math.pi * np.fft.fftfreq(n3, dz)


def lattice_index(k0: int, k3: int, lattice: tuple[int, int]) -> tuple[int, int]:
    """Return the array index of the mode with p⁰ = 2πk0/(N⁰Δt), p³ = 2πk3/(N³Δz)."""
    return (-k0) % lattice[0], k3 % lattice[1]


def lattice_momentum(
    k0: int, k3: int, lattice: tuple[int, int], spacing: tuple[float, float]
) -> OnShellMomentum:
    """Return the on-shell momentum of an integer lattice mode.

    Raises:
        NotSubluminalError: mode is not subluminal.
    """
    p0 = 2 * math.pi * k0 / (lattice[0] * spacing[0])
    p3 = 2 * math.pi * k3 / (lattice[1] * spacing[1])
    return OnShellMomentum.of((p0, 0.0, 0.0, p3))


@dataclass(frozen=True, slots=True, eq=False)
class SpectralField:
    """Lattice field in mode space.

    Attributes:
        coefficients (ndarray): (N⁰, N³, 4) mode spinors in FFT order.
        spacing (tuple): Lattice spacings (Δt, Δz).
        tau (float): Current parameter value.
        gammas (GammaBasis): Representation.
    """

    coefficients: Coefficients
    spacing: tuple[float, float]
    tau: float = 0.0
    gammas: GammaBasis | None = None

    @property
    def lattice(self) -> tuple[int, int]:
        return self.coefficients.shape[0], self.coefficients.shape[1]

    @property
    def axes(self) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
        """Lattice coordinates t and z."""
        return (
            np.arange(self.lattice[0]) * self.spacing[0],
            np.arange(self.lattice[1]) * self.spacing[1],
        )

    def __add__(self, other: 'SpectralField') -> 'SpectralField':
        return replace(self, coefficients=self.coefficients + other.coefficients)

    def scaled(self, factor: complex) -> 'SpectralField':
        return replace(self, coefficients=factor * self.coefficients)


def to_grid(field: SpectralField) -> Coefficients:
    """Return the (N⁰, N³, 4) lattice values of a field."""
    n0, n3 = field.lattice
    return np.fft.ifft2(field.coefficients, axes=(0, 1)) * (n0 * n3)


def from_grid(
    values: Coefficients, spacing: tuple[float, float], tau: float = 0.0, gammas: GammaBasis | None = None
) -> SpectralField:
    """Return the spectral field of (N⁰, N³, 4) lattice values."""
    n0, n3 = values.shape[:2]
    coefficients = np.fft.fft2(np.asarray(values, dtype=np.complex128), axes=(0, 1)) / (n0 * n3)
    return SpectralField(coefficients, tuple(spacing), tau, gammas)


def sample_field(
    psi: Field,
    lattice: tuple[int, int],
    spacing: tuple[float, float],
    tau: float = 0.0,
    gammas: GammaBasis | None = None,
) -> SpectralField:
    """Sample a spinor field of (x, τ) on the lattice and transform it."""
    t, z = (np.arange(n) * d for n, d in zip(lattice, spacing))
    values = np.array([[psi(np.array([ti, 0.0, 0.0, zk]), tau) for zk in z] for ti in t])
    return from_grid(values, spacing, tau, gammas)


def from_plane_wave(
    wave: PlaneWave, lattice: tuple[int, int], spacing: tuple[float, float], tau: float = 0.0
) -> SpectralField:
    """Return the lattice field of a plane wave whose wavevector lies on the lattice.

    The wave occupies exactly one mode; every other coefficient is zero.

    Raises:
        ValueError: wavevector has transverse components or is not a
            lattice wavevector.
    """

    k = wave.wavevector
    if abs(k[1]) > 0 or abs(k[2]) > 0:
        raise ValueError(f'wavevector {k} has transverse components.')
    modes = [k[axis] * n * d / (2 * math.pi) for axis, n, d in zip((0, 3), lattice, spacing)]
    if any(abs(mode - round(mode)) > LATTICE_TOLERANCE for mode in modes):
        raise ValueError(f'wavevector {k} is not on the {lattice} lattice.')

    coefficients = np.zeros((*lattice, 4), dtype=np.complex128)
    index = lattice_index(round(modes[0]), round(modes[1]), lattice)
    coefficients[index] = wave.normalization * wave.spinor * np.exp(1j * wave.frequency * tau)
    return SpectralField(coefficients, tuple(spacing), tau, wave.gammas)


def mode_step(p: Sequence[float], dtau: float, gammas: GammaBasis) -> tuple[npt.NDArray[np.complex128], bool]:
    """Return exp(−i slash(p) dτ) and whether p is spacelike.

    For m² = −p·p > 0 this is cos(m dτ) − i slash(p) sin(m dτ)/m, for
    m² < 0 the hyperbolic form, for m² = 0 the linear one.
    """

    p = np.asarray(p, dtype=np.float64)
    p_slash = slash(p, gammas)
    m2 = p[0] ** 2 - p[1] ** 2 - p[2] ** 2 - p[3] ** 2
    if m2 > 0:
        m = math.sqrt(m2)
        return math.cos(m * dtau) * IDENTITY - 1j * p_slash * math.sin(m * dtau) / m, False
    if m2 < 0:
        kappa = math.sqrt(-m2)
        return math.cosh(kappa * dtau) * IDENTITY - 1j * p_slash * math.sinh(kappa * dtau) / kappa, True
    return IDENTITY - 1j * p_slash * dtau, False


def evolve_free(field: SpectralField, dtau: float, workers: bool = False) -> SpectralField:
    """Advance every mode of a field by dτ under the free equation.

    Args:
        field (SpectralField): Field at τ.
        dtau (float): Parameter step.
        workers (bool): (optional) Update rows of modes concurrently.

    Returns:
        `SpectralField` at τ + dτ. Spacelike modes grow or decay
        hyperbolically; those at or below `NOISE_FLOOR` times the largest
        mode are round-off and are set to zero instead.
    """

    gammas = field.gammas or representation()
    p0, p3 = wavenumbers(field.lattice, field.spacing)
    floor = NOISE_FLOOR * float(np.abs(field.coefficients).max(initial=0.0))

    def advance(row: int) -> tuple[Coefficients, int, int]:
        out = np.empty_like(field.coefficients[row])
        evolved = flushed = 0
        for col, q3 in enumerate(p3):
            c = field.coefficients[row, col]
            step, spacelike = mode_step((p0[row], 0.0, 0.0, q3), dtau, gammas)
            if spacelike and dtau and np.abs(c).max() <= floor:
                out[col] = 0.0
                flushed += bool(np.any(c))
                continue
            out[col] = step @ c
            evolved += spacelike and bool(np.any(c))
        return out, evolved, flushed

    rows = gather_ordered(advance, range(field.lattice[0]), workers)
    evolved = sum(row[1] for row in rows)
    flushed = sum(row[2] for row in rows)
    if evolved or flushed:
        logger.debug('%s spacelike modes evolved hyperbolically, %s flushed.', evolved, flushed)
    coefficients = np.stack([row[0] for row in rows])
    return replace(field, coefficients=coefficients, tau=field.tau + dtau)


def spacelike_mask(lattice: tuple[int, int], spacing: tuple[float, float]) -> npt.NDArray[np.bool_]:
    """Return the (N⁰, N³) mask of lattice modes with (p⁰)² < (p³)²."""
    p0, p3 = wavenumbers(lattice, spacing)
    return p0[:, None] ** 2 < p3[None, :] ** 2


def spacelike_weight(field: SpectralField) -> float:
    """Return Σ|c(p)|² over the spacelike modes of a field."""
    mask = spacelike_mask(field.lattice, field.spacing)
    return float(np.sum(np.abs(field.coefficients[mask]) ** 2))


def evolve(field: SpectralField, dtau: float, steps: int, every: int | None = None) -> list[SpectralField]:
    """Apply `steps` free steps and return the snapshots taken.

    The initial field is always the first snapshot and the final field
    the last; `every` adds intermediate ones. Spacelike content above the
    noise floor is reported once per run at warning level.
    """

    mask = spacelike_mask(field.lattice, field.spacing)
    floor = NOISE_FLOOR * float(np.abs(field.coefficients).max(initial=0.0))
    if np.abs(field.coefficients[mask]).max(initial=0.0) > floor:
        logger.warning(
            'Field carries spacelike weight %.6g; those modes grow hyperbolically.', spacelike_weight(field)
        )
    snapshots = [field]
    for step in range(1, steps + 1):
        field = evolve_free(field, dtau)
        if step == steps or (every and step % every == 0):
            snapshots.append(field)
    logger.debug('Evolved %s steps of dτ=%s to τ=%s.', steps, dtau, field.tau)
    return snapshots


def dirac_norm(field: SpectralField) -> float:
    """Return Σ c̄(p)c(p), conserved by the free flow."""
    gamma0 = (field.gammas or representation()).gamma[0]
    c = field.coefficients
    return float(np.real(np.einsum('abi,ij,abj->', c.conj(), gamma0, c)))


def parseval_norm(field: SpectralField) -> float:
    """Return Σ|c(p)|², equal to the lattice mean of |ψ|²."""
    return float(np.sum(np.abs(field.coefficients) ** 2))


def density(field: SpectralField) -> npt.NDArray[np.float64]:
    """Return |ψ|² on the (t, z) lattice."""
    return np.sum(np.abs(to_grid(field)) ** 2, axis=-1)


def tpc_spectral(field: SpectralField) -> SpectralField:
    """Return the lattice TPC conjugate −iγ⁵ψ(−x).

    Mode p maps to −p, so the Nyquist modes of even lattices have no
    partner and must be empty for the conjugation to commute with the
    free flow.
    """

    g5 = (field.gammas or representation()).gamma5
    c = field.coefficients
    reflected = np.roll(c[::-1, ::-1], shift=(1, 1), axis=(0, 1))
    return replace(field, coefficients=-1j * np.einsum('ij,abj->abi', g5, reflected))


def phase_velocity_probe(p: OnShellMomentum, branch: int, dtau: float = 1e-3, steps: int = 8, points: int = 8) -> float:
    """Measure dx⁰/dτ of a constant phase point of a single evolved mode.

    The mode f(±)_p is placed on a lattice built so that p is a lattice
    momentum, evolved spectrally, and the phase θ(τ) of the field at the
    origin is tracked. A constant phase −p⁰t + θ(τ) moves as
    dt/dτ = θ′/p⁰.

    Args:
        p (OnShellMomentum): Subluminal momentum.
        branch (int): +1 for f(+)_p, −1 for f(−)_p.
        dtau (float): (optional) Parameter step.
        steps (int): (optional) Number of steps.
        points (int): (optional) Lattice points per axis.

    Returns:
        Measured dx⁰/dτ, equal to ±m/E.
    """

    p0, p3 = float(p.p[0]), float(np.linalg.norm(p.three))
    dt = 2 * math.pi / (points * abs(p0))
    dz = 2 * math.pi / (points * abs(p3)) if p3 else 1.0
    flat = OnShellMomentum.of((p0, 0.0, 0.0, p3))
    field = from_plane_wave(PlaneWave(flat, branch), (points, points), (dt, dz))

    origin = [to_grid(field)[0, 0]]
    for _ in range(steps):
        field = evolve_free(field, dtau)
        origin.append(to_grid(field)[0, 0])
    component = int(np.argmax(np.abs(origin[0])))
    theta = np.unwrap(np.angle([value[component] for value in origin]))
    rate = np.polyfit(dtau * np.arange(steps + 1), theta, 1)[0]
    logger.trace('θ′ = %.12g for p⁰ = %.12g.', rate, p0)  # type: ignore
    return float(rate / p0)


def write_snapshot_csv(field: SpectralField, path: str | Path) -> Path:
    """Write |ψ|² of one snapshot as CSV rows `t,z,density`."""
    path = Path(path)
    t, z = field.axes
    tt, zz = np.meshgrid(t, z, indexing='ij')
    rows = np.column_stack([tt.ravel(), zz.ravel(), density(field).ravel()])
    np.savetxt(path, rows, fmt='%.17g', delimiter=',', header='t,z,density', comments='')
    logger.debug('Wrote snapshot τ=%s to %s.', field.tau, path)
    return path


def write_snapshots_npz(snapshots: Sequence[SpectralField], path: str | Path) -> Path:
    """Write snapshots as arrays `tau` (n,), `t` (N⁰,), `z` (N³,), `density` (n, N⁰, N³)."""
    path = Path(path)
    t, z = snapshots[0].axes
    np.savez(
        path,
        tau=np.array([field.tau for field in snapshots]),
        t=t,
        z=z,
        density=np.stack([density(field) for field in snapshots]),
    )
    logger.debug('Wrote %s snapshots to %s.', len(snapshots), path)
    return path
