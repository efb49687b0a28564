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

"""Dirac gamma matrices for the (−+++) metric.

The matrices obey {γ^μ, γ^ν} = −2g^{μν}I₄, so (γ⁰)² = I₄ and
(γ^i)² = −I₄. Two representations are provided: Dirac–Pauli (default)
and Weyl, related by a unitary similarity. Each `GammaBasis` also carries
the image of the rest frame unit block under that similarity.
"""

import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np
import numpy.typing as npt

from taudirac.config import REPRESENTATION
from taudirac.minkowski import METRIC, FourVector, lower

SpinorMatrix = npt.NDArray[np.complex128]
Spinor = npt.NDArray[np.complex128]

GAMMA5 = 5

IDENTITY: SpinorMatrix = np.eye(4, dtype=np.complex128)
PAULI: npt.NDArray[np.complex128] = np.array(
    [[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]], dtype=np.complex128
)


@dataclass(frozen=True, slots=True, eq=False)
class GammaBasis:
    """Gamma matrix representation.

    Attributes:
        name (str): Representation name.
        gamma (ndarray): γ⁰..γ³ stacked as a (4, 4, 4) array.
        gamma5 (SpinorMatrix): iγ⁰γ¹γ²γ³.
        rest_frame (SpinorMatrix): Rest frame spinor block; columns 0, 1 are
            the u spinors and columns 2, 3 the v spinors.
    """

    name: str
    gamma: npt.NDArray[np.complex128]
    gamma5: SpinorMatrix
    rest_frame: SpinorMatrix

    @classmethod
    def similar(cls, name: str, base: 'GammaBasis', unitary: SpinorMatrix) -> 'GammaBasis':
        """Return the representation U γ U† of `base`."""
        gamma = np.einsum('ij,mjk,lk->mil', unitary, base.gamma, unitary.conj())
        return cls(name, gamma, _gamma5(gamma), unitary @ base.rest_frame)


def _gamma5(gamma: npt.NDArray[np.complex128]) -> SpinorMatrix:
    return 1j * gamma[0] @ gamma[1] @ gamma[2] @ gamma[3]


def _dirac_pauli() -> GammaBasis:
    zero = np.zeros((2, 2), dtype=np.complex128)
    unit = np.eye(2, dtype=np.complex128)
    gamma = np.empty((4, 4, 4), dtype=np.complex128)
    gamma[0] = np.block([[unit, zero], [zero, -unit]])
    for i in range(3):
        gamma[i + 1] = np.block([[zero, PAULI[i]], [-PAULI[i], zero]])
    return GammaBasis('dirac', gamma, _gamma5(gamma), IDENTITY.copy())


DIRAC: GammaBasis = _dirac_pauli()
WEYL: GammaBasis = GammaBasis.similar(
    'weyl',
    DIRAC,
    np.block([[np.eye(2), -np.eye(2)], [np.eye(2), np.eye(2)]]).astype(np.complex128)
    / math.sqrt(2),
)
REPRESENTATIONS: dict[str, GammaBasis] = {'dirac': DIRAC, 'weyl': WEYL}


def representation(name: str | None = None) -> GammaBasis:
    """Return a gamma representation by name, defaulting to the configured one."""
    return REPRESENTATIONS[name or REPRESENTATION]


def slash(p: FourVector, gammas: GammaBasis | None = None) -> SpinorMatrix:
    """Return γ^μ p_μ.

    Args:
        p (FourVector): Contravariant components, real or complex.
        gammas (GammaBasis): (optional) Representation.

    Returns:
        4×4 matrix with slash(p)² = −(p·p) I₄.
    """

    gammas = gammas or representation()
    return np.einsum('mij,m->ij', gammas.gamma, lower(np.asarray(p, dtype=np.complex128)))


def gamma_matrix(index: int, gammas: GammaBasis | None = None) -> SpinorMatrix:
    """Return γ^index, or γ⁵ for index `GAMMA5`."""
    gammas = gammas or representation()
    return gammas.gamma5 if index == GAMMA5 else gammas.gamma[index]


def trace_product(indices: Sequence[int], gammas: GammaBasis | None = None) -> complex:
    """Return Tr(γ^{μ1}···γ^{μn}) by explicit matrix multiplication.

    Args:
        indices (Sequence): Lorentz indices 0..3; `GAMMA5` inserts γ⁵.
        gammas (GammaBasis): (optional) Representation.

    Returns:
        Complex trace; the empty product gives Tr I₄ = 4.
    """

    gammas = gammas or representation()
    product = reduce(np.matmul, (gamma_matrix(i, gammas) for i in indices), IDENTITY)
    return complex(np.trace(product))


def analytic_trace(indices: Sequence[int]) -> float:
    """Return Tr(γ^{μ1}···γ^{μn}) from the contraction rules.

    Uses Tr(γ^a γ^b ...) = Σ_k (−1)^k η^{a b_k} Tr(... without a, b_k) with
    η = −g, the effective metric of {γ^μ, γ^ν} = 2η^{μν}.

    Args:
        indices (Sequence): Lorentz indices 0..3, no γ⁵.

    Returns:
        Real trace value.
    """

    if not indices:
        return 4.0
    if len(indices) % 2:
        return 0.0
    first, rest = indices[0], list(indices[1:])
    total = 0.0
    for k, index in enumerate(rest):
        if METRIC[first, index]:
            sign = 1.0 if k % 2 == 0 else -1.0
            total += sign * -METRIC[first, index] * analytic_trace(rest[:k] + rest[k + 1:])
    return total


def dirac_adjoint(
    obj: Spinor | SpinorMatrix, gammas: GammaBasis | None = None
) -> Spinor | SpinorMatrix:
    """Return the Dirac adjoint.

    Args:
        obj (ndarray): Spinor of shape (4,) or 4×4 matrix.
        gammas (GammaBasis): (optional) Representation.

    Returns:
        ψ̄ = ψ†γ⁰ (as a flat array) for a spinor, γ⁰M†γ⁰ for a matrix.
    """

    g0 = (gammas or representation()).gamma[0]
    obj = np.asarray(obj)
    if obj.ndim == 1:
        return obj.conj() @ g0
    return g0 @ obj.conj().T @ g0


def anticommutator_residual(gammas: GammaBasis | None = None) -> float:
    """Return max entrywise |{γ^μ, γ^ν} + 2g^{μν}I₄| over all index pairs."""
    gammas = gammas or representation()
    worst = 0.0
    for mu in range(4):
        for nu in range(mu, 4):
            a, b = gammas.gamma[mu], gammas.gamma[nu]
            residual = a @ b + b @ a + 2 * METRIC[mu, nu] * IDENTITY
            worst = max(worst, float(np.abs(residual).max()))
    return worst


def gamma5_residual(gammas: GammaBasis | None = None) -> float:
    """Return the largest violation of (γ⁵)² = I₄ and {γ⁵, γ^μ} = 0."""
    gammas = gammas or representation()
    g5 = gammas.gamma5
    worst = float(np.abs(g5 @ g5 - IDENTITY).max())
    for mu in range(4):
        worst = max(worst, float(np.abs(g5 @ gammas.gamma[mu] + gammas.gamma[mu] @ g5).max()))
    return worst
