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

"""Module configurations file.

Central location for global configuration values and the run
configuration consumed by the command line front end.

    Typical usage example:

    from taudirac.config import load_config
    config = load_config('run.cfg', {'alpha': '0.0073'})
"""

import os
import math
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Mapping, get_args, get_origin

from taudirac.exceptions import InvalidConfigError


def separate(text: str | None, delimiter: str = ',') -> list[str | None]:
    """Return list from comma seperated string.

    Separates the provided string using the provided as delimiter and
    remove whitespace.

    Args:
        text (str): String to separate.
        delimiter (str): (optional) character to use as delimiter.

    Returns:
        A list of strings from the provided string.
    """
    if text is None:
        return [None]
    return [s.strip() for s in text.split(sep=delimiter)]


LOGGING_LEVEL: str = os.getenv('TD_LOGGING_LEVEL', 'warn')
REPRESENTATION: str = os.getenv('TD_REPRESENTATION', 'dirac')
SEED: int = int(os.getenv('TD_SEED', '20140101'))

# internal properties
MODULE_NAME = __name__.split('.', maxsplit=1)[0]
MODULE_PATH: str = str(Path(__file__).parent.absolute())

# physical defaults, MeV based natural units
ELECTRON_MASS: float = 0.511
MUON_MASS: float = 105.658
ALPHA: float = 1 / 137.035999
UNITS: str = 'MeV natural units (c = hbar = 1)'


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Run configuration.

    Immutable collection of every tunable value of a run.

    Attributes:
        m_e (float): Electron mass.
        m_mu (float): Muon mass.
        alpha (float): Fine-structure constant e²/4π.
        box_edge (float): Edge L of the space-time 4-cube.
        lattice (tuple[int, int]): Evolution lattice sizes (N⁰, N³).
        spacing (tuple[float, float]): Evolution lattice spacings (Δt, Δz).
        grid_points (int): Number of cos θ points of the output grid.
        quadrature_order (int): Gauss-Legendre order for total cross sections.
        tolerance (float): Pass threshold of verification suites.
        seed (int): Random seed of every sampled check.
        representation (str): Gamma matrix representation, `dirac` or `weyl`.
        process (str): Cross-section process name.
        sqrt_s (float): Centre of mass energy for pair processes.
        omega (float): Lab photon energy for the Compton process.
        charges (tuple[float, float]): Charges e₁, e₂ of the two-particle equation.
        separation (tuple[float, ...]): Fixed partner event of the current grid.
        tau (float): Parameter value of current and snapshot evaluations.
        steps (int): Number of evolution steps.
        dtau (float): Evolution step in τ.
        workers (bool): Evaluate grids concurrently.
        output (str | None): Primary output path.
        audit (str | None): JSON audit output path.
    """

    m_e: float = ELECTRON_MASS
    m_mu: float = MUON_MASS
    alpha: float = ALPHA
    box_edge: float = 1.0
    lattice: tuple[int, int] = (16, 16)
    spacing: tuple[float, float] = (0.25, 0.25)
    grid_points: int = 181
    quadrature_order: int = 128
    tolerance: float = 1e-10
    seed: int = SEED
    representation: str = REPRESENTATION
    process: str = 'mu-pair'
    sqrt_s: float = 1000.0
    omega: float = 0.511
    charges: tuple[float, float] = (-1.0, -1.0)
    separation: tuple[float, ...] = (0.0, 0.0, 0.0, 0.0)
    tau: float = 0.0
    steps: int = 100
    dtau: float = 0.01
    workers: bool = False
    output: str | None = None
    audit: str | None = None

    def __post_init__(self) -> None:
        for name in ('m_e', 'm_mu', 'alpha', 'box_edge', 'tolerance'):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise InvalidConfigError(f'{name} must be positive, got {value}.')
        if self.representation not in ('dirac', 'weyl'):
            raise InvalidConfigError(
                f'"{self.representation}" is not a gamma representation (dirac, weyl).'
            )
        if min(self.lattice) < 2 or min(self.spacing) <= 0:
            raise InvalidConfigError('lattice needs at least 2 points and positive spacing.')
        if self.grid_points < 2 or self.quadrature_order < 2:
            raise InvalidConfigError('grid_points and quadrature_order must be at least 2.')
        if len(self.separation) != 4:
            raise InvalidConfigError('separation must have four components.')

    @property
    def coupling(self) -> float:
        """Return the charge e = √(4πα)."""
        return math.sqrt(4 * math.pi * self.alpha)


def _parse(kind: Any, name: str, text: str) -> Any:
    """Parse a text value into the type of the named field.

    Args:
        kind (Any): Field annotation.
        name (str): Field name, used in error messages.
        text (str): Raw value.

    Returns:
        Parsed value.

    Raises:
        InvalidConfigError: value cannot be parsed.
    """

    try:
        if get_origin(kind) is tuple:
            item = get_args(kind)[0]
            return tuple(item(v) for v in separate(text) if v)
        if kind is bool:
            if text.lower() not in ('1', '0', 'true', 'false', 'yes', 'no'):
                raise ValueError(text)
            return text.lower() in ('1', 'true', 'yes')
        if kind in (int, float):
            return kind(text)
    except ValueError:
        raise InvalidConfigError(f'Invalid value for {name}: "{text}"') from None
    if text.lower() in ('', 'none'):
        return None
    return text


def read_config_file(path: str | Path) -> dict[str, str]:
    """Read a flat key-value configuration file.

    Lines have the form `key = value`; blank lines and lines starting
    with `#` are ignored. Keys use either dashes or underscores.

    Args:
        path (str): Path to configuration file.

    Returns:
        Dictionary of raw key-value strings.

    Raises:
        InvalidConfigError: file missing or line malformed.
    """

    try:
        lines = Path(path).read_text(encoding='utf-8').splitlines()
    except OSError as err:
        raise InvalidConfigError(f'Unable to read config {path} -- {err}') from err

    values: dict[str, str] = {}
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if '=' not in line:
            raise InvalidConfigError(f'{path}:{number}: expected "key = value".')
        key, value = (s.strip() for s in line.split('=', 1))
        values[key.replace('-', '_')] = value
    return values


def load_config(
    path: str | Path | None = None, overrides: Mapping[str, Any] | None = None
) -> RunConfig:
    """Build a validated run configuration.

    Starts from the defaults, applies the configuration file, then applies
    overrides. Override values may be raw strings or already typed values.

    Args:
        path (str): (optional) Flat key-value configuration file.
        overrides (dict): (optional) Values taking precedence over the file.

    Returns:
        `RunConfig` instance.

    Raises:
        InvalidConfigError: unknown key or invalid value.
    """

    kinds = {f.name: f.type for f in fields(RunConfig)}
    raw: dict[str, Any] = read_config_file(path) if path else {}
    raw.update({k.replace('-', '_'): v for k, v in (overrides or {}).items() if v is not None})

    unknown = sorted(set(raw) - set(kinds))
    if unknown:
        raise InvalidConfigError(f'Unknown config keys: {", ".join(unknown)}')

    values = {
        key: _parse(kinds[key], key, value) if isinstance(value, str) else value
        for key, value in raw.items()
    }
    return replace(RunConfig(), **values)
