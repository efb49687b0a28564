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

"""Command line front end.

Subcommands run the verification suites, compute cross sections, report
two-particle currents and evolve lattice fields. Results go to stdout or
to the requested files, logs and errors to stderr.

Exit codes: 0 success, 1 computation error, 2 usage error. Failures are
reported as a JSON object on stderr.

    Typical usage example:

    taudirac xsec --process mu-pair --sqrt-s 1000 --out xs.csv
"""

import sys
import json
import argparse
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from taudirac import __version__
from taudirac.checks import report, run_suite
from taudirac.clifford import representation
from taudirac.config import UNITS, RunConfig, load_config
from taudirac.cross_sections import cross_section
from taudirac.evolution import (
    dirac_norm,
    evolve,
    from_plane_wave,
    lattice_momentum,
    parseval_norm,
    phase_velocity_probe,
    spacelike_weight,
    write_snapshot_csv,
    write_snapshots_npz,
)
from taudirac.exceptions import (
    InvalidConfigError,
    InvalidLoggingLevelError,
    TauDiracError,
    UnknownProcessError,
    UnknownSuiteError,
)
from taudirac.logger import logger, set_level
from taudirac.minkowski import METRIC, OnShellMomentum
from taudirac.spinor_basis import PlaneWave, phase_velocity
from taudirac.twoparticle import build_entangled, current_report, separable, two_particle_residual

EXIT_OK = 0
EXIT_COMPUTE = 1
EXIT_USAGE = 2
CSV_UNITS = 'MeV^-2 sr^-1'
ANTICOMMUTATOR = '{gamma^mu, gamma^nu} = -2 g^mu nu'
USAGE_ERRORS = (InvalidConfigError, InvalidLoggingLevelError, UnknownProcessError, UnknownSuiteError)


class UsageError(Exception):
    """Invalid command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _overrides(args: argparse.Namespace, names: Sequence[str]) -> dict[str, Any]:
    values: dict[str, Any] = {}
    for item in args.set or []:
        key, sep, value = item.partition('=')
        if not sep:
            raise UsageError(f'--set expects KEY=VALUE, got "{item}".')
        values[key.strip()] = value.strip()
    values.update({name: getattr(args, name) for name in names if getattr(args, name, None) is not None})
    return values


def _emit(payload: dict[str, Any], path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        Path(path).write_text(text + '\n', encoding='utf-8')
        logger.info('Wrote %s', path)
    else:
        sys.stdout.write(text + '\n')


def _check(suite: str, config: RunConfig) -> int:
    results = report(run_suite(suite, config))
    results['representation'] = config.representation
    results['metric'] = [float(g) for g in np.diag(METRIC)]
    results['anticommutator'] = ANTICOMMUTATOR
    results['units'] = UNITS
    _emit(results, config.output)
    return EXIT_OK if results['status'] else EXIT_COMPUTE


def _xsec(config: RunConfig, method: str) -> int:
    result = cross_section(config.process, config, method)
    rows = [
        f'{c:.17g},{v:.17g},{CSV_UNITS}' for c, v in zip(result.cos_theta, result.dsigma_domega)
    ]
    text = '\n'.join(['cos_theta,dsigma_domega,units', *rows]) + '\n'
    if config.output:
        Path(config.output).write_text(text, encoding='utf-8')
        logger.info('Wrote %s rows to %s', len(rows), config.output)
    else:
        sys.stdout.write(text)

    audit = config.audit
    if audit is None and config.output:
        audit = str(Path(config.output).with_suffix('.audit.json'))
    if audit:
        Path(audit).write_text(json.dumps(result.audit_dict(), indent=2, sort_keys=True) + '\n', encoding='utf-8')
        logger.info('Wrote audit %s', audit)
    return EXIT_OK


def _entangle(config: RunConfig, momentum: float) -> int:
    gammas = representation(config.representation)
    psi = PlaneWave(OnShellMomentum.from_mass(config.m_e, (0.0, 0.0, momentum)), 1, 1, gammas=gammas)
    xi = PlaneWave(OnShellMomentum.from_mass(config.m_e, (0.0, 0.0, -momentum)), 1, 1, gammas=gammas)
    partner = np.asarray(config.separation, dtype=np.float64)

    states = {
        'separable': separable(psi, xi, gammas),
        'antisymmetric': build_entangled(psi, xi, -1, gammas),
        'symmetric': build_entangled(psi, xi, 1, gammas),
    }
    payload: dict[str, Any] = {'units': UNITS, 'momentum': momentum, 'states': {}}
    for name, state in states.items():
        residual = two_particle_residual(state, None, (np.zeros(4), partner, config.tau), config.charges)
        entry = current_report(state, partner, config.tau).as_dict()
        entry['max_residual'] = float(np.abs(residual).max())
        payload['states'][name] = entry
    _emit(payload, config.output)
    return EXIT_OK


def _evolve(config: RunConfig, mode: Sequence[int], every: int | None, npz: str | None) -> int:
    gammas = representation(config.representation)
    p = lattice_momentum(mode[0], mode[1], config.lattice, config.spacing)
    field = from_plane_wave(PlaneWave(p, 1, gammas=gammas), config.lattice, config.spacing, config.tau)
    field = field + from_plane_wave(PlaneWave(p, -1, gammas=gammas), config.lattice, config.spacing, config.tau)

    snapshots = evolve(field, config.dtau, config.steps, every)
    first, last = snapshots[0], snapshots[-1]
    if config.output:
        write_snapshot_csv(last, config.output)
    if npz:
        write_snapshots_npz(snapshots, npz)

    payload = {
        'units': UNITS,
        'lattice': list(config.lattice),
        'mode': [float(v) for v in p.p],
        'tau': last.tau,
        'dirac_norm': [dirac_norm(first), dirac_norm(last)],
        'parseval_norm': [parseval_norm(first), parseval_norm(last)],
        'spacelike_weight': [spacelike_weight(first), spacelike_weight(last)],
        'phase_velocity': {
            str(branch): {'measured': phase_velocity_probe(p, branch), 'expected': phase_velocity(p, branch)}
            for branch in (1, -1)
        },
    }
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + '\n')
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of every subcommand."""

    parser = _Parser(prog='taudirac', description='Parametrized Dirac formalism toolkit.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--log-level', default=None, help='Package logging level, e.g. info or debug.')

    common = _Parser(add_help=False)
    common.add_argument('--config', default=None, help='Flat key = value configuration file.')
    common.add_argument('--set', action='append', metavar='KEY=VALUE', help='Configuration override, repeatable.')
    common.add_argument('--out', dest='output', default=None, help='Primary output path, stdout by default.')

    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)
    commands.add_parser('check-algebra', parents=[common], help='Clifford algebra suite.')
    commands.add_parser('check-spinors', parents=[common], help='Spinor basis and TPC suite.')

    xsec = commands.add_parser('xsec', parents=[common], help='Differential and total cross section.')
    xsec.add_argument('--process', default=None, help='mu-pair, compton or annihilation.')
    xsec.add_argument('--sqrt-s', dest='sqrt_s', default=None, help='Centre of mass energy.')
    xsec.add_argument('--omega', default=None, help='Lab photon energy for compton.')
    xsec.add_argument('--audit', default=None, help='Audit JSON path.')
    xsec.add_argument('--method', choices=('traces', 'spins'), default='traces')

    entangle = commands.add_parser('entangle', parents=[common], help='Two-particle current report.')
    entangle.add_argument('--momentum', type=float, default=0.511, help='|p| of each plane wave factor.')

    evolve_cmd = commands.add_parser('evolve', parents=[common], help='Free spectral evolution in 1+1D.')
    evolve_cmd.add_argument('--mode', type=int, nargs=2, default=(2, 1), metavar=('K0', 'K3'))
    evolve_cmd.add_argument('--every', type=int, default=None, help='Snapshot interval in steps.')
    evolve_cmd.add_argument('--npz', default=None, help='Snapshot archive path.')
    return parser


def _fail(err: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({'error': type(err).__name__, 'message': str(err), 'exit': code}) + '\n')
    return code


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line.

    Args:
        argv (list): (optional) Arguments without the program name.

    Returns:
        Exit status.
    """

    try:
        args = build_parser().parse_args(argv)
        if args.log_level:
            set_level(args.log_level)
        names = ['output', 'process', 'sqrt_s', 'omega', 'audit']
        config = load_config(args.config, _overrides(args, names))
    except (UsageError, *USAGE_ERRORS) as err:
        return _fail(err, EXIT_USAGE)

    logger.debug('Running %s with %s', args.command, config)
    try:
        if args.command == 'check-algebra':
            return _check('algebra', config)
        if args.command == 'check-spinors':
            return _check('spinors', config)
        if args.command == 'xsec':
            return _xsec(config, args.method)
        if args.command == 'entangle':
            return _entangle(config, args.momentum)
        return _evolve(config, args.mode, args.every, args.npz)
    except USAGE_ERRORS as err:
        return _fail(err, EXIT_USAGE)
    except (TauDiracError, ValueError) as err:
        return _fail(err, EXIT_COMPUTE)


def main() -> None:
    sys.exit(run())
