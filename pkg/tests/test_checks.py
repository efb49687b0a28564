from dataclasses import replace

import pytest

from taudirac import checks
from taudirac.checks import Result, check, report, run_suite
from taudirac.checks.spinors import TPC_TAUS
from taudirac.exceptions import UnknownSuiteError


@pytest.mark.parametrize('representation', ['dirac', 'weyl'])
@pytest.mark.parametrize('suite', ['algebra', 'spinors'])
def test_suites_pass(config, suite, representation):
    results = run_suite(suite, replace(config, representation=representation))
    failed = {name: result.message for name, result in results if not result.status}

    assert results
    assert not failed


def test_algebra_suite_order_and_metrics(config):
    results = dict(run_suite('algebra', config))

    assert list(results) == [
        'anticommutators',
        'gamma5',
        'four_gamma_traces',
        'slash_squares',
        'canonical_commutator',
    ]
    assert results['anticommutators'].metrics['max_anticommutator_residual'] <= 1e-13
    assert results['four_gamma_traces'].metrics['max_trace_residual'] <= 1e-12


def test_spinor_suite_metrics(config):
    results = dict(run_suite('spinors', config))

    assert set(results['orthonormality'].metrics) == {'u_bar_u', 'v_bar_v', 'u_bar_v', 'completeness'}
    assert results['evenness'].metrics['max_evenness_residual'] == 0.0
    assert results['tpc_identity'].metrics['max_tpc_residual'] <= 1e-12
    assert results['tpc_identity'].metrics['events'] == 256
    assert results['tpc_identity'].metrics['tau_values'] == len(TPC_TAUS)


def test_unknown_suite(config):
    with pytest.raises(UnknownSuiteError):
        run_suite('gauge', config)


def test_check_decorator_registers(monkeypatch, config):
    monkeypatch.setattr(checks, 'SUITES', {})

    @check('demo')
    def passing(config):
        return Result(metrics={'value': 0.0})

    @check('demo')
    def failing(config):
        return Result(False, 'too large', {'value': 1.0})

    results = run_suite('demo', config)
    summary = report(results)

    assert [name for name, _ in results] == ['passing', 'failing']
    assert passing.__suite__ == 'demo'
    assert summary['status'] is False
    assert summary['checks']['failing'] == {'status': False, 'message': 'too large', 'metrics': {'value': 1.0}}
    assert summary['checks']['passing']['status'] is True
