import math

import pytest

from taudirac.config import ALPHA, RunConfig, load_config, read_config_file, separate
from taudirac.exceptions import InvalidConfigError


def test_separate():
    assert separate(' a, b ,c') == ['a', 'b', 'c']
    assert separate('a;b', delimiter=';') == ['a', 'b']
    assert separate(None) == [None]


def test_defaults():
    config = RunConfig()

    assert config.alpha == ALPHA
    assert config.coupling == pytest.approx(math.sqrt(4 * math.pi * ALPHA))
    assert config.representation in ('dirac', 'weyl')
    assert config.output is None


def test_read_config_file(tmp_path):
    path = tmp_path / 'run.cfg'
    path.write_text('# collider run\n\nsqrt-s = 500\nprocess=compton\n', encoding='utf-8')

    assert read_config_file(path) == {'sqrt_s': '500', 'process': 'compton'}


def test_malformed_file(tmp_path):
    path = tmp_path / 'run.cfg'
    path.write_text('sqrt_s 500\n', encoding='utf-8')

    with pytest.raises(InvalidConfigError, match='run.cfg:1'):
        read_config_file(path)
    with pytest.raises(InvalidConfigError):
        read_config_file(tmp_path / 'missing.cfg')


def test_overrides_take_precedence(tmp_path):
    path = tmp_path / 'run.cfg'
    path.write_text('sqrt_s = 500\nsteps = 10\n', encoding='utf-8')
    config = load_config(path, {'sqrt-s': '700', 'process': None, 'box_edge': 2.0})

    assert config.sqrt_s == 700.0
    assert config.steps == 10
    assert config.process == 'mu-pair'
    assert config.box_edge == 2.0


def test_typed_parsing():
    config = load_config(
        overrides={
            'lattice': '8, 12',
            'spacing': '0.5,0.125',
            'separation': '1,0,0,-2',
            'workers': 'yes',
            'output': 'none',
            'audit': 'audit.json',
            'seed': '7',
        }
    )

    assert config.lattice == (8, 12)
    assert config.spacing == (0.5, 0.125)
    assert config.separation == (1.0, 0.0, 0.0, -2.0)
    assert config.workers is True
    assert config.output is None
    assert config.audit == 'audit.json'
    assert config.seed == 7


@pytest.mark.parametrize(
    'overrides',
    [
        {'colour': 'red'},
        {'steps': 'many'},
        {'workers': 'maybe'},
        {'m_e': '-1'},
        {'alpha': 'nan'},
        {'representation': 'majorana'},
        {'lattice': '1,8'},
        {'spacing': '0.25,0'},
        {'grid_points': '1'},
        {'separation': '1,2,3'},
    ],
)
def test_invalid_values(overrides):
    with pytest.raises(InvalidConfigError):
        load_config(overrides=overrides)
