import logging

import pytest

from taudirac.exceptions import InvalidLoggingLevelError
from taudirac.logger import LOG_LEVEL, LogFormatter, formatter, handler, logger, set_level


@pytest.fixture(autouse=True)
def restore_level():
    level = logger.level
    yield
    set_level(LOG_LEVEL(level).name)


@pytest.mark.parametrize('name', ['info', 'DEBUG', 'Trace', 'none'])
def test_set_level(name):
    set_level(name)

    assert logger.level == LOG_LEVEL[name.upper()]
    assert handler.level == logger.level
    assert formatter.level == logger.level


def test_invalid_level():
    with pytest.raises(InvalidLoggingLevelError, match='verbose'):
        set_level('verbose')


def test_trace_level_registered():
    assert logging.TRACE == LOG_LEVEL.TRACE
    assert logging.getLevelName(LOG_LEVEL.TRACE) == 'TRACE'
    assert callable(logger.trace)


def record(level):
    return logging.LogRecord('taudirac', level, __file__, 10, 'value %s', (3,), None, 'emit')


def test_formats_by_level():
    quiet = LogFormatter(LOG_LEVEL.WARN)
    verbose = LogFormatter(LOG_LEVEL.DEBUG)

    assert quiet.format(record(logging.INFO)) == 'value 3'
    assert quiet.format(record(logging.WARNING)) == 'WARNING: value 3'
    assert 'emit()' in verbose.format(record(logging.INFO))
