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

"""Contains components related to verification suites.

Check functions are registered into named suites with the `check`
decorator and run in registration order by `run_suite`. Every check
returns a `Result`.

    Typical usage example:

    from taudirac.checks import run_suite
    results = run_suite('algebra', config)
"""

from functools import wraps
from typing import Any, Callable
from dataclasses import dataclass, field

from taudirac.config import RunConfig
from taudirac.exceptions import UnknownSuiteError
from taudirac.logger import logger

SUITES: dict[str, list[Callable[[RunConfig], 'Result']]] = {}


@dataclass(slots=True, frozen=True)
class Result:
    """Result of a check.

    Attributes:
        status (bool): (Optional) If the check passed. Default: True
        message (str): (Optional) Check message. Default: ''.
        metrics (dict): (Optional) Measured residuals by name.
    """

    status: bool = field(default=True)
    message: str = field(default='')
    metrics: dict[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {'status': self.status, 'message': self.message, 'metrics': self.metrics}


def check(suite: str) -> Callable[..., Any]:
    """Check decorator.

    Registers the decorated function in the named suite and marks it
    with a `__suite__` attribute.

    Args:
        suite (str): Suite name.

    Return:
        Decorated function.
    """

    def decorator(func: Callable[[RunConfig], Result]) -> Callable[[RunConfig], Result]:
        setattr(func, '__check__', True)
        setattr(func, '__suite__', suite)

        @wraps(func)
        def wrapper(config: RunConfig) -> Result:
            result = func(config)
            logger.debug('%s.%s: %s', suite, func.__name__, 'pass' if result.status else 'FAIL')
            return result

        SUITES.setdefault(suite, []).append(wrapper)
        return wrapper

    return decorator


def run_suite(name: str, config: RunConfig) -> list[tuple[str, Result]]:
    """Run every check of a suite.

    Args:
        name (str): Suite name.
        config (RunConfig): Run configuration.

    Returns:
        List of (check name, `Result`) in registration order.

    Raises:
        UnknownSuiteError: no suite of that name.
    """

    if name not in SUITES:
        raise UnknownSuiteError(f'"{name}" is not a check suite ({", ".join(sorted(SUITES))}).')
    return [(func.__name__, func(config)) for func in SUITES[name]]


def report(results: list[tuple[str, Result]]) -> dict[str, Any]:
    """Return the JSON report of suite results."""
    return {
        'status': all(result.status for _, result in results),
        'checks': {name: result.as_dict() for name, result in results},
    }


from taudirac.checks import algebra, spinors  # noqa: E402,F401
