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

"""Contains components required for concurrent grid sweeps.

Grid evaluations (angle grids, momentum modes, lattice points) are
independent of each other. The helpers here run them in asyncio worker
threads and always hand results back in input order so that every
reduction stays deterministic. Not meant for external use.
"""

import inspect
import asyncio
from typing import Any, Callable, Iterable, TypeVar

from taudirac.logger import logger

T = TypeVar('T')


async def asyncify(func: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
    """Run function ansyncronously.

    Run the provided funtion in an asyncio thread.

    Args:
        func: function to run in asyncio thread.

    Return:
        results of function.
    """

    if inspect.iscoroutinefunction(func):
        logger.trace('%s is already coroutine', func.__name__)  # type: ignore
        return await func(*args, **kwargs)
    logger.trace('%s is not coroutine, running in thread.', getattr(func, '__name__', func))  # type: ignore
    return await asyncio.to_thread(func, *args, **kwargs)


async def _gather(func: Callable[[Any], T], items: list[Any]) -> list[T]:
    return list(await asyncio.gather(*(asyncify(func, item) for item in items)))


def gather_ordered(
    func: Callable[[Any], T], items: Iterable[Any], workers: bool = False
) -> list[T]:
    """Evaluate a function over a grid.

    Args:
        func (Callable): Function of a single grid item.
        items (Iterable): Grid items.
        workers (bool): (optional) Evaluate concurrently in worker threads.

    Returns:
        List of results in the order of `items`.
    """

    items = list(items)
    logger.trace('Sweeping %s items, workers=%s.', len(items), workers)  # type: ignore
    if not workers:
        return [func(item) for item in items]
    return asyncio.run(_gather(func, items))


def ordered_sum(values: Iterable[Any], start: Any = 0) -> Any:
    """Sum values strictly left to right.

    Args:
        values (Iterable): Terms in grid order.
        start (Any): (optional) Initial value.

    Returns:
        Sum of all terms.
    """

    total = start
    for value in values:
        total = total + value
    return total
