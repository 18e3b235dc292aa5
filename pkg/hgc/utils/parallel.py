# Copyright (c) SI-Analytics. All rights reserved.
from typing import Callable, List, Sequence

import ray


@ray.remote
def _apply(func: Callable, item):
    return func(item)


def parallel_map(func: Callable, items: Sequence) -> List:
    """Map ``func`` over ``items``, through ray tasks when ray is running.

    ``func`` may be a plain function or a picklable callable instance; it
    travels with every task. Results come back in input order, so
    reductions over them are independent of the schedule.

    Args:
        func (Callable): A picklable callable of one argument.
        items (Sequence): The work items.

    Returns:
        List: ``[func(item) for item in items]``.
    """
    items = list(items)
    if len(items) <= 1 or not ray.is_initialized():
        return [func(item) for item in items]
    return ray.get([_apply.remote(func, item) for item in items])
