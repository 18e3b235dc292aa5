# Copyright (c) SI-Analytics. All rights reserved.
import collections
from typing import Callable, List, Sequence, Union

from .rewriters.builder import build_rewriter


class ContextManager:
    """Runs the experiment context through a rewriting pipeline before it
    reaches a scenario.

    The context starts as the flat experiment config (group name, grid
    block, seed, scenario parameters) and leaves as the objects a
    scenario computes with.
    """

    def __init__(self, rewriters: Sequence[Union[dict, Callable]] = ()):
        """Initialize the context manager.

        Args:
            rewriters (Sequence[dict | Callable]): Rewriter configs or
                callables, applied in order. Defaults to ().

        Raises:
            TypeError: If a rewriter is neither a dict nor callable.
        """
        self.rewriters: List[Callable] = []
        assert isinstance(rewriters, collections.abc.Sequence)
        for rewriter in rewriters:
            if isinstance(rewriter, dict):
                self.rewriters.append(build_rewriter(rewriter))
            elif callable(rewriter):
                self.rewriters.append(rewriter)
            else:
                raise TypeError('rewriter must be callable or a dict')

    def rewrite(self, context: dict) -> dict:
        for rewriter in self.rewriters:
            context = rewriter(context)
        return context

    def __call__(self, func: Callable) -> Callable:
        """Wrap ``func`` so that it receives the rewritten context.

        Args:
            func (Callable): The function to be decorated.
        """

        def inner(**context):
            return func(**self.rewrite(context))

        return inner
