# Copyright (c) SI-Analytics. All rights reserved.
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from hgc.grid import Grid, GridFunction, idft, sample
from hgc.groups import HomogeneousGroup
from hgc.multipliers import Multiplier, multiplier_seminorm

SymbolFunc = Callable[[np.ndarray, np.ndarray], np.ndarray]


class PsiDOSymbol:
    """Symbol ``a(x, xi)`` of a pseudodifferential operator.

    Freezing the position gives a multiplier ``a_x = a(x, .)``; the
    operator acts by ``[A f](y) = (a_y^vee * f)(y)``.

    Args:
        group (HomogeneousGroup): The group.
        func (Callable): Vectorized ``func(x, xi)`` on broadcastable
            arrays of shape ``(..., n)``.
        order (float): The base order ``m``.
        support (Sequence[float], optional): Half-widths of the box
            holding the ``x``-support.
        x_independent (bool): Whether ``func`` ignores ``x``.
        name (str, optional): Display name.
    """

    def __init__(self,
                 group: HomogeneousGroup,
                 func: SymbolFunc,
                 order: float = 0.0,
                 support: Optional[Sequence[float]] = None,
                 x_independent: bool = False,
                 name: Optional[str] = None):
        self.group = group
        self.func = func
        self.order = float(order)
        self.support = None if support is None else tuple(
            float(s) for s in support)
        self.x_independent = x_independent
        self.name = name or 'symbol'
        self._kernels: Dict[Grid, GridFunction] = {}

    def __repr__(self) -> str:
        return f'PsiDOSymbol({self.name}, order={self.order:g})'

    @classmethod
    def from_multiplier(cls, m: Multiplier) -> 'PsiDOSymbol':
        return cls(
            m.group,
            lambda x, xi: m(xi),
            m.order,
            x_independent=True,
            name=m.name)

    def __call__(self, x, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        x = np.broadcast_to(np.asarray(x, dtype=float), xi.shape)
        return np.broadcast_to(self.func(x, xi), xi.shape[:-1])

    def frozen(self, y) -> Multiplier:
        y = np.asarray(y, dtype=float)
        return Multiplier(
            self.group,
            self.order,
            lambda xi: self(y, xi),
            name=f'{self.name}@{np.round(y, 6).tolist()}')

    def kernel(self, grid: Grid, y=None) -> GridFunction:
        """Kernel of ``a_y`` on the space grid; cached per grid when the
        symbol does not depend on ``y``."""
        if self.x_independent:
            if grid not in self._kernels:
                self._kernels[grid] = idft(
                    sample(self.frozen(grid.points()[grid.origin_index]),
                           grid.frequency_grid()))
            return self._kernels[grid]
        return idft(sample(self.frozen(y), grid.frequency_grid()))

    def product(self, other: 'PsiDOSymbol') -> 'PsiDOSymbol':
        """The frozen product ``a(x, xi) b(x, xi)``."""
        return PsiDOSymbol(
            self.group,
            lambda x, xi: self.func(x, xi) * other.func(x, xi),
            self.order + other.order,
            support=self.support or other.support,
            x_independent=self.x_independent and other.x_independent,
            name=f'{self.name}*{other.name}')

    def check(self,
              grid: Grid,
              positions: Optional[np.ndarray] = None,
              N: float = 3) -> Dict[str, float]:
        """Order-``m`` seminorms of frozen symbols up to weighted degree
        ``N``.

        Args:
            grid (Grid): Frequency grid.
            positions (np.ndarray, optional): Sampled ``x``; defaults to
                the corners and center of the support box (only the
                origin for ``x``-independent symbols).
            N (float): Weighted degree bound.

        Returns:
            dict: Position label to seminorm value.

        Raises:
            ValueError: If a seminorm is not finite.
        """
        if positions is None:
            positions = [np.zeros(self.group.dim)]
            if self.support is not None and not self.x_independent:
                positions += [np.array(self.support), -np.array(self.support)]
        out = {}
        for y in positions:
            value = multiplier_seminorm(self.frozen(y), N, grid).value
            if not np.isfinite(value):
                raise ValueError(f'symbol {self.name} is not of order '
                                 f'{self.order} at x={list(y)}')
            out[str(np.round(y, 6).tolist())] = value
        return out
