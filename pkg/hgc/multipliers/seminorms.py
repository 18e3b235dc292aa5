# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from hgc.grid import Grid, GridFunction, partial_derivative
from hgc.groups import Multiindex
from .decomposition import DyadicDecomposition
from .multiplier import Multiplier, symbol_order


@dataclass
class MultiplierSeminorm:
    """``sum_{|alpha| <= N} sup (1 + |xi|)^{|alpha| - j} |d^alpha m|``.

    Attributes:
        N (float): Weighted degree bound.
        order (float): The order ``j`` the function is scored against.
        value (float): The total.
        table (dict): Multiindex entries to the per-``alpha`` sup.
    """
    N: float
    order: float
    value: float
    table: Dict[Tuple[int, ...], float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return dict(
            N=self.N,
            order=self.order,
            value=self.value,
            table={str(Multiindex(a)): v
                   for a, v in sorted(self.table.items())})


def _samples(m: Union[Multiplier, GridFunction], grid: Grid) -> GridFunction:
    if isinstance(m, GridFunction):
        return m
    return m.sample(grid)


def multiplier_seminorm(m: Union[Multiplier, GridFunction],
                        N: float,
                        grid: Grid,
                        order: Optional[float] = None,
                        group=None) -> MultiplierSeminorm:
    """Score ``m`` in the order-``j`` multiplier class on ``grid``.

    Derivatives are fourth-order finite differences; the stencil band at
    the box edge is excluded from every sup.

    Args:
        m (Multiplier | GridFunction): Multiplier or its samples.
        N (float): Bound on the weighted degree ``|alpha|``.
        grid (Grid): Frequency grid (ignored for samples).
        order (float, optional): ``j``; defaults to ``m.order``.
        group (HomogeneousGroup, optional): Needed for sampled input.

    Returns:
        MultiplierSeminorm: Total and per-``alpha`` table.
    """
    group = group or m.group
    order = m.order if order is None else float(order)
    f = _samples(m, grid)
    rho = group.norm(f.grid.points())
    table = {}
    for alpha in Multiindex.up_to_degree(group.weights, N):
        degree = float(alpha.degree(group.weights))
        deriv = partial_derivative(f, alpha)
        table[alpha.entries] = deriv.sup((1.0 + rho)**(degree - order))
    return MultiplierSeminorm(float(N), order, float(sum(table.values())),
                              table)


@dataclass
class HormanderReport:
    """``sup <xi>^{-m + rho ||alpha||} |d^alpha p|`` per ``alpha``, and the
    constants of ``c (1 + |xi|) <= <xi> <= C (1 + |xi|)^{a_n}``."""
    rho: float
    order: float
    N: int
    table: Dict[Tuple[int, ...], float]
    value: float
    bracket_lower: float
    bracket_upper: float

    def to_dict(self) -> dict:
        return dict(
            rho=self.rho,
            order=self.order,
            N=self.N,
            value=self.value,
            bracket_lower=self.bracket_lower,
            bracket_upper=self.bracket_upper,
            table={str(Multiindex(a)): v
                   for a, v in sorted(self.table.items())})


def hormander_seminorm(m: Multiplier,
                       grid: Grid,
                       rho: Optional[float] = None,
                       order_m: Optional[float] = None,
                       N: int = 3) -> HormanderReport:
    """Score ``m`` in the Euclidean symbol class ``S^{order_m}_{rho}``.

    ``<xi> = (1 + ||xi||^2)^{1/2}`` uses the Euclidean norm. Defaults are
    ``rho = a_1 / a_n`` and ``order_m = symbol_order(group, j)``: ``j``
    for ``j >= 0`` and ``j / a_n`` for negative orders.
    """
    group = m.group
    a_n = float(group.weights[-1])
    rho = float(group.weights[0]) / a_n if rho is None else rho
    if order_m is None:
        order_m = symbol_order(group, m.order)
    f = m.sample(grid)
    xi = grid.points()
    bracket = np.sqrt(1.0 + np.sum(xi**2, axis=-1))
    table = {}
    for alpha in Multiindex.up_to_length(group.dim, N):
        deriv = partial_derivative(f, alpha)
        table[alpha.entries] = deriv.sup(
            bracket**(-order_m + rho * alpha.length))
    base = 1.0 + group.norm(xi)
    return HormanderReport(
        rho=rho,
        order=order_m,
        N=N,
        table=table,
        value=float(sum(table.values())),
        bracket_lower=float(np.min(bracket / base)),
        bracket_upper=float(np.max(bracket / base**a_n)))


def growth_constant(dd: DyadicDecomposition,
                    K: Optional[int] = None,
                    grid: Optional[Grid] = None) -> float:
    """Empirical ``C`` in ``sum_{k <= K} |m_k(xi)| <= C (1 + |xi|)^j``."""
    grid = grid or dd.frequency_grid
    K = dd.K if K is None else K
    xi = grid.points()
    total = sum(np.abs(dd.multiplier_term(k, xi)) for k in range(K + 1))
    return float(np.max(total / (1.0 + dd.group.norm(xi))**dd.order))


def order_convergence(dd: DyadicDecomposition,
                      Ks: Sequence[int],
                      grid: Grid,
                      j_primes: Optional[Sequence[float]] = None,
                      N: float = 2) -> Dict[float, Dict[int, float]]:
    """Seminorm of ``m - sum_{k <= K} m_k`` in the order-``j'`` class for
    ``j' > j``; the values should decrease in ``K``.

    Returns:
        dict: ``j'`` to ``{K: seminorm}``.

    Raises:
        ValueError: If the decomposition has no source multiplier.
    """
    if dd.source is None:
        raise ValueError('order convergence needs the decomposed multiplier')
    j = dd.order
    j_primes = j_primes or (j + 0.25, j + 0.5, j + 1.0)
    source = dd.source.sample(grid)
    out: Dict[float, Dict[int, float]] = {jp: {} for jp in j_primes}
    for K in Ks:
        rest = source.values - dd.partial_sum(grid.points(), K)
        remainder = GridFunction(grid, rest)
        for jp in j_primes:
            out[jp][K] = multiplier_seminorm(
                remainder, N, grid, order=jp, group=dd.group).value
    return out
