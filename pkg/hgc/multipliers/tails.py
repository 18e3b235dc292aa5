# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from hgc.grid import (CutoffProfile, GridFunction, partial_derivative,
                      schwartz_seminorms)
from hgc.groups import Multiindex
from .decomposition import DyadicDecomposition

NOISE_FLOOR = 1e-13


@dataclass
class TailReport:
    """Decay of the kernel pieces away from the origin.

    Attributes:
        radius (float): ``r`` of the region ``{|x| > r}``.
        terms (dict): Key ``'I=..,J=..,alpha=..'`` to the per-``k`` values
            ``2^{Ik} sup_{|x| > r} |x|^J |(d^alpha phi_k)(delta_{2^k} x)|``.
        ratios (dict): Successive ratios of the terms, ``None`` where the
            previous term is zero.
        converged (dict): Whether the terms decay geometrically from
            ``start`` on.
        partial_sum_differences (list[float]): Max Schwartz seminorm of
            ``(1 - zeta) f_K``, the step between consecutive partial sums
            of the cut-off kernel.
    """
    radius: float
    terms: Dict[str, List[float]] = field(default_factory=dict)
    ratios: Dict[str, List[Optional[float]]] = field(default_factory=dict)
    converged: Dict[str, bool] = field(default_factory=dict)
    partial_sum_differences: List[float] = field(default_factory=list)

    @property
    def all_converged(self) -> bool:
        return all(self.converged.values())

    def to_dict(self) -> dict:
        return dict(
            radius=self.radius,
            terms=self.terms,
            ratios=self.ratios,
            converged=self.converged,
            partial_sum_differences=self.partial_sum_differences)


def tail_key(decay: int, weight: int, alpha) -> str:
    return f'I={decay},J={weight},alpha={Multiindex(tuple(alpha))}'


def tail_smoothness_check(dd: DyadicDecomposition,
                          zeta: CutoffProfile = CutoffProfile(0.25, 0.5),
                          max_decay: int = 3,
                          max_weight: int = 3,
                          max_order: int = 2,
                          start: int = 2,
                          seminorm_order: int = 2) -> TailReport:
    """Check that ``(1 - zeta) K = sum_k (1 - zeta) f_k`` converges in the
    Schwartz topology.

    With ``y = delta_{2^k} x`` each term is
    ``2^{(I-J)k} sup_{|y| > 2^k r} |y|^J |d^alpha phi_k(y)|`` on the kernel
    grid, with ``r = zeta.r0``. Terms below ``1e-13`` of the largest term
    of their row count as zero.

    Args:
        dd (DyadicDecomposition): The decomposition.
        zeta (CutoffProfile): Cutoff near the origin.
        max_decay (int): Largest ``I``.
        max_weight (int): Largest ``J``.
        max_order (int): Largest ``||alpha||``.
        start (int): First ``k`` from which ratios must stay below 1.
        seminorm_order (int): Derivative and decay order of the seminorms
            of the partial-sum steps.

    Returns:
        TailReport: Terms, ratios and partial-sum steps.
    """
    group = dd.group
    grid = dd.kernel_grid
    rho = group.norm(grid.points())
    r = zeta.r0
    report = TailReport(radius=r)

    sups: Dict[tuple, List[float]] = {}
    for k in range(len(dd)):
        piece = dd.kernel_piece(k)
        region = rho > 2.0**k * r
        for alpha in Multiindex.up_to_length(group.dim, max_order):
            deriv = partial_derivative(piece, alpha)
            mask = region & deriv.valid_mask()
            magnitude = np.abs(deriv.values)
            for weight in range(max_weight + 1):
                value = float(np.max(rho[mask]**weight *
                                     magnitude[mask])) if mask.any() else 0.0
                sups.setdefault((weight, alpha.entries), []).append(value)

    for (weight, alpha), values in sups.items():
        for decay in range(max_decay + 1):
            terms = [
                2.0**((decay - weight) * k) * v for k, v in enumerate(values)
            ]
            floor = NOISE_FLOOR * max(terms, default=0.0)
            terms = [t if t > floor else 0.0 for t in terms]
            ratios = [
                terms[k + 1] / terms[k] if terms[k] > 0 else None
                for k in range(len(terms) - 1)
            ]
            key = tail_key(decay, weight, alpha)
            report.terms[key] = terms
            report.ratios[key] = ratios
            report.converged[key] = all(
                ratio is None or ratio < 1.0 for ratio in ratios[start:])

    outside = zeta.sample(grid, group, complement=True).values
    for k in range(len(dd)):
        step = GridFunction(grid, outside * dd.kernel_term(k).values)
        report.partial_sum_differences.append(
            schwartz_seminorms(step, group, seminorm_order,
                               seminorm_order).max())
    return report
