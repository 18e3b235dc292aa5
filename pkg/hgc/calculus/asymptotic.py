# Copyright (c) SI-Analytics. All rights reserved.
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from hgc.grid import CutoffProfile, Grid
from hgc.multipliers import (Multiplier, OrderEstimate, estimate_order,
                             multiplier_seminorm)
from hgc.utils import get_root_logger

SLOPE_MARGIN = 0.2
NUM_ANNULI = 9


@dataclass
class RemainderCertificate:
    """Fitted order of ``J - sum_{i <= N} J_i`` against ``j - (N + 1)``."""
    N: int
    estimate: OrderEstimate
    threshold: float

    @property
    def passed(self) -> bool:
        return self.estimate.slope <= self.threshold

    def to_dict(self) -> dict:
        return dict(
            N=self.N,
            slope=self.estimate.slope,
            threshold=self.threshold,
            passed=self.passed,
            fit=self.estimate.to_dict())


class AsymptoticSum(Multiplier):
    """``J(xi) = sum_i psi(delta_{t_i} xi) J_i(xi)``.

    ``psi`` vanishes on ``{|xi| <= 1}`` and is 1 on ``{|xi| >= 2}``, so the
    ``i``-th term only switches on beyond ``|xi| = 1 / t_i``.

    Args:
        terms (Sequence[Multiplier]): ``J_0, J_1, ...``.
        order (float): ``j``; ``J_i`` is taken to have order ``j - i``.
        scales (Sequence[float]): Decreasing ``t_0 > t_1 > ...``.
        constants (Sequence[float]): The seminorms ``C_i`` behind the
            scales.
        profile (CutoffProfile): ``psi = 1 - profile(|xi|)``.
    """

    def __init__(self,
                 terms: Sequence[Multiplier],
                 order: float,
                 scales: Sequence[float],
                 constants: Sequence[float],
                 profile: CutoffProfile = CutoffProfile(1.0, 2.0)):
        super().__init__(terms[0].group, order, name='AsymptoticSum')
        self.terms = list(terms)
        self.scales = [float(t) for t in scales]
        self.constants = [float(c) for c in constants]
        self.profile = profile

    def cutoff(self, i: int, xi: np.ndarray) -> np.ndarray:
        """``psi(delta_{t_i} xi)``."""
        rho = self.group.norm(self.group.dilate(xi, self.scales[i]))
        return 1.0 - self.profile(rho)

    def evaluate(self, xi):
        return sum(
            self.cutoff(i, xi) * term(xi)
            for i, term in enumerate(self.terms))

    def remainder(self, N: int) -> Multiplier:
        """``J - sum_{i <= N} J_i``, summed term by term so that no
        cancellation of large values is involved."""
        if N < 0 or N >= len(self.terms):
            raise ValueError(f'remainder index {N} outside the '
                             f'{len(self.terms)} terms')

        def rest(xi):
            total = 0.0
            for i, term in enumerate(self.terms):
                weight = self.cutoff(i, xi)
                if i <= N:
                    weight = weight - 1.0
                total = total + weight * term(xi)
            return total

        return Multiplier(
            self.group,
            self.order - (N + 1),
            rest,
            name=f'AsymptoticRemainder{N}')

    @property
    def first_annulus(self) -> int:
        """First dyadic annulus where every cutoff equals 1."""
        return max(0, math.ceil(math.log2(2.0 / self.scales[-1])))

    def certificates(self,
                     Ns: Sequence[int] = (0, 1, 2),
                     num_annuli: int = NUM_ANNULI,
                     num_points: int = 512) -> List[RemainderCertificate]:
        """Fit the order of every remainder in ``Ns`` that has terms."""
        start = self.first_annulus
        ks = range(start, start + num_annuli)
        out = []
        for N in Ns:
            if N >= len(self.terms):
                continue
            estimate = estimate_order(
                self.remainder(N), ks=ks, num_points=num_points)
            out.append(
                RemainderCertificate(N, estimate,
                                     self.order - (N + 1) + SLOPE_MARGIN))
        return out

    def to_dict(self) -> Dict:
        return dict(
            order=self.order,
            terms=[repr(t) for t in self.terms],
            scales=self.scales,
            constants=self.constants)


def select_scales(constants: Sequence[float]) -> List[float]:
    """``t_0 = min(1, 1 / C_0)``, ``t_i = min(t_{i-1} / 2, 2^-i / C_i)``;
    ``C_i = 0`` leaves ``t_{i-1} / 2``."""
    scales = []
    for i, c in enumerate(constants):
        previous = 1.0 if i == 0 else scales[-1] / 2.0
        bound = 2.0**-i / c if c > 0 else math.inf
        scales.append(min(previous, bound))
    return scales


def asymptotic_sum(terms: Sequence[Multiplier],
                   grid: Grid,
                   order: Optional[float] = None,
                   profile: CutoffProfile = CutoffProfile(1.0, 2.0)
                   ) -> AsymptoticSum:
    """Sum a ladder ``J_i`` of orders ``j - i`` into one multiplier of
    order ``j``.

    ``C_i`` is the order ``j - i`` seminorm of ``J_i`` with weighted
    degree up to ``i`` on ``grid``; the scales then satisfy
    ``C_i t_i <= 2^-i`` and decrease at least geometrically.

    Args:
        terms (Sequence[Multiplier]): The ladder.
        grid (Grid): Frequency grid for the seminorms.
        order (float, optional): ``j``; defaults to the order of ``J_0``.
        profile (CutoffProfile): Inner cutoff, ``psi = 1 - profile``.

    Returns:
        AsymptoticSum: The sum, with :meth:`AsymptoticSum.certificates`
        for the remainders.

    Raises:
        ValueError: If ``terms`` is empty.
    """
    terms = list(terms)
    if not terms:
        raise ValueError('asymptotic_sum needs at least one term')
    order = terms[0].order if order is None else float(order)
    constants = [
        multiplier_seminorm(term, i, grid, order=order - i).value
        for i, term in enumerate(terms)
    ]
    scales = select_scales(constants)
    get_root_logger().info(
        'asymptotic sum scales: ' +
        ', '.join(f't{i}={t:.3g}' for i, t in enumerate(scales)))
    return AsymptoticSum(terms, order, scales, constants, profile)
