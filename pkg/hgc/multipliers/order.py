# Copyright (c) SI-Analytics. All rights reserved.
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Union

import numpy as np
from scipy.stats import qmc

from hgc.groups import HomogeneousGroup
from .multiplier import Multiplier

ZERO_FLOOR = 1e-300


@dataclass
class OrderEstimate:
    """Least-squares fit of ``log2 sup_{annulus k} |m|`` against ``k``.

    Attributes:
        slope (float): The fitted order; ``-inf`` when ``m`` vanishes on
            every annulus.
        residual (float): Largest absolute fit residual in ``log2`` units.
        ks (list[int]): Annulus indices used.
        sups (list[float]): ``sup |m|`` on ``{2^k <= |xi| < 2^{k+1}}``.
    """
    slope: float
    residual: float
    ks: List[int]
    sups: List[float]

    def to_dict(self) -> dict:
        return dict(
            slope=self.slope,
            residual=self.residual,
            ks=list(self.ks),
            sups=list(self.sups))


def annulus_points(group: HomogeneousGroup,
                   k: int,
                   num_points: int = 512) -> np.ndarray:
    """Deterministic points of ``{2^k <= |xi| < 2^{k+1}}``.

    Halton points of the cube are pushed to the unit sphere by dilation
    and then dilated by radii filling ``[2^k, 2^{k+1})``.
    """
    n = group.dim
    raw = qmc.Halton(d=n + 1, scramble=False).random(num_points + 1)[1:]
    cube = 2.0 * raw[:, :n] - 1.0
    norms = group.norm(cube)
    keep = norms > 0
    unit = group.dilate(cube[keep], 1.0 / norms[keep])
    radii = 2.0**(k + raw[keep, n])
    return group.dilate(unit, radii)


def estimate_order(m: Union[Multiplier, Callable],
                   group: Optional[HomogeneousGroup] = None,
                   ks: Sequence[int] = tuple(range(2, 11)),
                   num_points: int = 512) -> OrderEstimate:
    """Fit the growth order of ``m`` over dyadic annuli.

    Diagnostic only; the declared order of a multiplier is never
    overridden by it.

    Raises:
        ValueError: If fewer than 3 annuli are given.
    """
    group = group or m.group
    ks = list(ks)
    if len(ks) < 3:
        raise ValueError(f'order fit needs at least 3 annuli, got {len(ks)}')
    sups = [
        float(np.max(np.abs(m(annulus_points(group, k, num_points)))))
        for k in ks
    ]
    if not any(sups):
        return OrderEstimate(-math.inf, 0.0, ks, sups)
    logs = np.log2(np.maximum(sups, ZERO_FLOOR))
    slope, intercept = np.polyfit(ks, logs, 1)
    residual = float(np.max(np.abs(logs - (slope * np.array(ks) + intercept))))
    return OrderEstimate(float(slope), residual, ks, sups)
