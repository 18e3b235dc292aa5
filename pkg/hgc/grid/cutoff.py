# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from hgc.groups import HomogeneousGroup
from .grid import Grid, GridFunction, sample


def smooth_step(t) -> np.ndarray:
    """``C^infinity`` step, 0 for ``t <= 0`` and 1 for ``t >= 1``.

    Built from ``exp(-1/t)`` so every derivative vanishes at both ends.
    """
    t = np.asarray(t, dtype=float)
    with np.errstate(divide='ignore', over='ignore', invalid='ignore'):
        left = np.where(t > 0, np.exp(-1.0 / np.where(t > 0, t, 1.0)), 0.0)
        right = np.where(t < 1, np.exp(-1.0 / np.where(t < 1, 1.0 - t, 1.0)),
                         0.0)
    return left / (left + right)


@dataclass(frozen=True)
class CutoffProfile:
    """Radial cutoff equal to 1 on ``[0, r0]`` and 0 on ``[r1, inf)``.

    Args:
        r0 (float): Inner radius.
        r1 (float): Outer radius, ``r1 > r0 > 0``.
    """
    r0: float
    r1: float

    def __post_init__(self):
        if not 0 < self.r0 < self.r1:
            raise ValueError(
                f'cutoff radii must satisfy 0 < r0 < r1, got {self.r0}, '
                f'{self.r1}')

    def __call__(self, rho) -> np.ndarray:
        rho = np.asarray(rho, dtype=float)
        return 1.0 - smooth_step((rho - self.r0) / (self.r1 - self.r0))

    def radial(self,
               norm: Optional[Callable[[np.ndarray], np.ndarray]] = None,
               group: Optional[HomogeneousGroup] = None,
               complement: bool = False) -> Callable:
        """The cutoff as a field on points.

        Uses ``group.norm`` when a group is given, ``norm`` when given,
        the Euclidean norm otherwise. ``complement`` gives ``1 - cutoff``.
        """
        if group is not None:
            norm = group.norm
        elif norm is None:
            norm = lambda x: np.linalg.norm(x, axis=-1)  # noqa: E731

        def field(x):
            value = self(norm(x))
            return 1.0 - value if complement else value

        return field

    def sample(self,
               grid: Grid,
               group: Optional[HomogeneousGroup] = None,
               complement: bool = False) -> GridFunction:
        return sample(self.radial(group=group, complement=complement), grid)
