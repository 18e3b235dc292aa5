# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass

import numpy as np

from hgc.grid import CutoffProfile
from hgc.groups import HomogeneousGroup


@dataclass(frozen=True)
class LittlewoodPaleySystem:
    """Dyadic partition of unity in the homogeneous norm.

    ``phi_0 = profile(|xi|)`` equals 1 on ``{|xi| <= 1/2}`` and vanishes
    on ``{|xi| >= 2}``; ``phi = phi_0 - phi_0 o delta_2`` is supported in
    ``{1/4 <= |xi| <= 2}`` and ``phi_k = phi o delta_{2^-k}``, so
    ``sum_{k <= K} phi_k = phi_0 o delta_{2^-K}``.
    """
    group: HomogeneousGroup
    profile: CutoffProfile = CutoffProfile(0.5, 2.0)

    def phi0(self, xi) -> np.ndarray:
        return self.profile(self.group.norm(xi))

    def phi(self, xi) -> np.ndarray:
        rho = self.group.norm(xi)
        return self.profile(rho) - self.profile(2.0 * rho)

    def phi_k(self, xi, k: int) -> np.ndarray:
        """The ``k``-th function of the partition, ``k >= 0``."""
        if k < 0:
            raise ValueError(f'piece index must be nonnegative, got {k}')
        rho = self.group.norm(xi)
        if k == 0:
            return self.profile(rho)
        return (self.profile(2.0**-k * rho) -
                self.profile(2.0**(1 - k) * rho))

    def partial_sum(self, xi, K: int) -> np.ndarray:
        """``sum_{k <= K} phi_k`` summed term by term."""
        return sum(self.phi_k(xi, k) for k in range(K + 1))


def build_lp_system(group: HomogeneousGroup,
                    r0: float = 0.5,
                    r1: float = 2.0) -> LittlewoodPaleySystem:
    return LittlewoodPaleySystem(group, CutoffProfile(r0, r1))
