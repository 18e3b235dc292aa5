# Copyright (c) SI-Analytics. All rights reserved.
import math
from dataclasses import dataclass, field
from typing import Callable, List, Tuple

import numpy as np
from scipy import integrate, special
from scipy.stats import qmc

from .group import HomogeneousGroup


@dataclass(frozen=True)
class NormConstants:
    """Empirical constants of the homogeneous norm.

    Attributes:
        C_triangle (float): sup of ``|xy| / (|x| + |y|)``.
        c_halfnorm (float): inf of ``|y^{-1} x|`` over ``|x| = 1``,
            ``|y| <= 1/2``.
        samples (int): Sample count of the final density.
        converged (bool): Whether two successive densities agreed.
        history (list): ``(samples, C_triangle, c_halfnorm)`` per density.
    """
    C_triangle: float
    c_halfnorm: float
    samples: int
    converged: bool
    history: List[Tuple[int, float, float]] = field(default_factory=list)


def unit_sphere_points(group: HomogeneousGroup,
                       cube: np.ndarray) -> np.ndarray:
    """Push points of ``[-1, 1]^n`` onto ``{|x| = 1}`` by dilation.

    Points at the origin are dropped.
    """
    norms = group.norm(cube)
    keep = norms > 0
    return group.dilate(cube[keep], 1.0 / norms[keep])


def _constants_at(group: HomogeneousGroup, num: int) -> Tuple[float, float]:
    n = group.dim
    sample = qmc.Halton(d=2 * n + 1, scramble=False).random(num + 1)[1:]
    u = 2.0 * sample[:, :n] - 1.0
    v = 2.0 * sample[:, n:2 * n] - 1.0
    s = sample[:, 2 * n]
    keep = (group.norm(u) > 0) & (group.norm(v) > 0) & (s > 0)
    x = unit_sphere_points(group, u[keep])
    v_unit = unit_sphere_points(group, v[keep])
    s = s[keep]

    # |x| = 1 and |y| = s in (0, 1]; both products cover |x| <= |y| too
    y = group.dilate(v_unit, s)
    ratio = np.maximum(
        group.norm(group.multiply(x, y)), group.norm(group.multiply(y, x)))
    c_triangle = float(np.max(ratio / (1.0 + s)))

    y_half = group.dilate(v_unit, 0.5 * s)
    c_half = float(np.min(group.norm(group.multiply(group.inverse(y_half),
                                                    x))))
    return c_triangle, c_half


def norm_constants(group: HomogeneousGroup,
                   start: int = 512,
                   max_samples: int = 1 << 16,
                   rel_tol: float = 0.01) -> NormConstants:
    """Estimate the quasi-triangle constant and the half-norm constant.

    Deterministic Halton samples are doubled until both constants change
    by less than ``rel_tol`` between two densities.

    Args:
        group (HomogeneousGroup): The group.
        start (int): Initial sample count.
        max_samples (int): Upper bound of the sample count.
        rel_tol (float): Relative agreement that stops the refinement.

    Returns:
        NormConstants: The empirical constants with the refinement history.
    """
    history = []
    num = start
    prev = _constants_at(group, num)
    history.append((num, ) + prev)
    converged = False
    while num < max_samples:
        num *= 2
        cur = _constants_at(group, num)
        history.append((num, ) + cur)
        if all(
                abs(a - b) <= rel_tol * max(abs(b), 1e-300)
                for a, b in zip(prev, cur)):
            converged = True
            break
        prev = cur
    c_triangle, c_half = history[-1][1:]
    return NormConstants(c_triangle, c_half, num, converged, history)


def ball_volume(group: HomogeneousGroup) -> float:
    """Lebesgue measure of the unit ball ``{|x| <= 1}``.

    The norm satisfies ``|x|^{2A} = sum |x_i|^{2A/a_i}``, so integrating
    ``exp(-|x|^{2A})`` both coordinatewise and in polar form gives
    ``|B_1| * Gamma(1 + Q/(2A)) = prod 2 Gamma(1 + a_i/(2A))``.
    """
    two_a = 2 * float(group.A)
    log_vol = sum(
        math.log(2.0) + special.gammaln(1.0 + float(w) / two_a)
        for w in group.weights)
    return float(math.exp(log_vol - special.gammaln(1.0 + float(group.Q) /
                                                    two_a)))


def radial_integral(group: HomogeneousGroup,
                    profile: Callable[[float], float],
                    r_min: float = 0.0,
                    r_max: float = math.inf) -> float:
    """``int_{r_min < |x| < r_max} profile(|x|) dx`` in polar form.

    Uses ``dx = Q |B_1| rho^{Q-1} d rho`` for radial integrands.
    """
    q = float(group.Q)
    value, _ = integrate.quad(
        lambda rho: profile(rho) * rho**(q - 1.0),
        r_min,
        r_max,
        epsabs=0.0,
        epsrel=1e-12,
        limit=200)
    return q * ball_volume(group) * value


def annulus_integral(group: HomogeneousGroup, p: float, r: float) -> float:
    """``int_{|x| > r} |x|^p dx``, finite for ``p < -Q``.

    Raises:
        ValueError: If the integral diverges or ``r <= 0``.
    """
    if p >= -float(group.Q):
        raise ValueError(
            f'integral diverges for p = {p} >= -Q = {-float(group.Q)}')
    if r <= 0:
        raise ValueError(f'radius must be positive, got {r}')
    return radial_integral(group, lambda rho: rho**p, r_min=r)
