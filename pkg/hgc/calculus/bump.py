# Copyright (c) SI-Analytics. All rights reserved.
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import numpy as np

from hgc.grid import Grid, sample, translate_sum
from hgc.groups import HomogeneousGroup, radial_integral
from hgc.utils import get_root_logger


@dataclass(frozen=True)
class BumpProfile:
    """``Phi^I_sigma(x) = (1 + 2^sigma |x|)^{-I}`` in the homogeneous norm."""
    group: HomogeneousGroup
    sigma: float
    decay: float

    def __post_init__(self):
        if self.decay <= 0:
            raise ValueError(f'decay exponent must be positive, got '
                             f'{self.decay}')

    def __call__(self, x) -> np.ndarray:
        return (1.0 + 2.0**self.sigma * self.group.norm(x))**(-self.decay)

    def mass(self) -> float:
        """``int Phi^I_sigma``; finite for ``I > Q``."""
        q = float(self.group.Q)
        if self.decay <= q:
            return math.inf
        unit = radial_integral(self.group,
                               lambda rho: (1.0 + rho)**(-self.decay))
        return 2.0**(-self.sigma * q) * unit


@dataclass
class FrazierJawerthResult:
    """``sup_x (Phi^{J+Q}_sigma * Phi^J_nu)(x) / (2^{-sigma Q}
    Phi^J_nu(x))`` on a grid."""
    sigma: float
    nu: float
    J: float
    I: float
    sup_ratio: float
    argmax: List[float]
    argmax_norm: float
    origin_ratio: float

    def to_dict(self) -> dict:
        return dict(
            sigma=self.sigma,
            nu=self.nu,
            J=self.J,
            I=self.I,
            sup_ratio=self.sup_ratio,
            argmax=self.argmax,
            argmax_norm=self.argmax_norm,
            origin_ratio=self.origin_ratio)


def frazier_jawerth_ratio(group: HomogeneousGroup,
                          sigma: float,
                          nu: float,
                          J: float,
                          grid: Grid,
                          order: int = 1) -> FrazierJawerthResult:
    """Measure the bump convolution inequality with ``I = J + Q``.

    Substituting ``y = delta_{2^-sigma} u`` turns the convolution into
    ``2^{-sigma Q} int Phi^I_0(u) Phi^J_nu((delta_{2^-sigma} u)^{-1} x)
    du``; ``Phi^I_0`` is sampled on ``grid`` and ``Phi^J_nu`` is evaluated
    in closed form, so the ratio needs no division by small numbers.

    Raises:
        ValueError: If ``sigma < nu`` or ``J <= 0``.
    """
    if sigma < nu:
        raise ValueError(f'the bump inequality needs sigma >= nu, got '
                         f'sigma={sigma}, nu={nu}')
    if J <= 0:
        raise ValueError(f'J must be positive, got {J}')
    decay = J + float(group.Q)
    weights = sample(BumpProfile(group, 0.0, decay), grid)
    target = BumpProfile(group, nu, J)
    conv = translate_sum(
        group,
        weights,
        target,
        side='left',
        scale=2.0**-sigma,
        order=order,
        out_grid=grid)
    ratio = conv.values.real / target(grid.points())
    index = np.unravel_index(int(np.argmax(ratio)), grid.shape)
    point = grid.points()[index]
    return FrazierJawerthResult(
        sigma=float(sigma),
        nu=float(nu),
        J=float(J),
        I=decay,
        sup_ratio=float(ratio[index]),
        argmax=[float(v) for v in point],
        argmax_norm=float(group.norm(point)),
        origin_ratio=float(ratio[grid.origin_index]))


@dataclass
class FrazierJawerthReport:
    """A sweep over ``d = sigma - nu``.

    Attributes:
        results (list[FrazierJawerthResult]): One entry per ``d``.
        band (tuple[float, float]): Min and max of the sup ratios.
        bump_mass (float): ``2^{sigma Q} int Phi^I_sigma``, independent of
            ``sigma``.
        origin_exact (float): Closed-form ratio at the origin for
            ``sigma = nu = 0``, see :func:`origin_ratio_exact`.
    """
    results: List[FrazierJawerthResult] = field(default_factory=list)
    bump_mass: Optional[float] = None
    origin_exact: Optional[float] = None

    def result_at(self, sigma: float,
                  nu: float) -> Optional[FrazierJawerthResult]:
        for r in self.results:
            if r.sigma == sigma and r.nu == nu:
                return r
        return None

    @property
    def band(self):
        ratios = [r.sup_ratio for r in self.results]
        return min(ratios), max(ratios)

    @property
    def band_ratio(self) -> float:
        low, high = self.band
        return high / low if low > 0 else math.inf

    def rows(self):
        """CSV rows ``sigma, nu, sup_ratio, argmax_norm``."""
        return [[r.sigma, r.nu, r.sup_ratio, r.argmax_norm]
                for r in self.results]

    def to_dict(self) -> dict:
        low, high = self.band
        return dict(
            results=[r.to_dict() for r in self.results],
            band=[low, high],
            band_ratio=self.band_ratio,
            bump_mass=self.bump_mass,
            origin_exact=self.origin_exact)


def origin_ratio_exact(group: HomogeneousGroup, J: float) -> float:
    """``int Phi^{J+Q}_0(u) Phi^J_0(u^{-1}) du = int (1 + |u|)^{-(2J+Q)} du``,
    the ratio at the origin for ``sigma = nu = 0``; ``1 / 2`` on the line
    for ``J = 2``."""
    decay = 2.0 * J + float(group.Q)
    return radial_integral(group, lambda rho: (1.0 + rho)**(-decay))


def balanced_split(d: int):
    """``(sigma, nu)`` with ``sigma - nu = d``, ``sigma = ceil(d / 2)``."""
    sigma = math.ceil(d / 2)
    return sigma, sigma - d


def frazier_jawerth_sweep(group: HomogeneousGroup,
                          J: float,
                          grid: Grid,
                          d_range: Iterable[int] = range(7),
                          order: int = 1) -> FrazierJawerthReport:
    """Run :func:`frazier_jawerth_ratio` for every ``d`` in ``d_range``."""
    logger = get_root_logger()
    report = FrazierJawerthReport(
        bump_mass=BumpProfile(group, 0.0, J + float(group.Q)).mass(),
        origin_exact=origin_ratio_exact(group, J))
    for d in d_range:
        sigma, nu = balanced_split(d)
        result = frazier_jawerth_ratio(group, sigma, nu, J, grid, order)
        logger.info(f'bump ratio sigma={sigma} nu={nu}: '
                    f'{result.sup_ratio:.4f}')
        report.results.append(result)
    return report
