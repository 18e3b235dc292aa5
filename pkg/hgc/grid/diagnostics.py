# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from hgc.groups import HomogeneousGroup, Multiindex
from hgc.utils import get_root_logger
from .derivatives import partial_derivative
from .grid import GridFunction

MOMENT_TOL = 1e-8


@dataclass
class SchwartzSeminormReport:
    """``sup (1 + |x|)^I |d^alpha f(x)|`` over the valid region.

    Attributes:
        table (dict): ``(I, alpha)`` to the sup value.
    """
    table: Dict[Tuple[int, Tuple[int, ...]], float] = field(
        default_factory=dict)

    def max(self) -> float:
        return max(self.table.values(), default=0.0)

    def value(self, decay: int, alpha) -> float:
        return self.table[(decay, tuple(alpha))]

    def rows(self):
        """``(I, alpha, value)`` sorted by decay then multiindex."""
        return [(i, alpha, v) for (i, alpha), v in sorted(self.table.items())]

    def to_dict(self) -> Dict[str, float]:
        return {
            f'I={i},alpha={Multiindex(alpha)}': v
            for i, alpha, v in self.rows()
        }

    @staticmethod
    def elementwise_max(reports) -> 'SchwartzSeminormReport':
        out: Dict = {}
        for report in reports:
            for key, value in report.table.items():
                out[key] = max(out.get(key, 0.0), value)
        return SchwartzSeminormReport(out)


def schwartz_seminorms(f: GridFunction,
                       group: HomogeneousGroup,
                       max_decay: int = 4,
                       max_order: int = 4,
                       method: str = 'fd') -> SchwartzSeminormReport:
    """Tabulate ``sup (1 + |x|)^I |d^alpha f|`` for ``I <= max_decay`` and
    ``||alpha|| <= max_order``, with the homogeneous norm ``|x|``."""
    bracket = 1.0 + group.norm(f.grid.points())
    table = {}
    for alpha in Multiindex.up_to_length(group.dim, max_order):
        deriv = partial_derivative(f, alpha, method)
        for decay in range(max_decay + 1):
            table[(decay, alpha.entries)] = deriv.sup(bracket**decay)
    return SchwartzSeminormReport(table)


def moments(f: GridFunction,
            max_degree: int) -> Dict[Tuple[int, ...], complex]:
    """Quadrature moments ``int x^alpha f(x) dx`` for
    ``||alpha|| <= max_degree``."""
    points = f.grid.points()
    out = {}
    for alpha in Multiindex.up_to_length(f.grid.dim, max_degree):
        weight = np.ones(f.grid.shape)
        for axis, e in enumerate(alpha.entries):
            if e:
                weight = weight * points[..., axis]**e
        out[alpha.entries] = complex(
            np.sum(weight * f.values) * f.grid.cell_volume)
    return out


def boundary_mass(f: GridFunction, cells: int = 2) -> float:
    """``int |f|`` over the outermost ``cells`` layers of the box."""
    mask = ~f.grid.band_mask((cells, ) * f.grid.dim)
    return float(np.abs(f.values[mask]).sum() * f.grid.cell_volume)


def is_moment_free(f: GridFunction,
                   max_degree: int,
                   tol: Optional[float] = None) -> bool:
    """Whether every moment up to ``max_degree`` is below ``tol``.

    ``tol`` defaults to ``1e-8`` times the box volume.
    """
    tol = MOMENT_TOL * f.grid.volume if tol is None else tol
    edge = boundary_mass(f)
    if edge > tol:
        get_root_logger().warning(
            f'mass {edge:.3e} near the box boundary exceeds the moment '
            f'tolerance {tol:.3e}; moments may be truncated')
    return all(abs(m) <= tol for m in moments(f, max_degree).values())


def origin_derivatives(f: GridFunction,
                       max_order: int = 4) -> Dict[Tuple[int, ...], float]:
    """``|d^alpha f(0)|`` by finite differences for ``||alpha|| <=
    max_order``."""
    origin = f.grid.origin_index
    return {
        alpha.entries: abs(partial_derivative(f, alpha).values[origin])
        for alpha in Multiindex.up_to_length(f.grid.dim, max_order)
    }


def vanishes_at_origin(f: GridFunction,
                       max_order: int = 4,
                       tol: float = MOMENT_TOL) -> bool:
    """Transform-side moment check: derivatives at 0 below ``tol``."""
    return max(origin_derivatives(f, max_order).values()) <= tol
