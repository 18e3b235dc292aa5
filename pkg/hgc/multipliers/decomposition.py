# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np

from hgc.grid import (MOMENT_TOL, Grid, GridFunction, Interpolator,
                      SchwartzSeminormReport, idft, origin_derivatives,
                      sample, schwartz_seminorms)
from hgc.groups import HomogeneousGroup
from hgc.utils import get_root_logger
from .littlewood_paley import LittlewoodPaleySystem, build_lp_system
from .multiplier import Multiplier

Piece = Union[Callable[[np.ndarray], np.ndarray], GridFunction]


@dataclass
class BoundednessReport:
    """Schwartz seminorm tables of the frequency pieces.

    Attributes:
        per_piece (list[SchwartzSeminormReport]): One table per ``k``.
        running_max (list[float]): Max table entry over ``k' <= k``.
        table (SchwartzSeminormReport): Entrywise max over all pieces.
    """
    per_piece: List[SchwartzSeminormReport]
    running_max: List[float] = field(default_factory=list)
    table: Optional[SchwartzSeminormReport] = None

    def __post_init__(self):
        if not self.running_max:
            best = 0.0
            for report in self.per_piece:
                best = max(best, report.max())
                self.running_max.append(best)
        if self.table is None:
            self.table = SchwartzSeminormReport.elementwise_max(
                self.per_piece)

    def is_stable(self, K: int, extra: int = 4, rel_tol: float = 0.01):
        """Whether the max over ``k <= K`` is within ``rel_tol`` of the
        max over ``k <= K + extra``."""
        if K + extra >= len(self.running_max):
            raise ValueError(f'stability at K = {K} needs {K + extra + 1} '
                             f'pieces, have {len(self.running_max)}')
        early, late = self.running_max[K], self.running_max[K + extra]
        return abs(late - early) <= rel_tol * max(abs(late), 1e-300)

    def to_dict(self) -> dict:
        return dict(
            running_max=list(self.running_max),
            table=self.table.to_dict(),
            per_piece_max=[r.max() for r in self.per_piece])


class DyadicDecomposition:
    """``m = sum_k 2^{jk} psi_k o delta_{2^-k}`` with the kernel view
    ``K = sum_k 2^{(j+Q)k} phi_k o delta_{2^k}``, ``phi_k`` the inverse
    transform of ``psi_k``.

    Pieces are closed-form callables (sampled directly where needed) or
    samples on ``kernel_grid.frequency_grid()``, interpolated off-grid
    with cubic splines.

    Args:
        group (HomogeneousGroup): The group.
        order (float): The order ``j``.
        pieces (Sequence): ``psi_0, ..., psi_K``.
        kernel_grid (Grid): Space grid of the kernel pieces ``phi_k``;
            its frequency grid carries the frequency pieces.
        lp (LittlewoodPaleySystem, optional): The partition used.
        source (Multiplier, optional): The decomposed multiplier.
    """

    def __init__(self,
                 group: HomogeneousGroup,
                 order: float,
                 pieces: Sequence[Piece],
                 kernel_grid: Grid,
                 lp: Optional[LittlewoodPaleySystem] = None,
                 source: Optional[Multiplier] = None):
        if not pieces:
            raise ValueError('a decomposition needs at least one piece')
        if kernel_grid.dim != group.dim:
            raise ValueError(f'{kernel_grid.dim}-dim grid for a '
                             f'{group.dim}-dim group')
        self.group = group
        self.order = float(order)
        self.pieces = list(pieces)
        self.kernel_grid = kernel_grid
        self.frequency_grid = kernel_grid.frequency_grid()
        self.lp = lp
        self.source = source
        self._samples: Dict[int, GridFunction] = {}
        self._kernels: Dict[int, GridFunction] = {}
        self._interps: Dict[int, Interpolator] = {}

    def __len__(self) -> int:
        return len(self.pieces)

    @property
    def K(self) -> int:
        return len(self.pieces) - 1

    def piece(self, k: int) -> GridFunction:
        """``psi_k`` sampled on the frequency grid."""
        if k not in self._samples:
            piece = self.pieces[k]
            if isinstance(piece, GridFunction):
                self._samples[k] = piece
            else:
                self._samples[k] = sample(piece, self.frequency_grid)
        return self._samples[k]

    def piece_values(self, k: int, xi: np.ndarray) -> np.ndarray:
        piece = self.pieces[k]
        if not isinstance(piece, GridFunction):
            return np.asarray(piece(xi))
        if k not in self._interps:
            self._interps[k] = Interpolator(piece, order=3)
        return self._interps[k](xi)

    def multiplier_term(self, k: int, xi) -> np.ndarray:
        """``m_k(xi) = 2^{jk} psi_k(delta_{2^-k} xi)``."""
        xi = np.asarray(xi, dtype=float)
        scaled = self.group.dilate(xi, 2.0**-k) if k else xi
        return 2.0**(self.order * k) * self.piece_values(k, scaled)

    def partial_sum(self, xi, K: Optional[int] = None) -> np.ndarray:
        """``sum_{k <= K} m_k(xi)``."""
        K = self.K if K is None else K
        if K > self.K:
            raise ValueError(f'partial sum to {K} with only {self.K} pieces')
        return sum(self.multiplier_term(k, xi) for k in range(K + 1))

    def kernel_piece(self, k: int) -> GridFunction:
        """``phi_k``, the inverse transform of ``psi_k``, on the kernel
        grid."""
        if k not in self._kernels:
            self._kernels[k] = idft(self.piece(k))
        return self._kernels[k]

    def kernel_term(self, k: int, grid: Optional[Grid] = None) -> GridFunction:
        """``f_k = 2^{(j+Q)k} phi_k o delta_{2^k}`` sampled on ``grid``."""
        grid = grid or self.kernel_grid
        points = self.group.dilate(grid.points(), 2.0**k) if k else \
            grid.points()
        values = Interpolator(self.kernel_piece(k), order=3)(points)
        scale = 2.0**((self.order + float(self.group.Q)) * k)
        return GridFunction(grid, scale * values)

    def kernel_partial_sum(self, K: int,
                           grid: Optional[Grid] = None) -> GridFunction:
        grid = grid or self.kernel_grid
        total = np.zeros(grid.shape, dtype=complex)
        for k in range(K + 1):
            total += self.kernel_term(k, grid).values
        return GridFunction(grid, total)

    def truncated(self, K: int) -> 'DyadicDecomposition':
        return DyadicDecomposition(self.group, self.order,
                                   self.pieces[:K + 1], self.kernel_grid,
                                   self.lp, self.source)

    def moment_defects(self, max_order: int = 4) -> List[float]:
        """Largest ``|d^alpha psi_k(0)|`` per piece ``k >= 1``."""
        return [
            max(origin_derivatives(self.piece(k), max_order).values())
            for k in range(1, len(self.pieces))
        ]

    def is_moment_free(self, max_order: int = 4,
                       tol: float = MOMENT_TOL) -> bool:
        return all(d <= tol for d in self.moment_defects(max_order))

    def boundedness(self,
                    max_decay: int = 4,
                    max_order: int = 4) -> BoundednessReport:
        """Schwartz seminorm tables of every ``psi_k`` up to
        ``(I, ||alpha||) <= (max_decay, max_order)``."""
        return BoundednessReport([
            schwartz_seminorms(self.piece(k), self.group, max_decay,
                               max_order) for k in range(len(self.pieces))
        ])


def _first_piece(lp: LittlewoodPaleySystem, m: Multiplier) -> Callable:

    def psi(xi):
        return lp.phi0(xi) * m(xi)

    return psi


def _piece(lp: LittlewoodPaleySystem, m: Multiplier, k: int) -> Callable:
    scale = 2.0**(-m.order * k)
    r = 2.0**k

    def psi(xi):
        return scale * lp.phi(xi) * m(lp.group.dilate(xi, r))

    return psi


def decompose(m: Multiplier,
              K: int,
              kernel_grid: Grid,
              lp: Optional[LittlewoodPaleySystem] = None,
              check: bool = True) -> DyadicDecomposition:
    """Cut ``m`` into rescaled pieces along the Littlewood-Paley system.

    ``psi_0 = phi_0 m`` and ``psi_k = 2^{-jk} phi (m o delta_{2^k})`` for
    ``k >= 1``; the pieces stay closed-form, so ``m_k = phi_k m`` exactly.

    Args:
        m (Multiplier): The multiplier, order ``m.order``.
        K (int): Index of the last piece.
        kernel_grid (Grid): Space grid for the kernel view.
        lp (LittlewoodPaleySystem, optional): Defaults to
            :func:`build_lp_system`.
        check (bool): Sample every piece once, raising
            :class:`~hgc.utils.GridError` on non-finite values.

    Returns:
        DyadicDecomposition: The decomposition.
    """
    if K < 0:
        raise ValueError(f'K must be nonnegative, got {K}')
    lp = lp or build_lp_system(m.group)
    pieces = [_first_piece(lp, m)] + [_piece(lp, m, k) for k in range(1, K + 1)]
    dd = DyadicDecomposition(m.group, m.order, pieces, kernel_grid, lp, m)
    if check:
        for k in range(K + 1):
            dd.piece(k)
    get_root_logger().info(f'decomposed {m.name} into {K + 1} pieces')
    return dd


def reconstruct(dd: DyadicDecomposition,
                K: int,
                grid: Optional[Grid] = None) -> GridFunction:
    """``sum_{k <= K} m_k`` sampled on ``grid`` (default: the frequency
    grid of the decomposition)."""
    grid = grid or dd.frequency_grid
    return GridFunction(grid, dd.partial_sum(grid.points(), K))
