# Copyright (c) SI-Analytics. All rights reserved.
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from hgc.grid import (GridFunction, dft, is_moment_free, schwartz_seminorms,
                      translate_sum)
from hgc.groups import HomogeneousGroup
from hgc.multipliers import DyadicDecomposition
from hgc.utils import DecayCertificateError, DivisionError, get_root_logger

CERTIFICATE_LEVELS = (0, 1, 2)
NOISE_FLOOR = 1e-10
RATIO_SLACK = 1.5


@dataclass
class RescaledPiece:
    """``eta_{k,l}`` and ``eta'_{k,l}`` of a fine piece ``phi`` (index
    ``k``) against a coarse piece ``psi`` (index ``l``).

    ``f_k * g_l = 2^{(j1+j2+Q) l} eta o delta_{2^l}`` and the same for
    ``g_l * f_k`` with ``eta'``.

    Attributes:
        certificate (dict): ``L`` to the max Schwartz seminorm of
            ``2^{(k-l)(L-j1)} eta``.
    """
    k: int
    l: int
    eta: GridFunction
    eta_prime: GridFunction
    certificate: Dict[int, float] = field(default_factory=dict)


def _rescaled(group, fine, coarse, d, j_fine, side, order, atol):
    out = translate_sum(
        group,
        fine,
        coarse,
        side=side,
        scale=2.0**-d,
        order=order,
        atol=atol,
        out_grid=coarse.grid)
    return GridFunction(out.grid, 2.0**(j_fine * d) * out.values)


def _seminorm(group, f: GridFunction, level: int = 1) -> float:
    return schwartz_seminorms(f, group, level, level).max()


def rescale_piece(group: HomogeneousGroup,
                  phi: GridFunction,
                  psi: GridFunction,
                  k: int,
                  l: int,
                  j1: float,
                  j2: float = 0.0,
                  order: int = 3,
                  atol: float = 1e-13,
                  moment_tol: Optional[float] = None) -> RescaledPiece:
    """Convolve two rescaled kernel pieces and undo the coarse scaling.

    With ``d = k - l`` and ``s = 2^{-d}``::

        eta(z)  = 2^{d j1} int phi(u) psi((delta_s u)^{-1} z) du
        eta'(z) = 2^{d j1} int phi(u) psi(z (delta_s u)^{-1}) du

    ``j2`` only enters the normalization ``2^{(j1+j2+Q) l}`` that
    :class:`RescaledPiece` documents.

    Raises:
        ValueError: If ``k < l``.
        DivisionError: If ``k > l`` and ``phi`` is not moment-free.
    """
    if k < l:
        raise ValueError(f'rescale_piece needs k >= l, got k={k}, l={l}')
    if k > l and not is_moment_free(phi, 2, moment_tol):
        raise DivisionError(f'fine piece {k} is not moment-free')
    d = k - l
    eta = _rescaled(group, phi, psi, d, j1, 'left', order, atol)
    eta_prime = _rescaled(group, phi, psi, d, j1, 'right', order, atol)
    certificate = {
        level: _seminorm(group, eta * 2.0**(d * (level - j1)), 2)
        for level in CERTIFICATE_LEVELS
    }
    return RescaledPiece(k, l, eta, eta_prime, certificate)


@dataclass
class CompositionResult:
    """Output of :func:`convolve_kernels`.

    Attributes:
        decomposition (DyadicDecomposition): Order ``j1 + j2``, pieces are
            the transforms of ``nu_k``.
        kernel_pieces (list[GridFunction]): ``nu_0, ..., nu_K``.
        addend_norms (dict): ``'tau'``/``'eta'`` to ``{index: [norms]}``,
            one norm per addend in order of ``|k1 - k2|``.
        decay_ratios (dict): ``'tau:k'``/``'eta:k'`` to the fitted ratio
            of consecutive addends.
    """
    decomposition: DyadicDecomposition
    kernel_pieces: List[GridFunction]
    j1: float
    j2: float
    K: int
    L: int
    addend_norms: Dict[str, Dict[int, List[float]]]
    decay_ratios: Dict[str, float]

    @property
    def max_ratio(self) -> float:
        return max(self.decay_ratios.values(), default=0.0)

    @property
    def ratio_bound(self) -> float:
        """``2^{-(L - max(j1, j2))}``, the rate the regrouping predicts."""
        return 2.0**-(self.L - max(self.j1, self.j2))

    def certify(self, slack: float = RATIO_SLACK) -> None:
        """Check every fitted ratio against ``slack * ratio_bound``.

        Raises:
            DecayCertificateError: If a regrouped sum decays slower.
        """
        limit = slack * self.ratio_bound
        slow = {
            name: ratio
            for name, ratio in self.decay_ratios.items() if ratio > limit
        }
        if slow:
            raise DecayCertificateError(
                f'regrouped sums decay slower than {limit:.3f} '
                f'(L={self.L}, j1={self.j1}, j2={self.j2}): {slow}')


def decay_ratio(norms: List[float], floor: float = NOISE_FLOOR) -> float:
    """``2^slope`` of ``log2`` norms above ``floor * max``; 0 when fewer
    than two addends are above the floor."""
    peak = max(norms, default=0.0)
    points = [(i, v) for i, v in enumerate(norms) if v > floor * peak]
    if len(points) < 2:
        return 0.0
    index, values = zip(*points)
    slope = np.polyfit(index, np.log2(values), 1)[0]
    return float(2.0**slope)


def convolve_kernels(dd1: DyadicDecomposition,
                     dd2: DyadicDecomposition,
                     K: Optional[int] = None,
                     L: Optional[int] = None,
                     order: int = 3,
                     rel_tol: float = NOISE_FLOOR,
                     atol: float = 1e-13,
                     ratio_slack: Optional[float] = RATIO_SLACK
                     ) -> CompositionResult:
    """Group convolution of two kernels given by dyadic decompositions.

    Every ``h_{k1,k2} = f_{k1} * g_{k2}`` with ``k1, k2 <= K`` goes to
    output piece ``min(k1, k2)``: for ``k2 >= k1`` it is ``tau_{k1,k2}``
    (the fine factor ``g`` sits on the right), for ``k1 > k2`` it is
    ``eta_{k1,k2}`` (fine factor on the left). Each regrouped sum stops
    once an addend falls below ``rel_tol`` of the first one.

    Args:
        dd1 (DyadicDecomposition): ``K1``, order ``j1``.
        dd2 (DyadicDecomposition): ``K2``, order ``j2``.
        K (int, optional): Truncation depth, at most the piece counts.
        L (int, optional): Certificate level; defaults to the smallest
            integer above ``max(j1, j2)``.
        order (int): Interpolation order of the coarse factor.
        rel_tol (float): Relative addend size that ends a regrouped sum.
        atol (float): Skip tolerance of fine-factor weights.
        ratio_slack (float, optional): Allowed factor over
            :attr:`CompositionResult.ratio_bound`; ``None`` only records
            the ratios.

    Returns:
        CompositionResult: The order ``j1 + j2`` decomposition and its
        decay certificate.

    Raises:
        ValueError: On mismatched inputs or ``L <= max(j1, j2)``.
        DecayCertificateError: If a regrouped sum does not decay, or
            decays slower than ``ratio_slack * ratio_bound``.
    """
    if dd1.kernel_grid != dd2.kernel_grid:
        raise ValueError('decompositions live on different kernel grids')
    if dd1.group is not dd2.group and dd1.group.to_dict()['law'] != \
            dd2.group.to_dict()['law']:
        raise ValueError('decompositions belong to different groups')
    group = dd1.group
    j1, j2 = dd1.order, dd2.order
    max_j = max(j1, j2)
    L = math.floor(max_j) + 1 if L is None else L
    if L <= max_j:
        raise ValueError(f'certificate level L={L} must exceed '
                         f'max(j1, j2)={max_j}')
    K = min(dd1.K, dd2.K) if K is None else K
    if K > min(dd1.K, dd2.K):
        raise ValueError(f'depth {K} exceeds the available pieces')

    logger = get_root_logger()
    grid = dd1.kernel_grid
    norms: Dict[str, Dict[int, List[float]]] = dict(tau={}, eta={})
    ratios: Dict[str, float] = {}
    pieces = []
    for k in range(K + 1):
        total = np.zeros(grid.shape, dtype=complex)
        coarse1, coarse2 = dd1.kernel_piece(k), dd2.kernel_piece(k)

        # tau_{k,k2}, k2 >= k: fine g_{k2} weights, coarse f_k target
        tau_norms = []
        for k2 in range(k, K + 1):
            addend = _rescaled(group, dd2.kernel_piece(k2), coarse1, k2 - k,
                               j2, 'right', order, atol)
            total += addend.values
            tau_norms.append(_seminorm(group, addend))
            if tau_norms[-1] < rel_tol * tau_norms[0]:
                break
        norms['tau'][k] = tau_norms

        # eta_{k1,k}, k1 > k: fine f_{k1} weights, coarse g_k target
        eta_norms = []
        for k1 in range(k + 1, K + 1):
            addend = _rescaled(group, dd1.kernel_piece(k1), coarse2, k1 - k,
                               j1, 'left', order, atol)
            total += addend.values
            eta_norms.append(_seminorm(group, addend))
            if eta_norms[-1] < rel_tol * eta_norms[0]:
                break
        norms['eta'][k] = eta_norms

        for name, values in (('tau', tau_norms), ('eta', eta_norms)):
            ratio = decay_ratio(values)
            ratios[f'{name}:{k}'] = ratio
            if ratio >= 1.0:
                raise DecayCertificateError(
                    f'{name} sum of piece {k} does not decay: addend norms '
                    f'{values}, fitted ratio {ratio:.3f}')
        pieces.append(GridFunction(grid, total))
        logger.info(f'composed piece {k}: {len(tau_norms)} tau and '
                    f'{len(eta_norms)} eta addends')

    frequency = [dft(p) for p in pieces]
    dd = DyadicDecomposition(group, j1 + j2, frequency, grid)
    result = CompositionResult(dd, pieces, j1, j2, K, L, norms, ratios)
    if ratio_slack is not None:
        result.certify(ratio_slack)
    return result


def compose_report(result: CompositionResult,
                   fitted_order: Optional[float] = None,
                   oracle_error: Optional[float] = None,
                   level: int = 2) -> dict:
    """JSON-ready summary of a composition."""
    group = result.decomposition.group
    return dict(
        j1=result.j1,
        j2=result.j2,
        K=result.K,
        L=result.L,
        piece_seminorms=[
            schwartz_seminorms(p, group, level, level).to_dict()
            for p in result.kernel_pieces
        ],
        addend_norms={
            name: {str(k): v
                   for k, v in table.items()}
            for name, table in result.addend_norms.items()
        },
        decay_ratios=result.decay_ratios,
        max_ratio=result.max_ratio,
        ratio_bound=result.ratio_bound,
        fitted_order=fitted_order,
        oracle_error=oracle_error)
