# Copyright (c) SI-Analytics. All rights reserved.
from typing import List, Optional

import numpy as np

from hgc.groups import VectorFieldTable
from hgc.utils import DivisionError
from .cutoff import CutoffProfile
from .derivatives import partial_derivative, spectral_derivative
from .diagnostics import MOMENT_TOL, is_moment_free, origin_derivatives
from .fourier import dft, idft
from .grid import GridFunction
from .interpolate import Interpolator

DEFAULT_ZETA = CutoffProfile(0.25, 0.5)


def _is_power_of_two(sizes) -> bool:
    return all(n & (n - 1) == 0 for n in sizes)


def coordinate_division(psi: GridFunction,
                        zeta: CutoffProfile = DEFAULT_ZETA,
                        max_order: int = 4,
                        tol: float = MOMENT_TOL,
                        num_nodes: int = 16,
                        check: bool = True) -> List[GridFunction]:
    """Split ``psi`` vanishing at 0 as ``psi = sum_j xi_j psi_j``.

    Away from 0 the pieces are ``(1 - zeta) psi xi_j / ||xi||^2``; near 0
    they are ``zeta'(xi) int_0^1 d_j(zeta psi)(t xi) dt`` with ``zeta'``
    equal to 1 on the support of ``zeta``. The remaining discretization
    residual is redistributed along ``xi_j / ||xi||^2``, so the identity
    holds to rounding away from the origin sample.

    Args:
        psi (GridFunction): Transform-side samples.
        zeta (CutoffProfile): Cutoff separating the two constructions, in
            the Euclidean norm.
        max_order (int): Derivative order of the vanishing check.
        tol (float): Tolerance of the vanishing check.
        num_nodes (int): Gauss-Legendre nodes for the ``t`` integral.
        check (bool): Run the vanishing check.

    Returns:
        list[GridFunction]: ``psi_1, ..., psi_n``.

    Raises:
        DivisionError: If ``psi`` does not vanish to ``max_order`` at 0.
    """
    if check:
        derivs = origin_derivatives(psi, max_order)
        worst = max(derivs, key=derivs.get)
        if derivs[worst] > tol:
            raise DivisionError(
                f'derivative {worst} at the origin is {derivs[worst]:.3e}, '
                f'above {tol:.1e}; the function is not in the moment-free '
                'class')
    grid = psi.grid
    xi = grid.points()
    norm2 = np.sum(xi**2, axis=-1)
    nonzero = norm2 > 0
    safe = np.where(nonzero, norm2, 1.0)
    cut = zeta(np.sqrt(norm2))
    hold = CutoffProfile(zeta.r1, 2.0 * zeta.r1)(np.sqrt(norm2))

    inner_part = psi.with_values(cut * psi.values)
    nodes, node_weights = np.polynomial.legendre.leggauss(num_nodes)
    nodes = 0.5 * (nodes + 1.0)
    node_weights = 0.5 * node_weights
    near = hold > 0

    pieces = []
    for j in range(grid.dim):
        outer = np.where(nonzero, (1.0 - cut) * psi.values * xi[..., j] / safe,
                         0.0)
        if not np.any(inner_part.values):
            pieces.append(outer)
            continue
        if _is_power_of_two(grid.sizes):
            deriv = spectral_derivative(inner_part, j)
        else:
            deriv = partial_derivative(inner_part,
                                       tuple(int(k == j)
                                             for k in range(grid.dim)))
        interp = Interpolator(deriv, order=3)
        inner = np.zeros(grid.shape, dtype=complex)
        points = xi[near]
        acc = np.zeros(len(points), dtype=complex)
        for t, w in zip(nodes, node_weights):
            acc += w * interp(t * points)
        inner[near] = hold[near] * acc
        pieces.append(outer + inner)

    residual = psi.values - sum(xi[..., j] * p for j, p in enumerate(pieces))
    correction = np.where(nonzero, residual / safe, 0.0)
    return [
        GridFunction(grid, p + xi[..., j] * correction, psi.band)
        for j, p in enumerate(pieces)
    ]


def vector_field_division(f: GridFunction,
                          table: VectorFieldTable,
                          tol: Optional[float] = None,
                          max_degree: int = 2,
                          zeta: CutoffProfile = DEFAULT_ZETA
                          ) -> List[GridFunction]:
    """Write a moment-free ``f`` as ``sum_k X_k f_k``.

    ``f = sum_j d_j G_j`` with ``G_j`` the inverse transform of
    ``psi_j / (2 pi i)`` from :func:`coordinate_division` of ``dft(f)``;
    then ``d_j = X_j + sum_k q_{j,k} X_k`` gives
    ``f_k = G_k + sum_j q_{j,k} G_j`` because ``X_k`` does not see the
    variables of ``q_{j,k}``.

    Raises:
        DivisionError: If ``f`` has a moment above ``tol`` up to
            ``max_degree``.
    """
    if not is_moment_free(f, max_degree, tol):
        raise DivisionError(
            f'function is not moment-free up to degree {max_degree}')
    transform = dft(f)
    psis = coordinate_division(transform, zeta, check=False)
    parts = [idft(p.with_values(p.values / (2j * np.pi))) for p in psis]
    parts = [GridFunction(f.grid, p.values) for p in parts]

    points = f.grid.points()
    out = []
    for k in range(table.dim):
        values = parts[k].values.copy()
        for j in range(table.dim):
            q = table.inverse_coeffs[j][k]
            if not q.is_zero():
                values = values + q(points) * parts[j].values
        out.append(GridFunction(f.grid, values))
    return out


def field_residual(f: GridFunction,
                   parts: List[GridFunction],
                   table: VectorFieldTable,
                   method: str = 'spectral') -> float:
    """``sup |f - sum_k X_k f_k|`` over the valid region."""
    total = f
    for k, part in enumerate(parts):
        total = total - table.apply(part, k, method)
    return total.sup()
