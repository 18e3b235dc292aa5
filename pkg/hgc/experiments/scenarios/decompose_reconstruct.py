# Copyright (c) SI-Analytics. All rights reserved.
import os.path as osp

import numpy as np

from hgc.grid import Grid
from hgc.groups import Multiindex
from hgc.multipliers import (decompose, estimate_order, growth_constant,
                             save_decomposition)
from ..base import BaseScenario, ExperimentReport, Param
from ..builder import SCENARIOS

EVAL_SIZE = {1: 4096, 2: 256, 3: 48}


def evaluation_points(group, radius: float) -> np.ndarray:
    """Points of a regular box grid with ``|xi| <= radius``."""
    size = EVAL_SIZE.get(group.dim, 16)
    grid = Grid.regular(group.dim, radius, size)
    points = grid.flat_points()
    return points[group.norm(points) <= radius]


@SCENARIOS.register_module(name='decompose-reconstruct')
class DecomposeReconstruct(BaseScenario):
    """Cut a multiplier into dyadic pieces and sum them back.

    CSV ``pieces``: ``k, running_max, moment_defect``.
    """
    name = 'decompose-reconstruct'
    schema = dict(
        multiplier=Param(
            object, 'SmoothedNormPower', help='multiplier name or config'),
        K=Param(int, 8, help='index of the last piece'),
        tol=Param(
            float, None, help='round-trip bound; 1e-8 abelian, else 1e-5'),
        partition_tol=Param(float, 1e-10, help='partition of unity bound'),
        order_tol=Param(float, 0.1, help='bound on |fitted - declared|'),
        seminorm_order=Param(int, 2, help='Schwartz table size'),
        archive=Param(bool, False, help='write the pieces to out_dir'))
    multiplier_keys = ('multiplier', )
    default_grids = {
        1: dict(extent=16.0, size=1024),
        None: dict(extent=4.0, size=16)
    }
    fourier_grid = True

    def run(self, report: ExperimentReport, group, grid, multiplier, K, tol,
            partition_tol, order_tol, seminorm_order, archive, out_dir,
            **context) -> None:
        m = multiplier
        dd = decompose(m, K, grid)
        radius = 2.0**(K - 1)
        xi = evaluation_points(group, radius)
        exact = m(xi)
        approx = dd.partial_sum(xi, K)
        scale = np.maximum(np.abs(exact), np.finfo(float).tiny)
        error = float(np.max(np.abs(approx - exact) / scale))
        tol = tol if tol is not None else (
            1e-8 if group.is_abelian else 1e-5)
        report.add_check('round_trip', error, tol, '<',
                         'sum_{k<=K} m_k = m on |xi| <= 2^{K-1}')

        partition = float(np.max(np.abs(dd.lp.partial_sum(xi, K) - 1.0)))
        report.add_check('partition_of_unity', partition, partition_tol, '<',
                         'sum_{k<=K} phi_k = 1 on |xi| <= 2^{K-1}')

        ks = range(4, 12)
        fitted = estimate_order(m, ks=ks)
        report.add_check('order', abs(fitted.slope - m.order), order_tol,
                         '<', 'fitted order matches the declared order')
        axis = group.dim - 1
        weight = float(group.weights[axis])
        deriv = m.derivative(Multiindex.unit(axis, group.dim))
        drop = estimate_order(deriv, ks=ks)
        # a vanishing derivative is of every order
        if any(drop.sups):
            report.add_check(
                'derivative_order_drop', abs(drop.slope - (m.order - weight)),
                order_tol, '<',
                'd^alpha lowers the order by the weighted degree')

        bounded = dd.boundedness(seminorm_order, seminorm_order)
        defects = dd.moment_defects(seminorm_order)
        report.measurements.update(
            round_trip_error=error,
            partition_error=partition,
            fitted_order=fitted.to_dict(),
            derivative_order=drop.to_dict(),
            growth_constant=growth_constant(dd),
            boundedness=bounded.to_dict(),
            moment_defects=defects)
        report.series['pieces'] = (['k', 'running_max', 'moment_defect'], [[
            k, bounded.running_max[k], defects[k - 1] if k else 0.0
        ] for k in range(len(dd))])
        if archive:
            path = save_decomposition(
                dd, osp.join(out_dir or '.', 'decomposition'),
                seminorms=bounded.table.to_dict())
            report.measurements['archive'] = osp.relpath(
                path, out_dir or '.')
