# Copyright (c) SI-Analytics. All rights reserved.
import math

from hgc.calculus import frazier_jawerth_sweep
from ..base import BaseScenario, Diagnostics, ExperimentReport, Param
from ..builder import SCENARIOS


@SCENARIOS.register_module(name='fj-lemma')
class FrazierJawerthLemma(BaseScenario):
    """Sweep of the bump convolution ratio over ``d = sigma - nu``.

    CSV ``fj``: ``sigma, nu, sup_ratio, argmax_norm``.
    """
    name = 'fj-lemma'
    schema = dict(
        J=Param(float, 2.0, help='decay exponent of the wide bump'),
        sigma_range=Param(
            list, [0, 6], help='inclusive range of d = sigma - nu'),
        order=Param(int, 1, help='interpolation order'),
        band_ratio=Param(float, 3.0, help='bound on max/min of the ratios'),
        origin_tol=Param(
            float, 2e-3,
            help='tolerance of the 1-d origin ratio at sigma = nu = 0'))
    default_grids = {
        1: dict(extent=32.0, size=2048),
        None: dict(extent=4.0, size=16)
    }

    def check_params(self, group, params: dict, diag: Diagnostics) -> None:
        bounds = params['sigma_range']
        if len(bounds) != 2 or bounds[0] < 0 or bounds[0] > bounds[1]:
            diag.errors.append('"sigma_range" must be [low, high] with '
                               '0 <= low <= high')
        if params['J'] <= 0:
            diag.errors.append('"J" must be positive')

    def run(self, report: ExperimentReport, group, grid, J, sigma_range,
            order, band_ratio, origin_tol, **context) -> None:
        low, high = sigma_range
        sweep = frazier_jawerth_sweep(group, J, grid,
                                      range(int(low), int(high) + 1), order)
        finite = all(math.isfinite(r.sup_ratio) for r in sweep.results)
        report.add_check('finite_ratios', float(finite), 1.0, '>=',
                         'sup ratio finite for every sigma >= nu')
        report.add_check('band_ratio', sweep.band_ratio, band_ratio, '<',
                         'uniform constant over sigma - nu')
        origin = sweep.result_at(0.0, 0.0)
        if group.dim == 1 and origin is not None:
            # int (1 + |u|)^{-(2J+1)} du = 1 / J on the line
            report.add_check('origin_ratio',
                             abs(origin.origin_ratio - sweep.origin_exact),
                             origin_tol, '<',
                             'grid ratio at the origin against 1 / J')
        report.measurements.update(sweep.to_dict())
        report.series['fj'] = (['sigma', 'nu', 'sup_ratio', 'argmax_norm'],
                               sweep.rows())
