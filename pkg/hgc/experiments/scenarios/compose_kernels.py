# Copyright (c) SI-Analytics. All rights reserved.
import numpy as np

from hgc.calculus import compose_report, convolve_kernels
from hgc.multipliers import Multiplier, decompose, estimate_order
from ..base import BaseScenario, Diagnostics, ExperimentReport, Param
from ..builder import SCENARIOS
from .decompose_reconstruct import evaluation_points


def product_oracle_error(result, m1, m2, K: int) -> float:
    """Pointwise relative error of the composed multiplier against
    ``m1 m2`` on ``{|xi| <= 2^{K-1}}``."""
    group = result.decomposition.group
    xi = evaluation_points(group, 2.0**(K - 1))
    exact = m1(xi) * m2(xi)
    approx = result.decomposition.partial_sum(xi)
    scale = np.maximum(np.abs(exact), np.finfo(float).tiny)
    return float(np.max(np.abs(approx - exact) / scale))


def composed_multiplier(result) -> Multiplier:
    dd = result.decomposition
    return Multiplier(dd.group, dd.order, dd.partial_sum, name='composed')


@SCENARIOS.register_module(name='compose-kernels')
class ComposeKernels(BaseScenario):
    """Convolve the kernels of two multipliers through their dyadic
    pieces and fit the order of the result.

    CSV ``decay``: ``piece, kind, step, addend_norm``.
    """
    name = 'compose-kernels'
    schema = dict(
        m1=Param(
            object,
            dict(type='SmoothedNormPower', order=0.5),
            help='left factor'),
        m2=Param(
            object,
            dict(type='SmoothedNormPower', order=0.5),
            help='right factor'),
        K=Param(int, None, help='depth; 8 in dimension 1, else 5'),
        L=Param(int, None, help='certificate level; floor(max j) + 1'),
        order=Param(int, 3, help='interpolation order of coarse factors'),
        order_tol=Param(float, 0.15, help='bound on the fitted order error'),
        ratio_fudge=Param(
            float, 1.5, help='slack on the predicted decay ratio'),
        oracle_tol=Param(float, 1e-3, help='abelian product oracle bound'),
        fit_ks=Param(list, None, help='annuli of the order fit'))
    multiplier_keys = ('m1', 'm2')
    default_grids = {
        1: dict(extent=16.0, size=1024),
        None: dict(extent=4.0, size=16)
    }
    fourier_grid = True

    def check_params(self, group, params: dict, diag: Diagnostics) -> None:
        K = params['K']
        if K is not None and K < 0:
            diag.errors.append('"K" must be nonnegative')
        elif K == 0:
            diag.warnings.append('K = 0 composes a single piece')

    def depth(self, group, K):
        if K is not None:
            return K
        return 8 if group.dim == 1 else 5

    def compose(self, report: ExperimentReport, group, grid, m1, m2, K, L,
                order, order_tol, ratio_fudge, fit_ks):
        K = self.depth(group, K)
        dd1 = decompose(m1, K, grid)
        dd2 = decompose(m2, K, grid)
        result = convolve_kernels(
            dd1, dd2, K=K, L=L, order=order, ratio_slack=ratio_fudge)
        report.add_check('decay_ratio', result.max_ratio,
                         result.ratio_bound * ratio_fudge, '<=',
                         'regrouped addends decay like 2^{-(L - max j)}')
        fitted = None
        ks = fit_ks or list(range(1, max(K - 1, 4)))
        if len(ks) >= 3:
            fitted = estimate_order(composed_multiplier(result), ks=ks)
            report.add_check('composed_order',
                             abs(fitted.slope - (m1.order + m2.order)),
                             order_tol, '<',
                             'order of K1 * K2 is j1 + j2')
        rows = []
        for kind, table in sorted(result.addend_norms.items()):
            for k, norms in sorted(table.items()):
                rows += [[k, kind, d, v] for d, v in enumerate(norms)]
        report.series['decay'] = (['piece', 'kind', 'step', 'addend_norm'],
                                  rows)
        return result, fitted

    def run(self, report: ExperimentReport, group, grid, m1, m2, K, L, order,
            order_tol, ratio_fudge, oracle_tol, fit_ks, **context) -> None:
        result, fitted = self.compose(report, group, grid, m1, m2, K, L,
                                      order, order_tol, ratio_fudge, fit_ks)
        oracle = None
        if group.is_abelian:
            oracle = product_oracle_error(result, m1, m2, result.K)
            report.add_check('product_oracle', oracle, oracle_tol, '<',
                             'transform of K1 * K2 is m1 m2')
        report.measurements.update(
            compose_report(
                result,
                fitted_order=None if fitted is None else fitted.slope,
                oracle_error=oracle))
