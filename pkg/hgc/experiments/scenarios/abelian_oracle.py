# Copyright (c) SI-Analytics. All rights reserved.
from hgc.calculus import compose_report
from hgc.multipliers import JapaneseBracket
from ..base import Diagnostics, ExperimentReport, Param
from ..builder import SCENARIOS
from .compose_kernels import ComposeKernels, product_oracle_error


@SCENARIOS.register_module(name='abelian-oracle')
class AbelianOracle(ComposeKernels):
    """Kernel composition of ``<xi>^{j1}`` and ``<xi>^{j2}`` on a
    Euclidean group, judged by the product of the multipliers."""
    name = 'abelian-oracle'
    schema = dict(
        j1=Param(float, 0.5, help='order of the left factor'),
        j2=Param(float, 0.5, help='order of the right factor'),
        K=Param(int, 8, help='depth'),
        L=Param(int, None, help='certificate level; floor(max j) + 1'),
        order=Param(int, 3, help='interpolation order of coarse factors'),
        oracle_tol=Param(float, 1e-3, help='product oracle bound'))
    multiplier_keys = ()

    def check_params(self, group, params: dict, diag: Diagnostics) -> None:
        super().check_params(group, params, diag)
        if not group.is_abelian:
            diag.errors.append(f'abelian-oracle needs an abelian group, got '
                               f'{group.name}')

    def run(self, report: ExperimentReport, group, grid, j1, j2, K, L, order,
            oracle_tol, **context) -> None:
        m1 = JapaneseBracket(group, j1)
        m2 = JapaneseBracket(group, j2)
        result, fitted = self.compose(report, group, grid, m1, m2, K, L,
                                      order, 0.15, 1.5, None)
        oracle = product_oracle_error(result, m1, m2, result.K)
        report.add_check('product_oracle', oracle, oracle_tol, '<',
                         'transform of K1 * K2 is m1 m2')
        report.measurements.update(
            compose_report(
                result,
                fitted_order=None if fitted is None else fitted.slope,
                oracle_error=oracle))
