# Copyright (c) SI-Analytics. All rights reserved.
from hgc.calculus import asymptotic_sum
from hgc.multipliers import SmoothedNormPower
from ..base import BaseScenario, Diagnostics, ExperimentReport, Param
from ..builder import SCENARIOS

SINGLE_TERM_SLOPE = -5.0


@SCENARIOS.register_module(name='asymptotic-sum')
class AsymptoticSumScenario(BaseScenario):
    """Sum the ladder ``(1 + |xi|^{2A})^{(j - i) / 2A}`` and fit the
    orders of its remainders.

    The grid block is the frequency grid of the seminorms. CSV
    ``remainders``: ``N, slope, threshold``.
    """
    name = 'asymptotic-sum'
    schema = dict(
        j=Param(float, 1.0, help='order of the leading term'),
        num_terms=Param(int, 4, help='length of the ladder'),
        Ns=Param(list, [0, 1, 2], help='remainders to certify'))
    default_grids = {
        1: dict(extent=32.0, size=512),
        None: dict(extent=4.0, size=16)
    }

    def check_params(self, group, params: dict, diag: Diagnostics) -> None:
        if params['num_terms'] < 1:
            diag.errors.append('"num_terms" must be at least 1')
        if any(N >= params['num_terms'] for N in params['Ns']):
            diag.warnings.append('remainders beyond the ladder are skipped')

    def run(self, report: ExperimentReport, group, grid, j, num_terms, Ns,
            **context) -> None:
        ladder = [SmoothedNormPower(group, j - i) for i in range(num_terms)]
        total = asymptotic_sum(ladder, grid, order=j)
        certificates = total.certificates(Ns)
        for cert in certificates:
            report.add_check(f'remainder_{cert.N}', cert.estimate.slope,
                             cert.threshold, '<=',
                             'J - sum_{i<=N} J_i has order j - (N + 1)')
        single = asymptotic_sum(ladder[:1], grid, order=j).certificates([0])
        report.add_check('single_term', single[0].estimate.slope,
                         SINGLE_TERM_SLOPE, '<=',
                         'one cut-off term differs from J_0 by a Schwartz '
                         'function')
        report.measurements.update(
            sum=total.to_dict(),
            remainders=[c.to_dict() for c in certificates],
            single_term=single[0].to_dict())
        report.series['remainders'] = (['N', 'slope', 'threshold'],
                                       [[c.N, c.estimate.slope, c.threshold]
                                        for c in certificates])
