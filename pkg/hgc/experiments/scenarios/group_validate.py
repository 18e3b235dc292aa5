# Copyright (c) SI-Analytics. All rights reserved.
from hgc.groups import annulus_integral
from hgc.utils import get_root_logger
from ..base import BaseScenario, ExperimentReport, Param
from ..builder import SCENARIOS

RADII = (0.5, 1.0, 2.0, 4.0)


@SCENARIOS.register_module(name='group-validate')
class GroupValidate(BaseScenario):
    """Group axioms, norm homogeneity and the annulus integral scaling."""
    name = 'group-validate'
    schema = dict(
        num_samples=Param(int, 1000, help='random samples per axiom'),
        scale=Param(float, 1.0, help='sample coordinates in [-scale, scale]'),
        tol=Param(float, 1e-10, help='bound on the axiom residuals'),
        norm_tol=Param(float, 1e-12, help='bound on norm homogeneity'),
        annulus_power=Param(
            float, None, help='p of the annulus integral; default -Q-1'),
        annulus_tol=Param(
            float,
            1e-3,
            help='relative spread of int_{|x|>r} |x|^p / r^{p+Q}'))
    default_grids = {None: dict(extent=1.0, size=8)}

    def run(self, report: ExperimentReport, group, rng, num_samples, scale,
            tol, norm_tol, annulus_power, annulus_tol, **context) -> None:
        residuals = group.validate(num_samples, rng, scale)
        for name in ('associativity', 'identity', 'inverse', 'dilation'):
            report.add_check(name, residuals[name], tol, '<',
                             f'group law {name} residual')
        report.add_check('norm_homogeneity', residuals['norm_homogeneity'],
                         norm_tol, '<', '|delta_r x| = r |x|')

        q = float(group.Q)
        p = -q - 1.0 if annulus_power is None else annulus_power
        scaled = [annulus_integral(group, p, r) / r**(p + q) for r in RADII]
        spread = (max(scaled) - min(scaled)) / max(scaled)
        report.add_check('annulus_scaling', spread, annulus_tol, '<',
                         'int_{|x|>r} |x|^p dx scales as r^{p+Q}')
        report.measurements.update(
            Q=str(group.Q),
            weights=[str(w) for w in group.weights],
            residuals=residuals,
            annulus=dict(p=p, radii=list(RADII), scaled=scaled))
        report.series['annulus'] = (['r', 'scaled_integral'],
                                    [[r, v] for r, v in zip(RADII, scaled)])
        get_root_logger().info(f'validated {group.name}: {residuals}')
