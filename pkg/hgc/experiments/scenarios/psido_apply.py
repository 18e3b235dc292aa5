# Copyright (c) SI-Analytics. All rights reserved.
import numpy as np

from hgc.calculus import (PsiDOSymbol, adjoint, apply_operator,
                          interior_mask, leading_term_check, max_entry_error,
                          operator_matrix)
from hgc.grid import sample
from hgc.multipliers import Gaussian
from ..base import BaseScenario, ExperimentReport, Param
from ..builder import SCENARIOS


def gaussian_bump(x: np.ndarray) -> np.ndarray:
    return np.exp(-np.pi * np.sum(x**2, axis=-1))


def varying_symbol(group, width: float) -> PsiDOSymbol:
    """``a(x, xi) = g(xi) (1 + exp(-||x||^2) / 2)`` with a Gaussian ``g``."""
    base = Gaussian(group, width)

    def func(x, xi):
        return base(xi) * (1.0 + 0.5 * np.exp(-np.sum(x**2, axis=-1)))

    return PsiDOSymbol(group, func, 0.0, support=(4.0, ) * group.dim,
                       name='varying')


@SCENARIOS.register_module(name='psido-apply')
class PsiDOApply(BaseScenario):
    """Apply and compose discretized pseudodifferential operators."""
    name = 'psido-apply'
    schema = dict(
        width=Param(float, 2.0, help='width of the Gaussian symbols'),
        tol=Param(float, 1e-10, help='identity and linearity bound'),
        kernel_tol=Param(float, 1e-12, help='convolution path agreement'),
        modulation_tol=Param(float, 1e-6, help='modulation oracle bound'),
        leading_tol=Param(float, 1e-6, help='abelian leading term bound'),
        matrices=Param(bool, True, help='assemble dense matrices'))
    default_grids = {
        1: dict(extent=8.0, size=128),
        None: dict(extent=4.0, size=8)
    }
    fourier_grid = True

    def run(self, report: ExperimentReport, group, grid, rng, width, tol,
            kernel_tol, modulation_tol, leading_tol, matrices,
            **context) -> None:
        f = sample(gaussian_bump, grid)
        g = sample(lambda x: np.cos(x[..., 0]) * gaussian_bump(x / 2), grid)
        size = f.sup()

        identity = PsiDOSymbol(
            group, lambda x, xi: np.ones(xi.shape[:-1]), 0.0, name='one')
        error = (apply_operator(identity, f) - f).sup() / size
        report.add_check('identity', error, tol, '<', 'a = 1 gives A f = f')

        m = Gaussian(group, width)
        invariant = PsiDOSymbol.from_multiplier(m)
        pointwise = PsiDOSymbol(
            group, invariant.func, 0.0, name='pointwise')
        fast = apply_operator(invariant, f)
        slow = apply_operator(pointwise, f)
        report.add_check('convolution_path', (fast - slow).sup() / size,
                         kernel_tol, '<',
                         'x-independent symbol acts as m^vee * f')

        a = varying_symbol(group, width)
        c1, c2 = rng.standard_normal(2)
        lhs = apply_operator(a, f * c1 + g * c2)
        rhs = apply_operator(a, f) * c1 + apply_operator(a, g) * c2
        report.add_check('linearity', (lhs - rhs).sup() / lhs.sup(), tol,
                         '<', 'A is linear in f')

        if group.is_abelian:
            shift = np.zeros(group.dim)
            shift[0] = 4 * grid.steps[0]
            modulation = PsiDOSymbol(
                group,
                lambda x, xi: np.exp(2j * np.pi * (xi @ shift)),
                0.0,
                x_independent=True,
                name='modulation')
            moved = apply_operator(modulation, f)
            expected = sample(lambda x: gaussian_bump(x + shift), grid)
            inner = interior_mask(grid).reshape(grid.shape)
            error = float(
                np.max(np.abs(moved.values - expected.values)[inner]))
            report.add_check('modulation', error / size, modulation_tol, '<',
                             'modulation symbol translates f')

        if not matrices:
            return
        one = operator_matrix(identity, grid)
        report.add_check('identity_matrix', max_entry_error(one), tol, '<',
                         'a = 1 discretizes to the identity')
        op = operator_matrix(a, grid)
        report.add_check('adjoint_involution',
                         max_entry_error(adjoint(adjoint(op)), op), 1e-12,
                         '<', '(A^*)^* = A')
        leading = leading_term_check(invariant, PsiDOSymbol.from_multiplier(
            Gaussian(group, 2 * width)), grid)
        report.measurements['leading_term'] = leading.to_dict()
        if group.is_abelian:
            report.add_check('leading_term', leading.relative, leading_tol,
                             '<', 'composition of multipliers is the product')
