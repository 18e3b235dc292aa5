# Copyright (c) SI-Analytics. All rights reserved.
from typing import Callable, Optional, Sequence

import numpy as np

from hgc.grid import CutoffProfile, Grid, GridFunction, sample
from hgc.groups import HomogeneousGroup, Multiindex
from .builder import MULTIPLIERS


class Multiplier:
    """A smooth function on frequency space with a declared order ``j``.

    The order is metadata supplied by the caller;
    :func:`~hgc.multipliers.estimate_order` only diagnoses it.

    Args:
        group (HomogeneousGroup): Group whose norm and dilations act on
            the frequency variable.
        order (float): The order ``j``.
        func (Callable, optional): Vectorized evaluator on points of shape
            ``(..., n)``. Subclasses override :meth:`evaluate` instead.
        name (str, optional): Display name.
    """

    def __init__(self,
                 group: HomogeneousGroup,
                 order: float = 0.0,
                 func: Optional[Callable[[np.ndarray], np.ndarray]] = None,
                 name: Optional[str] = None):
        self.group = group
        self.order = float(order)
        self.func = func
        self.name = name or self.__class__.__name__

    def __repr__(self) -> str:
        return f'{self.name}(order={self.order:g})'

    def evaluate(self, xi: np.ndarray) -> np.ndarray:
        if self.func is None:
            raise NotImplementedError(
                f'{self.__class__.__name__} has no evaluator')
        return self.func(xi)

    def __call__(self, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        return self.evaluate(xi)

    def sample(self, grid: Grid) -> GridFunction:
        return sample(self, grid)

    def derivative(self, alpha) -> 'Multiplier':
        return Derivative(self, alpha)

    def dilated(self, r: float) -> 'Multiplier':
        """``xi -> m(delta_r xi)``, same order."""
        return Multiplier(
            self.group,
            self.order,
            lambda xi: self(self.group.dilate(xi, r)),
            name=f'{self.name}o(delta_{r:g})')

    def __mul__(self, other) -> 'Multiplier':
        if isinstance(other, Multiplier):
            return Product([self, other])
        return LinearCombination([self], [other])

    __rmul__ = __mul__

    def __add__(self, other: 'Multiplier') -> 'Multiplier':
        return LinearCombination([self, other], [1.0, 1.0])

    def __sub__(self, other: 'Multiplier') -> 'Multiplier':
        return LinearCombination([self, other], [1.0, -1.0])

    def __neg__(self) -> 'Multiplier':
        return LinearCombination([self], [-1.0])


@MULTIPLIERS.register_module()
class Constant(Multiplier):
    """``m = value``, order 0."""

    def __init__(self, group: HomogeneousGroup, value: complex = 1.0):
        super().__init__(group, 0.0, name=f'Constant({value})')
        self.value = value

    def evaluate(self, xi):
        return np.full(xi.shape[:-1], self.value)


def bracket_order(group: HomogeneousGroup, power: float) -> float:
    """Order ``j`` of ``<xi>^power`` as a multiplier of ``group``.

    ``c (1 + |xi|) <= <xi> <= C (1 + |xi|)^{a_n}``, so the bracket grows
    like ``(1 + |xi|)^{power a_n}`` for ``power >= 0`` and like
    ``(1 + |xi|)^{power}`` otherwise.
    """
    a_n = float(group.weights[-1])
    return power * a_n if power >= 0 else float(power)


def symbol_order(group: HomogeneousGroup, order: float) -> float:
    """Euclidean symbol order of an order-``j`` multiplier of ``group``.

    The same bracket comparison gives ``S^j`` for ``j >= 0`` and
    ``S^{j / a_n}`` for ``j < 0``.
    """
    a_n = float(group.weights[-1])
    return float(order) if order >= 0 else order / a_n


@MULTIPLIERS.register_module()
class JapaneseBracket(Multiplier):
    """``<xi>^s = (1 + ||xi||^2)^{s/2}`` with the Euclidean norm.

    Its order is :func:`bracket_order`, which reduces to ``s`` on
    Euclidean groups.
    """

    def __init__(self, group: HomogeneousGroup, power: float = 1.0):
        super().__init__(
            group,
            bracket_order(group, power),
            name=f'JapaneseBracket({power:g})')
        self.power = float(power)

    def evaluate(self, xi):
        return (1.0 + np.sum(xi**2, axis=-1))**(0.5 * self.power)


def _norm_power_sum(group: HomogeneousGroup, xi: np.ndarray) -> np.ndarray:
    """``|xi|^{2A} = sum |xi_i|^{2A / a_i}`` without taking roots."""
    two_a = 2 * group.A
    total = np.zeros(xi.shape[:-1])
    for i, w in enumerate(group.weights):
        exponent = two_a / w
        if exponent.denominator == 1 and exponent.numerator % 2 == 0:
            total = total + xi[..., i]**int(exponent)
        else:
            total = total + np.abs(xi[..., i])**float(exponent)
    return total


@MULTIPLIERS.register_module()
class SmoothedNormPower(Multiplier):
    """``(1 + |xi|^{2A})^{j / (2A)}``, a smooth stand-in for ``|xi|^j``."""

    def __init__(self, group: HomogeneousGroup, order: float = 1.0):
        super().__init__(group, order, name=f'SmoothedNormPower({order:g})')

    def evaluate(self, xi):
        two_a = 2.0 * float(self.group.A)
        return (1.0 + _norm_power_sum(self.group, xi))**(self.order / two_a)


@MULTIPLIERS.register_module()
class Gaussian(Multiplier):
    """``exp(-pi ||xi||^2 / width^2)``; rapidly decreasing, declared
    order 0 unless given."""

    def __init__(self,
                 group: HomogeneousGroup,
                 width: float = 1.0,
                 order: float = 0.0):
        super().__init__(group, order, name=f'Gaussian({width:g})')
        self.width = float(width)

    def evaluate(self, xi):
        return np.exp(-np.pi * np.sum(xi**2, axis=-1) / self.width**2)


@MULTIPLIERS.register_module()
class DyadicHomogeneous(Multiplier):
    """Homogeneous of degree ``j`` under ``delta_2`` only, outside
    ``{|xi| <= 1}``::

        (1 - zeta(|xi|)) |xi|^j (1 + amplitude cos(2 pi log2 |xi|))

    The cosine factor is invariant under ``delta_2`` but not under the
    other dilations, so the function is not classical.
    """

    def __init__(self,
                 group: HomogeneousGroup,
                 order: float = 0.0,
                 amplitude: float = 0.5,
                 inner: float = 0.5,
                 outer: float = 1.0):
        super().__init__(group, order, name=f'DyadicHomogeneous({order:g})')
        if not 0 <= amplitude < 1:
            raise ValueError(f'amplitude must lie in [0, 1), got {amplitude}')
        self.amplitude = amplitude
        self.cutoff = CutoffProfile(inner, outer)

    def evaluate(self, xi):
        rho = self.group.norm(xi)
        outside = rho > self.cutoff.r0
        safe = np.where(outside, rho, 1.0)
        wave = 1.0 + self.amplitude * np.cos(2.0 * np.pi * np.log2(safe))
        values = (1.0 - self.cutoff(rho)) * safe**self.order * wave
        return np.where(outside, values, 0.0)


@MULTIPLIERS.register_module()
class RieszType(Multiplier):
    """``(1 - zeta(|xi|)) xi_i / |xi|^{a_i}``, order 0."""

    def __init__(self,
                 group: HomogeneousGroup,
                 axis: int = 0,
                 inner: float = 0.5,
                 outer: float = 1.0):
        super().__init__(group, 0.0, name=f'RieszType({axis})')
        if not 0 <= axis < group.dim:
            raise ValueError(f'axis {axis} out of range for a '
                             f'{group.dim}-dim group')
        self.axis = axis
        self.cutoff = CutoffProfile(inner, outer)

    def evaluate(self, xi):
        rho = self.group.norm(xi)
        outside = rho > self.cutoff.r0
        safe = np.where(outside, rho, 1.0)
        weight = float(self.group.weights[self.axis])
        values = (1.0 - self.cutoff(rho)) * xi[..., self.axis] / safe**weight
        return np.where(outside, values, 0.0)


def _central_difference(func: Callable, axis: int, step: float,
                        exponent: float) -> Callable:

    def deriv(xi):
        scale = np.maximum(
            1.0, np.sqrt(np.sum(xi**2, axis=-1)))**exponent * step
        shift = np.zeros(xi.shape)
        out = 0.0
        for offset, weight in ((2, -1.0), (1, 8.0), (-1, -8.0), (-2, 1.0)):
            shift[..., axis] = offset * scale
            out = out + weight * func(xi + shift)
        return out / (12.0 * scale)

    return deriv


@MULTIPLIERS.register_module()
class Derivative(Multiplier):
    """``d^alpha m`` by nested fourth-order central differences.

    The step along axis ``i`` is ``h * max(1, ||xi||)^{a_i}`` with ``h``
    balancing truncation and rounding for the total order. The order is
    ``j - |alpha|``.
    """

    def __init__(self,
                 base: Multiplier,
                 alpha: Sequence[int],
                 group: Optional[HomogeneousGroup] = None):
        alpha = alpha if isinstance(alpha, Multiindex) else Multiindex(
            tuple(int(a) for a in alpha))
        group = group or base.group
        if len(alpha) != group.dim:
            raise ValueError(f'multiindex {alpha} for a {group.dim}-dim '
                             'group')
        super().__init__(
            group,
            base.order - float(alpha.degree(group.weights)),
            name=f'D{alpha}{base.name}')
        self.base = base
        self.alpha = alpha
        step = np.finfo(float).eps**(1.0 / (4 + max(alpha.length, 1)))
        func = base.__call__
        for axis, count in enumerate(alpha.entries):
            for _ in range(count):
                func = _central_difference(func, axis, step,
                                           float(group.weights[axis]))
        self._func = func

    def evaluate(self, xi):
        return self._func(xi)


@MULTIPLIERS.register_module()
class Product(Multiplier):
    """Pointwise product; orders add."""

    def __init__(self,
                 factors: Sequence[Multiplier],
                 group: Optional[HomogeneousGroup] = None):
        if not factors:
            raise ValueError('a product needs at least one factor')
        super().__init__(
            group or factors[0].group,
            sum(f.order for f in factors),
            name='*'.join(f.name for f in factors))
        self.factors = list(factors)

    def evaluate(self, xi):
        out = self.factors[0](xi)
        for factor in self.factors[1:]:
            out = out * factor(xi)
        return out


@MULTIPLIERS.register_module()
class LinearCombination(Multiplier):
    """``sum c_i m_i``; the order is the largest order present."""

    def __init__(self,
                 terms: Sequence[Multiplier],
                 coeffs: Optional[Sequence[complex]] = None,
                 group: Optional[HomogeneousGroup] = None):
        if not terms:
            raise ValueError('a linear combination needs at least one term')
        coeffs = list(coeffs) if coeffs is not None else [1.0] * len(terms)
        if len(coeffs) != len(terms):
            raise ValueError('terms and coefficients differ in length')
        super().__init__(
            group or terms[0].group,
            max(t.order for t in terms),
            name='+'.join(f'{c}*{t.name}' for c, t in zip(coeffs, terms)))
        self.terms = list(terms)
        self.coeffs = coeffs

    def evaluate(self, xi):
        out = 0.0
        for coeff, term in zip(self.coeffs, self.terms):
            out = out + coeff * term(xi)
        return np.broadcast_to(out, xi.shape[:-1])
