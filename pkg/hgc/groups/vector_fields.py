# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from hgc.utils import GroupLawError
from .group import HomogeneousGroup
from .law import Coefficient


class Polynomial:
    """Sparse polynomial in ``dim`` variables.

    Coefficients stay :class:`Fraction` as long as every input is exact.

    Args:
        terms (Mapping[tuple, coeff]): Exponent tuple to coefficient.
        dim (int): Number of variables.
    """

    def __init__(self, terms: Mapping[Tuple[int, ...], Coefficient],
                 dim: int):
        self.dim = dim
        self.terms: Dict[Tuple[int, ...], Coefficient] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != dim:
                raise ValueError(f'exponent {exps} has wrong length')
            if coeff != 0:
                self.terms[exps] = self.terms.get(exps, 0) + coeff
        self.terms = {e: c for e, c in self.terms.items() if c != 0}

    @classmethod
    def zero(cls, dim: int) -> 'Polynomial':
        return cls({}, dim)

    @classmethod
    def constant(cls, value, dim: int) -> 'Polynomial':
        return cls({(0, ) * dim: value}, dim)

    @classmethod
    def variable(cls, i: int, dim: int) -> 'Polynomial':
        return cls({tuple(int(k == i) for k in range(dim)): Fraction(1)}, dim)

    def __repr__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for exps, coeff in sorted(self.terms.items()):
            mono = '*'.join(f'x{k}^{e}' if e > 1 else f'x{k}'
                            for k, e in enumerate(exps) if e)
            parts.append(f'{coeff}' + (f'*{mono}' if mono else ''))
        return ' + '.join(parts)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.dim == other.dim and (self - other).is_zero()
        return NotImplemented

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return Polynomial(terms, self.dim)

    def __neg__(self) -> 'Polynomial':
        return Polynomial({e: -c for e, c in self.terms.items()}, self.dim)

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        return self + (-other)

    def __mul__(self, other) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            return Polynomial({e: c * other
                               for e, c in self.terms.items()}, self.dim)
        terms: Dict[Tuple[int, ...], Coefficient] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return Polynomial(terms, self.dim)

    __rmul__ = __mul__

    def derivative(self, i: int) -> 'Polynomial':
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i]:
                lowered = exps[:i] + (exps[i] - 1, ) + exps[i + 1:]
                terms[lowered] = coeff * exps[i]
        return Polynomial(terms, self.dim)

    def depends_on(self, i: int) -> bool:
        return any(exps[i] for exps in self.terms)

    def degrees(self, weights: Sequence[Fraction]) -> set:
        """Weighted degrees of the monomials present."""
        return {
            sum((Fraction(w) * e for w, e in zip(weights, exps)),
                Fraction(0))
            for exps in self.terms
        }

    def is_homogeneous(self, weights: Sequence[Fraction], degree) -> bool:
        return self.degrees(weights) <= {Fraction(degree)}

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape[:-1])
        for exps, coeff in self.terms.items():
            term = np.full(x.shape[:-1], float(coeff))
            for k, e in enumerate(exps):
                if e:
                    term = term * x[..., k]**e
            out = out + term
        return out


PolynomialMatrix = List[List[Polynomial]]


def _matmul(a: PolynomialMatrix, b: PolynomialMatrix) -> PolynomialMatrix:
    n = len(a)
    dim = a[0][0].dim
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Polynomial.zero(dim)
            for k in range(n):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


@dataclass(frozen=True)
class VectorFieldTable:
    """Coefficients of the invariant vector fields of a group.

    ``X_j = d/dx_j + sum_k coeffs[j][k](x) d/dx_k`` and
    ``d/dx_j = X_j + sum_k inverse_coeffs[j][k](x) X_k``. Diagonal
    entries are stored as zero, the leading ``d/dx_j`` is implicit.

    Attributes:
        side (str): ``'left'`` for left-invariant ``X_j``, ``'right'``
            for right-invariant ``Y_j``.
        weights (tuple): Dilation weights of the group.
        coeffs (tuple): ``p_{j,k}`` as :class:`Polynomial`.
        inverse_coeffs (tuple): ``q_{j,k}`` as :class:`Polynomial`.
    """
    side: str
    weights: Tuple[Fraction, ...]
    coeffs: Tuple[Tuple[Polynomial, ...], ...]
    inverse_coeffs: Tuple[Tuple[Polynomial, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.weights)

    def apply_symbolic(self, poly: Polynomial, j: int) -> Polynomial:
        """``X_j`` applied to a polynomial, exactly."""
        out = poly.derivative(j)
        for k, coeff in enumerate(self.coeffs[j]):
            if not coeff.is_zero():
                out = out + coeff * poly.derivative(k)
        return out

    def partial_from_fields(self, poly: Polynomial, j: int) -> Polynomial:
        """``d/dx_j`` rebuilt as ``X_j + sum_k q_{j,k} X_k``."""
        out = self.apply_symbolic(poly, j)
        for k, coeff in enumerate(self.inverse_coeffs[j]):
            if not coeff.is_zero():
                out = out + coeff * self.apply_symbolic(poly, k)
        return out

    def apply(self, f, j: int, method: str = 'fd'):
        """Apply the ``j``-th field to a sampled
        :class:`~hgc.grid.GridFunction`."""
        from hgc.grid.derivatives import apply_vector_field
        return apply_vector_field(self, f, j, method)

    def coefficient_values(self, points: np.ndarray,
                           inverse: bool = False) -> np.ndarray:
        """Sampled coefficient matrix with shape ``points.shape[:-1] +
        (n, n)``, diagonal included as 0."""
        table = self.inverse_coeffs if inverse else self.coeffs
        n = self.dim
        out = np.zeros(points.shape[:-1] + (n, n))
        for j in range(n):
            for k in range(n):
                if not table[j][k].is_zero():
                    out[..., j, k] = table[j][k](points)
        return out


def build_vector_fields(group: HomogeneousGroup,
                        side: str = 'left') -> VectorFieldTable:
    """Differentiate the translations at the origin.

    Left-invariant fields come from ``y -> x·y`` (monomials linear in
    ``y_j`` alone), right-invariant ones from ``y -> y·x``. The inverse
    coefficients come from the nilpotent matrix ``P`` as
    ``(I + P)^{-1} - I = sum_{m >= 1} (-P)^m``.

    Args:
        group (HomogeneousGroup): The group.
        side (str): ``'left'`` or ``'right'``.

    Returns:
        VectorFieldTable: The coefficient tables.

    Raises:
        GroupLawError: If ``P`` is not nilpotent or a coefficient is not
            homogeneous of degree ``a_k - a_j``.
    """
    if side not in ('left', 'right'):
        raise ValueError(f'side must be "left" or "right", got {side}')
    n = group.dim
    weights = group.weights
    p: PolynomialMatrix = [[Polynomial.zero(n) for _ in range(n)]
                           for _ in range(n)]
    for k, table in enumerate(group.law.tables):
        for mono in table:
            fixed, moving = ((mono.xdeg, mono.ydeg) if side == 'left' else
                             (mono.ydeg, mono.xdeg))
            if sum(moving) != 1:
                continue
            j = moving.index(1)
            p[j][k] = p[j][k] + Polynomial({fixed: mono.coeff}, n)

    neg = [[-entry for entry in row] for row in p]
    power = neg
    q = [[Polynomial.zero(n) for _ in range(n)] for _ in range(n)]
    for _ in range(n):
        if all(entry.is_zero() for row in power for entry in row):
            break
        q = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(q, power)]
        power = _matmul(power, neg)
    else:
        if not all(entry.is_zero() for row in power for entry in row):
            raise GroupLawError(
                'vector field matrix is not nilpotent; the law is not '
                'graded')

    for name, table in (('p', p), ('q', q)):
        for j in range(n):
            for k in range(n):
                entry = table[j][k]
                if entry.is_zero():
                    continue
                if weights[k] <= weights[j] or not entry.is_homogeneous(
                        weights, weights[k] - weights[j]):
                    raise GroupLawError(
                        f'{name}[{j}][{k}] = {entry} is not homogeneous of '
                        f'degree {weights[k] - weights[j]}')
    return VectorFieldTable(
        side=side,
        weights=tuple(weights),
        coeffs=tuple(tuple(row) for row in p),
        inverse_coeffs=tuple(tuple(row) for row in q))


def describe_fields(table: VectorFieldTable,
                    names: Optional[Sequence[str]] = None) -> List[str]:
    """Human-readable ``X_j = d_j + ...`` lines for reports."""
    names = names or [f'x{k}' for k in range(table.dim)]
    lines = []
    for j in range(table.dim):
        parts = [f'd/d{names[j]}']
        for k, coeff in enumerate(table.coeffs[j]):
            if not coeff.is_zero():
                parts.append(f'({coeff}) d/d{names[k]}')
        lines.append(f'X{j + 1} = ' + ' + '.join(parts))
    return lines
