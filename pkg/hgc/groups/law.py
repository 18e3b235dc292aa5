# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from hgc.utils import GroupLawError

Coefficient = Union[Fraction, float]


def as_coefficient(value) -> Coefficient:
    """Keep integers and rationals exact, everything else as float."""
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    return float(value)


@dataclass(frozen=True)
class Monomial:
    """One term ``coeff * x**xdeg * y**ydeg`` of a group law polynomial.

    Args:
        coeff (Fraction | float): The coefficient.
        xdeg (tuple[int]): Exponents of the left factor's coordinates.
        ydeg (tuple[int]): Exponents of the right factor's coordinates.
    """
    coeff: Coefficient
    xdeg: Tuple[int, ...]
    ydeg: Tuple[int, ...]

    def __post_init__(self):
        if len(self.xdeg) != len(self.ydeg):
            raise GroupLawError('xdeg and ydeg lengths differ')
        if any(e < 0 for e in self.xdeg + self.ydeg):
            raise GroupLawError('negative exponent in group law monomial')

    @classmethod
    def from_dict(cls, data: dict) -> 'Monomial':
        return cls(
            coeff=as_coefficient(data['coeff']),
            xdeg=tuple(int(e) for e in data['xdeg']),
            ydeg=tuple(int(e) for e in data['ydeg']))

    def to_dict(self) -> dict:
        coeff = self.coeff
        if isinstance(coeff, Fraction):
            coeff = str(coeff) if coeff.denominator != 1 else int(coeff)
        return dict(coeff=coeff, xdeg=list(self.xdeg), ydeg=list(self.ydeg))

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        out = np.full(np.broadcast_shapes(x.shape[:-1], y.shape[:-1]),
                      float(self.coeff))
        for k, e in enumerate(self.xdeg):
            if e:
                out = out * x[..., k]**e
        for k, e in enumerate(self.ydeg):
            if e:
                out = out * y[..., k]**e
        return out

    def variables(self) -> Iterable[int]:
        return (k for k, (a, b) in enumerate(zip(self.xdeg, self.ydeg))
                if a or b)


class GroupLaw:
    """Polynomial group law on ``R^n``.

    Output coordinate ``i`` of ``x·y`` is ``x_i + y_i + P_i(x, y)`` where
    ``P_i`` is the sum of the monomials in ``tables[i]``.

    Args:
        tables (Sequence[Sequence[Monomial]]): One monomial list per
            coordinate. An all-empty table is the abelian law.
    """

    def __init__(self, tables: Sequence[Sequence[Monomial]]):
        self.tables = tuple(tuple(table) for table in tables)
        n = len(self.tables)
        for i, table in enumerate(self.tables):
            for mono in table:
                if len(mono.xdeg) != n:
                    raise GroupLawError(
                        f'monomial of coordinate {i} has {len(mono.xdeg)} '
                        f'exponents, expected {n}')

    @classmethod
    def abelian(cls, dim: int) -> 'GroupLaw':
        return cls([[] for _ in range(dim)])

    @classmethod
    def from_list(cls, data: Sequence[Sequence[dict]]) -> 'GroupLaw':
        return cls([[Monomial.from_dict(m) for m in table]
                    for table in data])

    def to_list(self) -> list:
        return [[m.to_dict() for m in table] for table in self.tables]

    @property
    def dim(self) -> int:
        return len(self.tables)

    @property
    def is_abelian(self) -> bool:
        return not any(self.tables)

    def central_coordinates(self) -> Optional[Tuple[int, ...]]:
        """Coordinates carrying corrections, for laws of step at most two.

        In such a law every ``P_i`` reads only uncorrected coordinates, so
        the corrected ones are central and enter ``x·y`` additively.

        Returns:
            tuple[int] | None: The corrected coordinates, empty for the
            abelian law, ``None`` when some ``P_i`` reads a corrected
            coordinate.
        """
        central = tuple(i for i, table in enumerate(self.tables) if table)
        for i in central:
            for mono in self.tables[i]:
                if any(k in central for k in mono.variables()):
                    return None
        return central

    def check(self, weights: Sequence[Fraction]) -> None:
        """Validate the graded structure against the dilation weights.

        Every monomial of ``P_i`` must involve both factors, use only
        coordinates of weight below ``a_i`` and have weighted degree
        ``a_i``.

        Raises:
            GroupLawError: If any monomial violates the structure.
        """
        if len(weights) != self.dim:
            raise GroupLawError(
                f'{len(weights)} weights for a {self.dim}-dim law')
        for i, table in enumerate(self.tables):
            for mono in table:
                for k in mono.variables():
                    if weights[k] >= weights[i]:
                        raise GroupLawError(
                            f'coordinate {i} (weight {weights[i]}) refers '
                            f'to coordinate {k} of weight {weights[k]}')
                if not any(mono.xdeg) or not any(mono.ydeg):
                    raise GroupLawError(
                        f'monomial {mono} of coordinate {i} breaks the '
                        'identity at the origin')
                degree = sum(w * (a + b) for w, a, b in zip(
                    weights, mono.xdeg, mono.ydeg))
                if degree != weights[i]:
                    raise GroupLawError(
                        f'monomial {mono} of coordinate {i} has weighted '
                        f'degree {degree}, expected {weights[i]}')

    def correction(self, i: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """``P_i(x, y)`` broadcast over leading axes."""
        shape = np.broadcast_shapes(x.shape[:-1], y.shape[:-1])
        out = np.zeros(shape)
        for mono in self.tables[i]:
            out = out + mono.evaluate(x, y)
        return out

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        out = x + y
        for i, table in enumerate(self.tables):
            if table:
                out[..., i] += self.correction(i, x, y)
        return out

    def inverse(self, x: np.ndarray) -> np.ndarray:
        """Solve ``x·z = 0`` for ``z`` coordinate by coordinate.

        Coordinates are ordered by nondecreasing weight and ``P_i`` only
        reads lower-weight coordinates, so ``z_i`` depends on ``z_k`` with
        ``k < i`` only.
        """
        x = np.asarray(x, dtype=float)
        z = np.zeros_like(x)
        for i, table in enumerate(self.tables):
            if table:
                z[..., i] = -x[..., i] - self.correction(i, x, z)
            else:
                z[..., i] = -x[..., i]
        return z


def _as_weight(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**6)
    return Fraction(value)


def check_weights(weights: Sequence) -> Tuple[Fraction, ...]:
    """Normalize and validate dilation weights ``1 = a_1 <= ... <= a_n``."""
    try:
        weights = tuple(_as_weight(w) for w in weights)
    except (TypeError, ValueError) as err:
        raise GroupLawError(f'invalid weights: {err}') from err
    if not weights:
        raise GroupLawError('a group needs at least one coordinate')
    if weights[0] != 1:
        raise GroupLawError(f'first weight must be 1, got {weights[0]}')
    if any(b < a for a, b in zip(weights, weights[1:])):
        raise GroupLawError(f'weights must be nondecreasing: {weights}')
    return weights
