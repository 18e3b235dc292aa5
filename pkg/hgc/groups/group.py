# Copyright (c) SI-Analytics. All rights reserved.
from fractions import Fraction
from typing import Dict, Optional, Sequence

import numpy as np

from .law import GroupLaw, check_weights


class HomogeneousGroup:
    """A homogeneous nilpotent group on ``R^n``.

    The dilations ``delta_r(x) = (r^{a_1} x_1, ..., r^{a_n} x_n)`` act as
    group automorphisms and the Haar measure is the Lebesgue measure, so
    ``Q = sum(a_i)`` governs its scaling.

    Args:
        weights (Sequence): Dilation exponents ``1 = a_1 <= ... <= a_n``.
            Integers, :class:`Fraction` or strings like ``'3/2'``.
        law (GroupLaw, optional): The polynomial group law. Defaults to
            the abelian (Euclidean) law.
        name (str, optional): Display name, e.g. ``'heisenberg:1'``.
    """

    def __init__(self,
                 weights: Sequence,
                 law: Optional[GroupLaw] = None,
                 name: Optional[str] = None):
        self.weights = check_weights(weights)
        self.law = law if law is not None else GroupLaw.abelian(
            len(self.weights))
        self.law.check(self.weights)
        self.name = name or f'group:{len(self.weights)}'
        self._exponents = np.array([float(w) for w in self.weights])

    def __repr__(self) -> str:
        weights = ','.join(str(w) for w in self.weights)
        return f'{self.__class__.__name__}({self.name}, weights=({weights}))'

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def Q(self) -> Fraction:
        """Homogeneous dimension ``sum(a_i)``, exact."""
        return sum(self.weights, Fraction(0))

    @property
    def A(self) -> Fraction:
        """``prod(a_i)``, the exponent scale of the homogeneous norm."""
        out = Fraction(1)
        for w in self.weights:
            out *= w
        return out

    @property
    def exponents(self) -> np.ndarray:
        """Weights as a float array."""
        return self._exponents.copy()

    @property
    def is_abelian(self) -> bool:
        return self.law.is_abelian

    def origin(self) -> np.ndarray:
        return np.zeros(self.dim)

    def _points(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape[-1:] != (self.dim, ):
            raise ValueError(
                f'points must have trailing dimension {self.dim}, '
                f'got shape {x.shape}')
        return x

    def dilate(self, x, r) -> np.ndarray:
        """``delta_r(x)``; ``r`` may be an array broadcast over points."""
        x = self._points(x)
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0):
            raise ValueError(f'dilation factor must be positive, got {r}')
        return x * r[..., None]**self._exponents

    def norm(self, x) -> np.ndarray:
        """Homogeneous norm ``(sum |x_i|^{2A/a_i})^{1/(2A)}``.

        Evaluated after scaling by the largest ``|x_i|^{1/a_i}`` to keep
        the large exponents in range.
        """
        x = np.abs(self._points(x))
        two_a = 2 * float(self.A)
        gauge = np.max(x**(1.0 / self._exponents), axis=-1)
        safe = np.where(gauge > 0, gauge, 1.0)
        scaled = x / safe[..., None]**self._exponents
        total = np.sum(scaled**(two_a / self._exponents), axis=-1)
        return np.where(gauge > 0, safe * total**(1.0 / two_a), 0.0)

    def multiply(self, x, y) -> np.ndarray:
        return self.law.multiply(self._points(x), self._points(y))

    def inverse(self, x) -> np.ndarray:
        return self.law.inverse(self._points(x))

    def validate(self,
                 num_samples: int = 1000,
                 rng: Optional[np.random.Generator] = None,
                 scale: float = 1.0) -> Dict[str, float]:
        """Measure the group axioms on random samples.

        Args:
            num_samples (int): Number of random triples.
            rng (np.random.Generator, optional): Source of samples.
                Defaults to ``default_rng(0)``.
            scale (float): Coordinates are drawn from ``[-scale, scale]``.

        Returns:
            dict: Max relative residuals of associativity, identity,
            inverse and dilation-automorphism, and the norm homogeneity
            and symmetry residuals.
        """
        rng = rng if rng is not None else np.random.default_rng(0)
        x, y, z = rng.uniform(-scale, scale, size=(3, num_samples, self.dim))
        r = np.exp(rng.uniform(-2.0, 2.0, size=num_samples))

        def rel(a, b):
            size = np.maximum(np.abs(a), np.abs(b))
            return float(np.max(np.abs(a - b) / np.maximum(size, 1.0)))

        zero = np.zeros_like(x)
        lhs = self.multiply(self.multiply(x, y), z)
        rhs = self.multiply(x, self.multiply(y, z))
        norm_x = self.norm(x)
        return dict(
            associativity=rel(lhs, rhs),
            identity=max(
                rel(self.multiply(x, zero), x), rel(self.multiply(zero, x),
                                                    x)),
            inverse=max(
                rel(self.multiply(x, self.inverse(x)), zero),
                rel(self.multiply(self.inverse(x), x), zero)),
            dilation=rel(
                self.dilate(self.multiply(x, y), r),
                self.multiply(self.dilate(x, r), self.dilate(y, r))),
            norm_homogeneity=float(
                np.max(
                    np.abs(self.norm(self.dilate(x, r)) - r * norm_x) /
                    (r * norm_x))),
            norm_symmetry=float(
                np.max(
                    np.abs(self.norm(self.inverse(x)) - norm_x) / norm_x)),
        )

    def to_dict(self) -> dict:
        """The JSON group definition of this group."""
        return dict(
            name=self.name,
            dimension=self.dim,
            weights=[
                str(w) if w.denominator != 1 else int(w)
                for w in self.weights
            ],
            law=self.law.to_list())
