# Copyright (c) SI-Analytics. All rights reserved.
from fractions import Fraction
from typing import List, Optional, Sequence

from .builder import GROUPS
from .group import HomogeneousGroup
from .law import GroupLaw, Monomial


@GROUPS.register_module()
class PolynomialGroup(HomogeneousGroup):
    """A group given by an explicit law table, e.g. from a JSON file."""

    def __init__(self,
                 weights: Sequence,
                 law: Optional[Sequence] = None,
                 name: Optional[str] = None):
        if law is not None and not isinstance(law, GroupLaw):
            law = GroupLaw.from_list(law)
        super().__init__(weights, law, name)


@GROUPS.register_module()
class EuclideanGroup(HomogeneousGroup):
    """``R^n`` with vector addition and isotropic dilations."""

    def __init__(self, dim: int = 1):
        super().__init__([1] * dim, name=f'euclidean:{dim}')


@GROUPS.register_module()
class HeisenbergGroup(HomogeneousGroup):
    """The Heisenberg group of dimension ``2d + 1`` in exponential
    coordinates ``(x_1..x_d, y_1..y_d, t)``.

    ``t`` of the product is ``t + t' + (1/2) sum(x_i y'_i - y_i x'_i)``.
    """

    def __init__(self, dim: int = 1):
        n = 2 * dim + 1
        half = Fraction(1, 2)
        table = []
        for i in range(dim):
            xi, yi = i, dim + i
            table.append(Monomial(half, _unit(xi, n), _unit(yi, n)))
            table.append(Monomial(-half, _unit(yi, n), _unit(xi, n)))
        law = GroupLaw([[] for _ in range(n - 1)] + [table])
        super().__init__([1] * (n - 1) + [2], law, name=f'heisenberg:{dim}')


@GROUPS.register_module()
class TriangularGroup(HomogeneousGroup):
    """Unipotent upper triangular ``m x m`` matrices.

    Coordinate ``(i, j)``, ``i < j``, is the matrix entry and has weight
    ``j - i``; the law is the matrix product ``(I + X)(I + Y)``.
    """

    def __init__(self, dim: int = 3):
        if dim < 2:
            raise ValueError('triangular groups need matrices of size >= 2')
        self.entries = triangular_entries(dim)
        index = {e: k for k, e in enumerate(self.entries)}
        n = len(self.entries)
        tables = []
        for (i, j) in self.entries:
            tables.append([
                Monomial(
                    Fraction(1), _unit(index[(i, k)], n),
                    _unit(index[(k, j)], n)) for k in range(i + 1, j)
            ])
        weights = [j - i for (i, j) in self.entries]
        super().__init__(weights, GroupLaw(tables), name=f'triangular:{dim}')


def triangular_entries(size: int) -> List[tuple]:
    """Strictly upper entries ordered by weight ``j - i`` then row."""
    entries = [(i, j) for i in range(size) for j in range(i + 1, size)]
    return sorted(entries, key=lambda e: (e[1] - e[0], e[0]))


def _unit(k: int, n: int) -> tuple:
    return tuple(int(i == k) for i in range(n))
