# Copyright (c) SI-Analytics. All rights reserved.
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple


@dataclass(frozen=True, order=True)
class Multiindex:
    """A multiindex ``alpha`` of nonnegative integers."""
    entries: Tuple[int, ...]

    def __post_init__(self):
        if any(int(e) != e or e < 0 for e in self.entries):
            raise ValueError(f'invalid multiindex {self.entries}')

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def length(self) -> int:
        """``||alpha|| = sum(alpha_i)``."""
        return sum(self.entries)

    def degree(self, weights: Sequence[Fraction]) -> Fraction:
        """Weighted degree ``|alpha| = sum(a_i * alpha_i)``."""
        return sum((Fraction(w) * e for w, e in zip(weights, self.entries)),
                   Fraction(0))

    def __str__(self) -> str:
        return '(' + ','.join(str(e) for e in self.entries) + ')'

    @classmethod
    def unit(cls, i: int, dim: int) -> 'Multiindex':
        return cls(tuple(int(k == i) for k in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> 'Multiindex':
        return cls((0, ) * dim)

    @classmethod
    def up_to_length(cls, dim: int, max_length: int) -> List['Multiindex']:
        """All multiindices with ``||alpha|| <= max_length``."""
        out = [
            cls(alpha)
            for alpha in itertools.product(range(max_length + 1), repeat=dim)
            if sum(alpha) <= max_length
        ]
        return sorted(out, key=lambda a: (a.length, a.entries))

    @classmethod
    def up_to_degree(cls, weights: Sequence[Fraction],
                     max_degree) -> List['Multiindex']:
        """All multiindices with weighted degree ``|alpha| <= max_degree``."""
        max_degree = Fraction(max_degree)
        # a_1 = 1 bounds the length by the degree
        candidates = cls.up_to_length(len(weights), int(max_degree))
        return [a for a in candidates if a.degree(weights) <= max_degree]
