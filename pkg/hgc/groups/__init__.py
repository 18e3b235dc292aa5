# Copyright (c) SI-Analytics. All rights reserved.
from .builder import GROUPS, build_group, load_group_file, parse_group_name
from .builtin import (EuclideanGroup, HeisenbergGroup, PolynomialGroup,
                      TriangularGroup)
from .constants import (NormConstants, annulus_integral, ball_volume,
                        norm_constants, radial_integral)
from .group import HomogeneousGroup
from .law import GroupLaw, Monomial
from .multiindex import Multiindex
from .vector_fields import (Polynomial, VectorFieldTable, build_vector_fields,
                            describe_fields)

__all__ = [
    'GROUPS', 'build_group', 'load_group_file', 'parse_group_name',
    'EuclideanGroup', 'HeisenbergGroup', 'PolynomialGroup', 'TriangularGroup',
    'NormConstants', 'annulus_integral', 'ball_volume', 'norm_constants',
    'radial_integral', 'HomogeneousGroup', 'GroupLaw', 'Monomial',
    'Multiindex', 'Polynomial', 'VectorFieldTable', 'build_vector_fields',
    'describe_fields'
]
