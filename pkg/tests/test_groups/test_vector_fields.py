from fractions import Fraction

import pytest

from hgc.groups import (Polynomial, build_group, build_vector_fields,
                        describe_fields)


def variable(i):
    return Polynomial.variable(i, 3)


def test_heisenberg_left_fields():
    table = build_vector_fields(build_group('heisenberg:1'))
    x, y, t = variable(0), variable(1), variable(2)
    # X_1 = d/dx - y/2 d/dt, X_2 = d/dy + x/2 d/dt
    assert table.apply_symbolic(t, 0) == y * Fraction(-1, 2)
    assert table.apply_symbolic(t, 1) == x * Fraction(1, 2)
    assert table.apply_symbolic(t, 2) == Polynomial.constant(1, 3)

    # [X_1, X_2] = d/dt
    bracket = table.apply_symbolic(table.apply_symbolic(t, 1), 0) - \
        table.apply_symbolic(table.apply_symbolic(t, 0), 1)
    assert bracket == Polynomial.constant(1, 3)


def test_heisenberg_right_fields():
    table = build_vector_fields(build_group('heisenberg:1'), side='right')
    x, y, t = variable(0), variable(1), variable(2)
    assert table.side == 'right'
    assert table.apply_symbolic(t, 0) == y * Fraction(1, 2)
    assert table.apply_symbolic(t, 1) == x * Fraction(-1, 2)


@pytest.mark.parametrize('name', ['heisenberg:1', 'triangular:3'])
@pytest.mark.parametrize('side', ['left', 'right'])
def test_partial_from_fields(name, side):
    table = build_vector_fields(build_group(name), side)
    x, y, t = variable(0), variable(1), variable(2)
    poly = x * t + y * y * x + t * t
    for j in range(3):
        assert table.partial_from_fields(poly, j) == poly.derivative(j)


def test_euclidean_fields():
    table = build_vector_fields(build_group('euclidean:2'))
    assert all(c.is_zero() for row in table.coeffs for c in row)
    assert describe_fields(table) == ['X1 = d/dx0', 'X2 = d/dx1']
    with pytest.raises(ValueError):
        build_vector_fields(build_group('euclidean:2'), side='up')


def test_describe_fields():
    table = build_vector_fields(build_group('heisenberg:1'))
    lines = describe_fields(table, ['x', 'y', 't'])
    assert len(lines) == 3
    assert lines[0].startswith('X1 = d/dx + ')
    assert lines[2] == 'X3 = d/dt'
