from fractions import Fraction

import pytest
from hypothesis import given

from semipart.hamel import (
    ZERO, BasisElement, Cylinder, NonCanonicalPoint, UndefinedForZero, add, b, coeff_sum,
    cylinder_contains, cylinder_index, cylinder_string, is_canonical_point, lex_index_bound,
    make_real, max_index, scale, support,
)

from strategies import elements, nonzero_rationals, points, rationals, reals


def test_make_real_examples():
    assert make_real([]) == ZERO
    assert make_real([(b(0), 1), (b(0), -1)]) == ZERO
    assert make_real([(b(2, "01"), Fraction(1, 2)), (b(2, "01"), Fraction(1, 3))]) == \
        make_real([(b(2, "01"), Fraction(5, 6))])


def test_add_examples():
    x = make_real([(b(0), 1)])
    y = make_real([(b(0), 2), (b(1, "1"), 1)])
    assert add(x, y) == make_real([(b(0), 3), (b(1, "1"), 1)])
    assert add(x, ZERO) == x
    assert add(x, scale(-1, x)) == ZERO


def test_scale_examples():
    x = make_real([(b(1, "1"), Fraction(3, 2))])
    assert scale(1, x) == x
    assert scale(0, x) == ZERO
    assert scale(2, x) == make_real([(b(1, "1"), 3)])


def test_support_and_max_index():
    assert support(ZERO) == frozenset()
    assert support(make_real([(b(0), 5)])) == {b(0)}
    assert max_index(make_real([(b(0), 1)])) == 0
    assert max_index(make_real([(b(3, "1"), 1), (b(7, "01"), -2)])) == 7
    with pytest.raises(UndefinedForZero):
        max_index(ZERO)


def test_coeff_sum_examples():
    assert coeff_sum(ZERO, Cylinder(0, 1)) == 0
    x = make_real([(b(0, "01"), 2), (b(0, "1"), 3)])
    assert coeff_sum(x, Cylinder(0, 1)) == 5
    assert coeff_sum(x, Cylinder(1, 1)) == 0


def test_cylinder_enumeration():
    assert [cylinder_string(k) for k in (1, 2, 3, 4, 6)] == ["", "0", "1", "00", "10"]
    for k in range(1, 200):
        assert cylinder_index(cylinder_string(k)) == k
    with pytest.raises(ValueError):
        cylinder_string(0)


def test_cylinder_membership():
    assert cylinder_contains("01", cylinder_index("0"))
    assert cylinder_contains("1", cylinder_index("10"))
    assert not cylinder_contains("1", cylinder_index("11"))
    assert cylinder_contains("", cylinder_index("000"))


def test_non_canonical_point_rejected():
    assert is_canonical_point("0101") and is_canonical_point("")
    assert not is_canonical_point("10") and not is_canonical_point("2")
    with pytest.raises(NonCanonicalPoint):
        BasisElement(0, "10")
    with pytest.raises(ValueError):
        BasisElement(-1, "")


def test_str_is_canonical():
    x = make_real([(b(2, "01"), Fraction(-1, 3)), (b(0), 2)])
    assert str(x) == "2*b(0,) - 1/3*b(2,01)"
    assert str(ZERO) == "0"


@given(reals)
def test_no_zero_coefficients(x):
    assert all(c != 0 for c in x.values())


@given(reals, reals, reals)
def test_group_laws(x, y, z):
    assert add(x, y) == add(y, x)
    assert add(add(x, y), z) == add(x, add(y, z))
    assert add(x, ZERO) == x
    assert add(x, scale(-1, x)) == ZERO


@given(rationals, rationals, reals, reals)
def test_vector_space_laws(p, q, x, y):
    assert scale(p, add(x, y)) == add(scale(p, x), scale(p, y))
    assert scale(p + q, x) == add(scale(p, x), scale(q, x))
    assert scale(p * q, x) == scale(p, scale(q, x))


@given(nonzero_rationals, reals)
def test_support_scale_invariant(q, x):
    assert support(scale(q, x)) == support(x)


@given(reals, reals, elements)
def test_coeff_sum_additive(x, y, e):
    for k in range(1, 40):
        J = Cylinder(e.piece, k)
        assert coeff_sum(add(x, y), J) == coeff_sum(x, J) + coeff_sum(y, J)


@given(points, points)
def test_distinct_points_separated_below_bound(p, q):
    if p == q:
        return
    bound = lex_index_bound([p, q])
    assert any(cylinder_contains(p, k) != cylinder_contains(q, k) for k in range(1, bound + 1))
