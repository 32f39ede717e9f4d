from fractions import Fraction
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semipart.exprs import parse_union
from semipart.oracles import brute_force_halfline
from semipart.sumset import (
    EMPTY, INF, Interval, IntervalUnion, NoInterval, PreconditionError, UnsupportedInput,
    cantor_stage, closed, even_sum_halfline, is_additively_closed, is_subset, is_triple_closed,
    minkowski_sum, n_fold, normalize, odd_sums_contained, open_interval, point,
)
from semipart.verify import bounded_positive_input, halfline_input, triple_closed_input

from strategies import unions

U = parse_union


def pair_sum(I: Interval, J: Interval) -> Interval:
    return Interval(I.lo + J.lo, I.hi + J.hi, I.lo_closed and J.lo_closed, I.hi_closed and J.hi_closed)


def probes(*sets):
    """Every finite endpoint, midpoints between consecutive ones and points just outside."""
    ends = sorted({v for S in sets for p in S for v in (p.lo, p.hi) if abs(v) != INF})
    if not ends:
        return [Fraction(0)]
    out = set(ends) | {ends[0] - 1, ends[-1] + 1}
    out |= {(a + c) / 2 for a, c in zip(ends, ends[1:])}
    return sorted(out)


def test_normalize_examples():
    assert normalize([open_interval(0, 1), open_interval(1, 2)]) == IntervalUnion(
        (open_interval(0, 1), open_interval(1, 2)))
    assert normalize([Interval(0, 1, False, True), Interval(1, 2, True, False)]) == U("(0,2)")
    assert normalize([]) == EMPTY
    assert normalize([Interval(0, 1, False, False), point(1)]) == U("(0,1]")


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(2, 1)
    with pytest.raises(ValueError):
        Interval(1, 1, True, False)
    with pytest.raises(ValueError):
        Interval(0, INF, True, True)
    with pytest.raises(TypeError):
        Interval(0.5, 1)


@pytest.mark.parametrize("a, b, expected", [
    ("(0,1)", "(0,1)", "(0,2)"),
    ("[0,1]", "[0,1]", "[0,2]"),
    ("[0,1/3] u [2/3,1]", "[0,1/3] u [2/3,1]", "[0,2]"),
    ("(1,2)", "[5,5]", "(6,7)"),
    ("[1,inf)", "(-inf,0]", "(-inf,inf)"),
    ("{}", "[0,1]", "{}"),
])
def test_minkowski_examples(a, b, expected):
    assert minkowski_sum(U(a), U(b)) == U(expected)


def test_n_fold_examples():
    A = U("(1,2)")
    assert n_fold(A, 1) == A
    assert n_fold(A, 2) == U("(2,4)")
    assert n_fold(A, 4) == U("(4,8)")
    with pytest.raises(ValueError):
        n_fold(A, 0)


def test_subset_examples():
    assert is_subset(EMPTY, U("[0,1]"))
    assert is_subset(U("(0,1)"), U("[0,1]"))
    assert not is_subset(U("[0,1]"), U("(0,1)"))
    assert U("[1,2] u [3,3]") <= U("[0,5)")


@pytest.mark.parametrize("src, two, three", [
    ("(0,inf)", True, True),
    ("(1,2)", False, False),
    ("(-inf,-1)", True, True),
    ("[1,inf)", True, True),
    ("[1,2] u [3,inf)", False, True),
])
def test_closure_examples(src, two, three):
    A = U(src)
    assert is_additively_closed(A) == two
    assert is_triple_closed(A) == three


def test_halfline_examples():
    h = even_sum_halfline(U("(1,2)"))
    assert (h.t, h.certified) == (4, True)
    assert even_sum_halfline(U("(0,1)")).t == 0
    assert brute_force_halfline(U("(1,2)"))[0] == 4
    assert brute_force_halfline(U("(0,1)"))[0] == 0
    with pytest.raises(NoInterval):
        even_sum_halfline(U("[5,5]"))
    with pytest.raises(UnsupportedInput):
        even_sum_halfline(U("(-3,-1)"))


def test_odd_sums_examples():
    assert odd_sums_contained(U("[1,inf)"), 5)
    assert odd_sums_contained(U("(-inf,-1)"), 5)
    with pytest.raises(PreconditionError):
        odd_sums_contained(U("(1,2)"), 5)


def test_cantor_stages():
    assert cantor_stage(0) == U("[0,1]")
    assert cantor_stage(1) == U("[0,1/3] u [2/3,1]")
    C2 = cantor_stage(2)
    assert len(C2) == 4 and all(p.hi - p.lo == Fraction(1, 9) for p in C2)
    for n in range(8):
        assert minkowski_sum(cantor_stage(n), cantor_stage(n)) == U("[0,2]")


def test_text_forms():
    assert str(U("[0,1/3] u [2/3,1]")) == "[0,1/3] u [2/3,1]"
    assert str(EMPTY) == "{}"
    assert str(U("[2,2]")) == "[2,2]"
    assert str(U("(-inf,0) u (0,inf)")) == "(-inf,0) u (0,inf)"


def test_bulk_path_matches_small_path():
    # 100 x 100 parts crosses the vectorized threshold; compare against folding part by part
    rng = random.Random(5)
    A = normalize(point(Fraction(rng.randint(0, 10_000), 7)) for _ in range(100))
    B = normalize(closed(Fraction(k * 13, 3), Fraction(k * 13, 3) + Fraction(1, 5)) for k in range(100))
    whole = minkowski_sum(A, B)
    piecewise = [q for p in A for q in minkowski_sum(IntervalUnion((p,)), B)]
    assert whole == normalize(piecewise)


@given(unions())
def test_normalized_form(A):
    assert normalize(A.parts) == A
    for p, q in zip(A.parts, A.parts[1:]):
        assert p.hi < q.lo or (p.hi == q.lo and not p.hi_closed and not q.lo_closed)


@given(unions(), unions())
def test_sum_membership_oracle(A, B):
    S = minkowski_sum(A, B)
    naive = [pair_sum(I, J) for I in A for J in B]
    for z in probes(S, naive):
        assert (z in S) == any(z in I for I in naive)


@given(unions(), unions(), unions())
def test_sum_laws(A, B, C):
    assert minkowski_sum(A, B) == minkowski_sum(B, A)
    assert minkowski_sum(minkowski_sum(A, B), C) == minkowski_sum(A, minkowski_sum(B, C))
    assert minkowski_sum(A, A | B) == minkowski_sum(A, A) | minkowski_sum(A, B)


@given(unions(), st.integers(1, 3), st.integers(1, 3))
def test_fold_additivity(A, m, k):
    assert n_fold(A, m + k) == minkowski_sum(n_fold(A, m), n_fold(A, k))


@given(unions(), unions())
def test_subset_oracle(A, B):
    expected = all((z in B) for z in probes(A, B) if z in A)
    assert is_subset(A, B) == expected
    assert is_subset(A, A | B)


@given(st.integers(0, 2**32))
def test_halfline_matches_brute_force(seed):
    A = halfline_input(random.Random(seed))
    h = even_sum_halfline(A)
    assert h.certified
    assert brute_force_halfline(A)[0] == h.t


@given(st.integers(0, 2**32))
def test_odd_sums_of_triple_closed_sets(seed):
    assert odd_sums_contained(triple_closed_input(random.Random(seed)), 8)


@given(st.integers(0, 2**32))
def test_bounded_positive_sets_are_not_closed(seed):
    A = bounded_positive_input(random.Random(seed))
    assert not is_additively_closed(A) and not is_triple_closed(A)
