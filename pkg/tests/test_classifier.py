from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semipart.classifier import (
    NEG, POS, Label, classify, classify_by_scan, same_ray, split_below_top, verify_partition_sample,
)
from semipart.hamel import ZERO, Cylinder, UndefinedForZero, add, b, coeff_sum, make_real, max_index, scale
from semipart.sampling import SampleConfig

from strategies import nonzero_reals, positive_rationals, reals


def real(*pairs):
    return make_real(pairs)


@pytest.mark.parametrize("x, expected", [
    (ZERO, Label.zero()),
    (real((b(2), 3)), Label.pos(2, 1)),
    (real((b(0, "01"), 1), (b(0, "1"), -1)), Label.pos(0, 2)),
    (real((b(0, "01"), -1), (b(0, "1"), 1)), Label.neg(0, 2)),
])
def test_classify_examples(x, expected):
    assert classify(x) == expected
    assert classify_by_scan(x) == expected


def test_label_text():
    assert str(Label.pos(2, 1)) == "Pos alpha=2 k=1"
    assert str(Label.neg(0, 3)) == "Neg alpha=0 k=3"
    assert str(Label.zero()) == "Zero"
    with pytest.raises(ValueError):
        Label(POS, None, 1)


def test_split_examples():
    assert split_below_top(real((b(1), 1))) == (ZERO, real((b(1), 1)))
    assert split_below_top(real((b(0), 2), (b(3, "1"), 5))) == (real((b(0), 2)), real((b(3, "1"), 5)))
    with pytest.raises(UndefinedForZero):
        split_below_top(ZERO)


def test_same_ray_examples():
    x = real((b(0), 1), (b(2, "1"), -3))
    assert same_ray(ZERO, ZERO)
    assert same_ray(x, scale(Fraction(3, 2), x))
    assert not same_ray(x, scale(-1, x))
    assert not same_ray(real((b(0), 1)), real((b(1), 1)))


def test_closure_example():
    x, y = real((b(0), 1)), real((b(0), 2))
    assert classify(x) == classify(y) == classify(add(x, y)) == Label.pos(0, 1)


def test_empty_sample_is_vacuous():
    rep = verify_partition_sample(SampleConfig(count=0))
    assert rep.ok and sum(rep.checks.values()) == 0 and not rep.label_counts


def test_sample_report_records():
    rep = verify_partition_sample(SampleConfig(seed=3, count=200))
    assert rep.ok
    lines = rep.records()
    assert any(line.startswith("label-count Pos ") for line in lines)
    assert "check totality 200" in lines and "check homogeneity 200" in lines
    assert rep.as_dict()["violations"] == []


@given(reals)
def test_fast_classifier_matches_scan(x):
    assert classify(x) == classify_by_scan(x)


@given(reals)
def test_exactly_one_label(x):
    lab = classify(x)
    assert lab.is_zero == (not x)
    assert lab.tag in ("Zero", POS, NEG)


@given(reals, positive_rationals)
def test_homogeneity(x, q):
    assert classify(scale(q, x)) == classify(x)


@given(reals)
def test_duality(x):
    assert classify(scale(-1, x)) == classify(x).negated()


@given(nonzero_reals, positive_rationals, reals)
def test_closure_with_lower_noise(x, q, noise):
    alpha = max_index(x)
    d = make_real((e, c) for e, c in noise.items() if e.piece < alpha)
    y = add(scale(q, x), d)
    assert classify(y) == classify(x)
    assert classify(add(x, y)) == classify(x)


@given(nonzero_reals, nonzero_reals)
def test_closure_of_independent_same_label_pairs(x, y):
    if classify(x) == classify(y):
        assert classify(add(x, y)) == classify(x)


@given(nonzero_reals)
def test_split_reproduces_label(x):
    lab = classify(x)
    d, e = split_below_top(x)
    assert add(d, e) == x
    assert all(el.piece < lab.alpha for el in d)
    sums = [coeff_sum(e, Cylinder(lab.alpha, i)) for i in range(1, lab.k + 1)]
    assert not any(sums[:-1])
    assert (sums[-1] > 0) == (lab.tag == POS) and sums[-1] != 0


@given(nonzero_reals, st.fractions(max_denominator=20).filter(lambda q: q > 0))
def test_same_ray_implies_same_label(x, q):
    y = scale(q, x)
    assert same_ray(x, y) and classify(x) == classify(y)
