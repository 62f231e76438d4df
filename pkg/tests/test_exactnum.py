from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from yblattice.errors import ZeroSlope
from yblattice.exactnum import (
    GammaPair,
    RationalStream,
    format_rational,
    gamma_pair_from_slope,
    parse_rational,
    sample_rational,
)


def test_parse_plain_and_fraction():
    assert parse_rational("3") == 3
    assert parse_rational("-7/2") == Fraction(-7, 2)
    assert parse_rational("+4/6") == Fraction(2, 3)


@pytest.mark.parametrize("text", ["", "1.5", "1e3", " 1", "1 ", "1/-2", "a/b", "1//2"])
def test_parse_rejects_non_literals(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_rejects_zero_denominator():
    with pytest.raises(ValueError, match="zero denominator"):
        parse_rational("3/0")


def test_format_is_canonical():
    assert format_rational(Fraction(4, 6)) == "2/3"
    assert format_rational(Fraction(-8, 2)) == "-4"
    assert format_rational(Fraction(0, 5)) == "0"


@given(st.fractions(min_value=-1000, max_value=1000, max_denominator=997))
def test_format_parse_round_trip(r):
    assert parse_rational(format_rational(r)) == r


@given(st.integers(0, 2**30), st.integers(0, 1000), st.integers(1, 50))
def test_sample_is_deterministic_and_bounded(seed, index, bound):
    a = sample_rational(seed, index, bound)
    b = sample_rational(seed, index, bound)
    assert a == b
    assert abs(a.numerator) <= bound
    assert 1 <= a.denominator <= bound


def test_sample_rejects_bad_bound():
    with pytest.raises(ValueError):
        sample_rational(1, 0, 0)


def test_stream_walks_indices():
    stream = RationalStream(5, 10)
    first, second = stream.next(), stream.next()
    assert (first, second) == (sample_rational(5, 0, 10), sample_rational(5, 1, 10))
    assert stream.index == 2


def test_stream_nonzero_skips_zeros():
    stream = RationalStream(0, 1)
    values = [stream.next_nonzero() for _ in range(20)]
    assert all(v != 0 for v in values)


def test_gamma_pair_validates_constraint():
    GammaPair(beta=Fraction(0), gamma=Fraction(1), delta=1)
    GammaPair(beta=Fraction(2), gamma=Fraction(-2), delta=0)
    with pytest.raises(ValueError):
        GammaPair(beta=Fraction(1), gamma=Fraction(1), delta=1)
    with pytest.raises(ValueError):
        GammaPair(beta=Fraction(0), gamma=Fraction(1), delta=2)


def test_gamma_pair_from_slope_worked_values():
    assert gamma_pair_from_slope(Fraction(1), 1) == GammaPair(
        beta=Fraction(0), gamma=Fraction(1), delta=1
    )
    assert gamma_pair_from_slope(Fraction(2), 1) == GammaPair(
        beta=Fraction(-3, 4), gamma=Fraction(5, 4), delta=1
    )
    assert gamma_pair_from_slope(Fraction(2), 0) == GammaPair(
        beta=Fraction(-1), gamma=Fraction(1), delta=0
    )


def test_gamma_pair_from_slope_rejects_zero():
    with pytest.raises(ZeroSlope):
        gamma_pair_from_slope(Fraction(0), 1)


@given(
    st.fractions(min_value=-20, max_value=20, max_denominator=30).filter(lambda s: s != 0),
    st.sampled_from([0, 1]),
)
def test_slope_parametrizes_the_curve(slope, delta):
    pair = gamma_pair_from_slope(slope, delta)
    assert pair.gamma - pair.beta == slope
    assert pair.gamma + pair.beta == Fraction(delta) / slope
