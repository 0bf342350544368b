import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclecensus.census import derangement_count
from cyclecensus.errors import NormalizationError, OutOfRangeError, PropertyViolationError
from cyclecensus.genfunc import (
    CyclePolynomial,
    UnitPoint,
    build_polynomial,
    eval_exact,
    eval_negative_simplified,
    eval_unit_circle,
    finite_difference_profile,
)
from cyclecensus.oracle import brute_force_census


def rising_product(n):
    """Coefficients of x(x+1)...(x+n-1), expanded term by term."""
    coeffs = [1]
    for j in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] += j * c
        coeffs = nxt
    return tuple(coeffs)


def power_sum(coeffs, x):
    return sum(Fraction(c) * Fraction(x) ** k for k, c in enumerate(coeffs))


def test_derangement_polynomial_4():
    assert build_polynomial(1, 4).coeffs == (0, 6, 3)


def test_stirling_polynomial_is_rising_product():
    assert build_polynomial(0, 3).coeffs == (0, 2, 3, 1) == rising_product(3)
    for n in range(60):
        assert build_polynomial(0, n).coeffs == rising_product(n)


def test_single_two_cycle():
    p = build_polynomial(1, 2)
    assert p.coeffs == (0, 1)
    assert p.degree == 1 and p.lead == 1


@pytest.mark.parametrize("n", range(2, 10))
def test_coefficients_match_brute_force(n):
    assert build_polynomial(1, n).coeffs == brute_force_census(n, 1).counts[: n // 2 + 1]


@pytest.mark.parametrize(
    "a, n, x, expected",
    [(1, 4, -1, -3), (1, 5, -2, 32), (0, 4, 1, 24)],
)
def test_eval_exact_examples(a, n, x, expected):
    assert eval_exact(build_polynomial(a, n), x) == expected


@given(
    a=st.integers(0, 3),
    n=st.integers(0, 40),
    x=st.fractions(min_value=-20, max_value=20, max_denominator=50),
)
def test_eval_exact_matches_power_sum(a, n, x):
    p = build_polynomial(a, n)
    assert eval_exact(p, x) == power_sum(p.coeffs, x)


@given(a=st.integers(0, 4), n=st.integers(0, 80))
def test_eval_at_one_counts_family(a, n):
    assert eval_exact(build_polynomial(a, n), 1) == derangement_count(n, a)


@given(n=st.integers(1, 150), m=st.integers(1, 149))
def test_stirling_roots_at_negative_integers(n, m):
    if m <= n - 1:
        assert eval_exact(build_polynomial(0, n), -m) == 0


# --- unit circle ---------------------------------------------------------------


def test_unit_point_validation():
    with pytest.raises(ValueError):
        UnitPoint(1.0, 0.1)
    w = UnitPoint.root_of_unity(1, 4)
    assert w.re == pytest.approx(0.0, abs=1e-15) and w.im == pytest.approx(1.0)


def test_normalized_examples():
    c4 = build_polynomial(0, 4)
    assert eval_unit_circle(c4, UnitPoint(1.0, 0.0)) == 1
    assert abs(eval_unit_circle(c4, UnitPoint(-1.0, 0.0))) < 1e-15
    d4 = build_polynomial(1, 4)
    assert eval_unit_circle(d4, UnitPoint(-1.0, 0.0)) == pytest.approx(-1 / 3, abs=1e-15)


def test_unnormalized_matches_direct():
    p = build_polynomial(1, 12)
    v = cmath.exp(0.7j)
    direct = sum(c * v**k for k, c in enumerate(p.coeffs))
    assert eval_unit_circle(p, v, normalized=False) == pytest.approx(direct, rel=1e-12)


def test_unnormalized_refused_for_large_n():
    with pytest.raises(OutOfRangeError):
        eval_unit_circle(build_polynomial(0, 301), UnitPoint(0.0, 1.0), normalized=False)


def test_normalization_of_empty_family():
    with pytest.raises(NormalizationError):
        eval_unit_circle(build_polynomial(1, 1), UnitPoint(0.0, 1.0))


def test_normalized_survives_huge_rows():
    z = eval_unit_circle(build_polynomial(0, 1500), UnitPoint.root_of_unity(1, 3))
    assert math.isfinite(z.real) and abs(z) <= 1


@given(
    a=st.integers(0, 3),
    n=st.integers(4, 200),
    theta=st.floats(0, 2 * math.pi, allow_nan=False),
)
def test_normalized_modulus_at_most_one(a, n, theta):
    v = UnitPoint(math.cos(theta), math.sin(theta))
    assert abs(eval_unit_circle(build_polynomial(a, n), v)) <= 1 + 1e-9


# --- simplified evaluation at negative integers -------------------------------


@pytest.mark.parametrize("n, t, expected", [(5, 2, 32), (6, 1, -5), (4, 2, 0)])
def test_simplified_examples(n, t, expected):
    assert eval_negative_simplified(n, t, 1) == expected


def test_simplified_guards():
    with pytest.raises(OutOfRangeError):
        eval_negative_simplified(-1, 3, 1)
    with pytest.raises(OutOfRangeError):
        eval_negative_simplified(20, 13, 1)


@pytest.mark.parametrize("a", [1, 2, 3])
def test_simplified_short_rows_keep_every_term(a):
    for t in range(1, 8):
        for n in range(0, t + 1):
            assert eval_negative_simplified(n, t, a) == eval_exact(build_polynomial(a, n), -t)


@given(a=st.integers(0, 4), t=st.integers(1, 6), n=st.integers(0, 70))
def test_simplified_equals_direct(a, t, n):
    assert eval_negative_simplified(n, t, a) == eval_exact(build_polynomial(a, n), -t)


def test_a2_needs_every_cycle_count():
    # With a=2 a set of removed short cycles of size b can have anywhere from
    # b/2 to b cycles; restricting the cycle count to >= n-t drops real terms.
    n, t = 12, 1
    direct = eval_exact(build_polynomial(2, n), -t)
    assert eval_negative_simplified(n, t, 2) == direct
    assert direct != 0


# --- finite differences ---------------------------------------------------------


def test_minus_one_profile_is_one_minus_n():
    rep = finite_difference_profile(1, 1, 2, 10)
    assert rep.vanishing_order == 2 and rep.degree == 1
    assert rep.coefficients == (1, -1)


def test_minus_two_profile_values():
    rep = finite_difference_profile(2, 1, 1, 8)
    assert rep.degree == 2
    assert rep.values[:6] == tuple(
        Fraction(x) for x in ("0", "-1/2", "-1/2", "0", "1", "5/2")
    )
    for n in range(1, 9):
        assert rep.evaluate(n) * 2**n == eval_exact(build_polynomial(1, n), -2)


def test_zero_polynomial_profile():
    rep = finite_difference_profile(1, 0, 2, 6)
    assert all(v == 0 for v in rep.values)
    assert rep.vanishing_order == 0 and rep.coefficients == (0,)


def test_window_guard():
    with pytest.raises(OutOfRangeError):
        finite_difference_profile(3, 1, 1, 5)


@pytest.mark.parametrize("t", range(1, 6))
def test_profile_degree_is_t_for_derangements(t):
    rep = finite_difference_profile(t, 1, 1, 30)
    assert rep.vanishing_order == t + 1
    for n, v in zip(range(1, 31), rep.values):
        assert rep.evaluate(n) == v


def test_profile_extrapolates_beyond_window():
    rep = finite_difference_profile(3, 1, 1, 20)
    for n in (25, 60):
        assert rep.evaluate(n) * 3**n == eval_exact(build_polynomial(1, n), -3)


def test_non_polynomial_sequence_is_reported():
    # n -> D_{n,2}(-1) grows like an involution count, not like a polynomial
    with pytest.raises(PropertyViolationError):
        finite_difference_profile(1, 2, 1, 30, cap=12)


def test_str():
    assert str(CyclePolynomial(1, 4, (0, 6, 3))) == "6x^1 + 3x^2"
