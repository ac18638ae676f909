"""Polynomial ring: arithmetic, division, determinants, substitution, wire formats."""

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grothpoly import (
    DegreeOverflowError,
    NotDivisibleError,
    Polynomial,
    RationalPoint,
    UniverseMismatchError,
    VariableUniverse,
    determinant,
    exact_div,
    from_json_obj,
    poly_prod,
    poly_sum,
    random_rational_point,
)
from helpers import random_polynomial

U = VariableUniverse(3, 4)


def rng_polys(seed, count, universe=U, **kw):
    rng = random.Random(seed)
    return [random_polynomial(universe, rng, **kw) for _ in range(count)]


# -- constructors and canonical form ----------------------------------------


def test_additive_inverse():
    assert U.x(1) + (-U.x(1)) == 0
    assert (U.x(1) - U.x(1)).is_zero


def test_disjoint_supports_concatenate():
    s = (U.x(1) + U.y(1)) + U.beta() * U.x(1) * U.y(1)
    assert s.num_terms == 3
    assert s == U.circle_plus(1, 1)


def test_add_zero_identity():
    for p in rng_polys(1, 20):
        assert p + U.zero() == p
        assert p * U.one() == p


def test_difference_of_squares():
    assert (U.x(1) - U.x(2)) * (U.x(1) + U.x(2)) == U.x(1) ** 2 - U.x(2) ** 2


def test_mul_hand_expansion():
    got = U.circle_plus(1, 1) * (1 + U.beta() * U.x(2))
    expect = (
        U.x(1)
        + U.beta() * U.x(1) * U.x(2)
        + U.y(1)
        + U.beta() * U.x(2) * U.y(1)
        + U.beta() * U.x(1) * U.y(1)
        + U.beta() ** 2 * U.x(1) * U.x(2) * U.y(1)
    )
    assert got == expect
    assert got.num_terms == 6


def test_circle_plus():
    assert U.circle_plus(1, 1) == U.x(1) + U.y(1) + U.beta() * U.x(1) * U.y(1)
    assert U.circle_plus(1, 1).substitute({"b": 0}) == U.x(1) + U.y(1)
    assert U.circle_plus(1, 1).substitute({"b": 0, "y1": 0}) == U.x(1)
    with pytest.raises(UniverseMismatchError):
        U.circle_plus(4, 1)
    with pytest.raises(UniverseMismatchError):
        U.circle_plus(1, 5)


def test_bracket_pow():
    assert U.bracket_pow(1, 0) == 1
    assert U.bracket_pow(1, 2) == U.circle_plus(1, 1) * U.circle_plus(1, 2)
    assert U.bracket_pow(2, 1, p=1) == U.x(2) + U.y(2) + U.beta() * U.x(2) * U.y(2)
    with pytest.raises(UniverseMismatchError):
        U.bracket_pow(1, 5)


def test_vandermonde():
    assert U.vandermonde([1]) == 1
    assert U.vandermonde([]) == 1
    assert U.vandermonde([1, 2]) == U.x(1) - U.x(2)
    expect = (U.x(1) - U.x(2)) * (U.x(1) - U.x(3)) * (U.x(2) - U.x(3))
    assert U.vandermonde([1, 2, 3]) == expect


def test_universe_mismatch_rejected():
    other = VariableUniverse(2, 4)
    with pytest.raises(UniverseMismatchError):
        U.x(1) + other.x(1)
    with pytest.raises(UniverseMismatchError):
        U.x(1) * other.x(1)


def test_no_zero_coefficients_stored():
    p = U.x(1) * U.x(2) - U.x(2) * U.x(1) + U.y(3)
    assert p == U.y(3)
    assert p.num_terms == 1


def test_canonical_idempotence():
    # rebuilding any output from its own terms is a no-op
    for p in rng_polys(2, 20):
        rebuilt = poly_sum(U, [U.monomial(c, e) for e, c in p.terms_sorted()])
        assert rebuilt == p


def test_degree_overflow_guarded():
    with pytest.raises(DegreeOverflowError):
        U.x(1) ** 256
    p = U.x(1) ** 255  # at capacity is fine
    assert p.degree_in("x1") == 255


# -- substitution and evaluation ---------------------------------------------


def test_substitute_collapses_deformed_expansion_to_schur():
    # the three-summand (2,1) expansion at b=0, y=0 collapses to s_(2,1)(x1,x2)
    W = VariableUniverse(2, 3)
    w1 = W.circle_plus(1, 1) * W.circle_plus(1, 2) * W.circle_plus(2, 1)
    w2 = W.circle_plus(1, 1) * W.circle_plus(2, 3) * W.circle_plus(2, 1)
    w3 = W.beta() * W.circle_plus(1, 1) * W.circle_plus(1, 2) * W.circle_plus(2, 3) * W.circle_plus(2, 1)
    g = w1 + w2 + w3
    zeroed = g.substitute({"b": 0, "y1": 0, "y2": 0, "y3": 0})
    assert zeroed == W.x(1) ** 2 * W.x(2) + W.x(1) * W.x(2) ** 2


def test_substitute_relabel_across_universes():
    small = VariableUniverse(1, 2)
    p = small.circle_plus(1, 1)
    big = VariableUniverse(3, 2)
    q = p.substitute({"x1": big.x(3)}, universe=big)
    assert q == big.circle_plus(3, 1)


def test_substitute_missing_target_variable():
    small = VariableUniverse(2, 0)
    big = VariableUniverse(1, 0)
    with pytest.raises(UniverseMismatchError):
        (small.x(2)).substitute({}, universe=big)


def test_substitute_polynomial_value():
    p = U.x(1) ** 2
    q = p.substitute({"x1": U.x(2) + U.y(1)})
    assert q == (U.x(2) + U.y(1)) ** 2


def test_eval_rational():
    p = U.x(1) - U.x(2)
    pt = RationalPoint(Fraction(0), (Fraction(3), Fraction(3), Fraction(0)), (Fraction(0),) * 4)
    assert p.eval_rational(pt) == 0
    cp = U.circle_plus(1, 1)
    pt = RationalPoint(Fraction(1), (Fraction(1), Fraction(0), Fraction(0)), (Fraction(1), 0, 0, 0))
    assert cp.eval_rational(pt) == 3


def test_eval_is_ring_homomorphism():
    rng = random.Random(3)
    for _ in range(100):
        p = random_polynomial(U, rng)
        q = random_polynomial(U, rng)
        pt = random_rational_point(U, rng, distinct_x=False)
        assert (p * q).eval_rational(pt) == p.eval_rational(pt) * q.eval_rational(pt)
        assert (p + q).eval_rational(pt) == p.eval_rational(pt) + q.eval_rational(pt)


# -- ring axioms ----------------------------------------------------------------


def test_ring_axioms_random_triples():
    rng = random.Random(4)
    for _ in range(100):
        p, q, r = (random_polynomial(U, rng) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**62), st.integers(0, 2**62))
def test_ring_axioms_hypothesis(seed_a, seed_b):
    ra, rb = random.Random(seed_a), random.Random(seed_b)
    p = random_polynomial(U, ra)
    q = random_polynomial(U, rb)
    assert p + q == q + p
    assert p * q == q * p


# -- exact division ---------------------------------------------------------------


def test_exact_div_basic():
    q = exact_div(U.x(1) ** 2 - U.x(2) ** 2, U.x(1) - U.x(2))
    assert q == U.x(1) + U.x(2)


def test_exact_div_round_trip():
    rng = random.Random(5)
    done = 0
    while done < 50:
        p = random_polynomial(U, rng)
        d = random_polynomial(U, rng, nonzero=True)
        assert exact_div(p * d, d) == p
        done += 1


def test_exact_div_errors():
    with pytest.raises(NotDivisibleError):
        exact_div(U.x(1) + 1, U.x(2))
    with pytest.raises(NotDivisibleError):
        exact_div(U.x(1), U.const(2) * U.x(1))  # 1/2 is not an integer
    with pytest.raises(ZeroDivisionError):
        exact_div(U.x(1), U.zero())


def test_exact_div_determinant_numerator():
    # the 2x2 numerator of the (2,1) determinant formula divided by x1-x2
    W = VariableUniverse(2, 3)
    rows = [
        [W.bracket_pow(1, 3), W.bracket_pow(1, 1) * (1 + W.beta() * W.x(1))],
        [W.bracket_pow(2, 3), W.bracket_pow(2, 1) * (1 + W.beta() * W.x(2))],
    ]
    num = determinant(rows)
    got = exact_div(num, W.x(1) - W.x(2))
    w1 = W.circle_plus(1, 1) * W.circle_plus(1, 2) * W.circle_plus(2, 1)
    w2 = W.circle_plus(1, 1) * W.circle_plus(2, 3) * W.circle_plus(2, 1)
    w3 = W.beta() * w1 * W.circle_plus(2, 3)
    assert got == w1 + w2 + w3


# -- determinants ------------------------------------------------------------------


def test_determinant_1x1():
    p = U.circle_plus(1, 2)
    assert determinant([[p]]) == p


def test_determinant_hand_2x2():
    m = [
        [U.circle_plus(1, 1), 1 + U.beta() * U.x(1)],
        [U.circle_plus(2, 1), 1 + U.beta() * U.x(2)],
    ]
    assert determinant(m) == U.x(1) - U.x(2)


def test_determinant_repeated_row_is_zero():
    row = [U.x(1), U.y(2) + 1]
    assert determinant([row, list(row)]).is_zero


def test_determinant_alternating_random():
    rng = random.Random(6)
    for _ in range(100):
        m = [[random_polynomial(U, rng, max_terms=3, max_exp=2) for _ in range(3)] for _ in range(3)]
        d = determinant(m)
        a, b = rng.sample(range(3), 2)
        swapped = list(m)
        swapped[a], swapped[b] = m[b], m[a]
        assert determinant(swapped) == -d
        dup = [m[0], m[0], m[2]]
        assert determinant(dup).is_zero


def test_determinant_multilinear_in_a_row():
    rng = random.Random(7)
    for _ in range(25):
        m = [[random_polynomial(U, rng, max_terms=2, max_exp=2) for _ in range(3)] for _ in range(3)]
        extra = [random_polynomial(U, rng, max_terms=2, max_exp=2) for _ in range(3)]
        m_sum = [list(m[0]), [a + b for a, b in zip(m[1], extra)], list(m[2])]
        m_extra = [list(m[0]), extra, list(m[2])]
        assert determinant(m_sum) == determinant(m) + determinant(m_extra)


def test_determinant_non_square_rejected():
    with pytest.raises(ValueError):
        determinant([[U.x(1), U.x(2)]])


# -- helpers, rendering, wire formats -------------------------------------------------


def test_poly_sum_prod():
    ps = rng_polys(8, 10)
    assert poly_sum(U, ps) == sum(ps, U.zero())
    assert poly_prod(U, [U.x(1), U.x(2), U.zero(), U.x(3)]).is_zero


def test_str_rendering():
    assert str(U.zero()) == "0"
    assert str(U.one()) == "1"
    assert str(-U.one()) == "-1"
    p = U.beta() * U.x(1) * U.y(1) + U.x(1) + U.y(1)
    assert str(p) == "b*x1*y1 + x1 + y1"
    assert str(U.x(2) - U.x(1) ** 2) == "-x1^2 + x2"


def test_latex_rendering():
    p = U.beta() ** 2 * U.x(1) - 2 * U.y(3)
    assert p.to_latex() == r"\beta^{2} x_{1} - 2 y_{3}"


def test_json_round_trip_and_order():
    p = U.circle_plus(1, 1) * U.circle_plus(2, 2) - 7
    obj = p.to_json_obj()
    # canonical order: strictly decreasing in (degree, lex) reading
    keys = [U.pack(t["exps"]) for t in obj["terms"]]
    assert keys == sorted(keys, reverse=True)
    assert all(isinstance(t["coeff"], str) for t in obj["terms"])
    assert from_json_obj(json.loads(json.dumps(obj))) == p


def test_json_universe_embedded():
    obj = U.x(1).to_json_obj()
    assert obj["universe"] == {"n_x": 3, "n_y": 4}


def test_swap_and_divided_difference():
    p = U.x(1) ** 2 * U.y(1)
    assert p.swap_x(1, 2) == U.x(2) ** 2 * U.y(1)
    # (x1^2 - x2^2)/(x1 - x2) termwise
    f = U.x(1) ** 2
    assert f.divided_difference(1) == U.x(1) + U.x(2)
    # dual route: termwise result equals the definitional long division
    rng = random.Random(9)
    for _ in range(25):
        g = random_polynomial(U, rng)
        anti = g - g.swap_x(1, 2)
        assert g.divided_difference(1) == exact_div(anti, U.x(1) - U.x(2))


def test_rational_point_distinct_x():
    rng = random.Random(10)
    for _ in range(50):
        pt = random_rational_point(U, rng)
        assert len(set(pt.xs)) == len(pt.xs)
