"""Exact polynomial arithmetic, interpolation, alternants, division."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tableaux.multipoly import (MultiPoly, SimplexSpec, bounded_exponents,
                                canonical_text, det_exact,
                                divide_exact_linear, exact_compositions,
                                falling_alternant, falling_alternant_at,
                                falling_factorial, ff_of_poly, ff_poly,
                                grlex_key, interpolate_on_simplex, multinomial,
                                power_alternant, top_layer_expansion)


def x(k, i):
    return MultiPoly.var(k, i)


def test_zero_terms_are_dropped():
    p = MultiPoly(2, {(1, 0): 1, (0, 1): 0})
    assert p.terms == {(1, 0): 1}
    assert bool(MultiPoly.zero(2)) is False


def test_validation_rejects_bad_exponents():
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MultiPoly(2, {(-1, 0): 1})
    with pytest.raises(ValueError):
        MultiPoly.var(2, 5)


def test_arithmetic_small():
    k = 2
    p = (x(k, 0) + x(k, 1)) ** 2
    assert p == x(k, 0) ** 2 + 2 * x(k, 0) * x(k, 1) + x(k, 1) ** 2
    assert p - p == 0
    assert p * 0 == MultiPoly.zero(k)
    assert (p * Fraction(1, 2)).coefficient((1, 1)) == 1


def test_canonical_text_golden():
    k = 2
    p = (x(k, 0) + x(k, 1)) ** 2
    assert canonical_text(p) == "1 * x1^2 x2^0 + 2 * x1^1 x2^1 + 1 * x1^0 x2^2"
    assert canonical_text(MultiPoly.zero(3)) == "0"


def test_degree_and_homogeneous():
    k = 2
    assert MultiPoly.zero(k).degree() == float("-inf")
    p = x(k, 0) ** 3 + x(k, 1)
    assert p.degree() == 3
    assert not p.is_homogeneous()
    assert p.leading_homogeneous() == x(k, 0) ** 3


def test_evaluate_exact():
    k = 3
    p = x(k, 0) * x(k, 1) ** 2 - 7
    assert p.evaluate((2, 3, 99)) == 2 * 9 - 7
    assert p.evaluate((Fraction(1, 2), 2, 0)) == 2 - 7


def test_substitute_swaps_variables():
    k = 2
    p = x(k, 0) ** 2 - x(k, 1)
    swapped = p.substitute([x(k, 1), x(k, 0)])
    assert swapped == x(k, 1) ** 2 - x(k, 0)


def test_falling_factorial_values():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(2, 4) == 0
    assert falling_factorial(-1, 2) == 2
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)


def test_ff_poly_expansion():
    # x(x-1)(x-2) = x^3 - 3x^2 + 2x
    p = ff_poly(1, 0, 3)
    assert p.terms == {(3,): 1, (2,): -3, (1,): 2}
    total = MultiPoly.var(2, 0) + MultiPoly.var(2, 1)
    q = ff_of_poly(total, 2)
    assert q.evaluate((2, 1)) == falling_factorial(3, 2)


def test_multinomial_matches_factorial_ratio():
    assert multinomial((2, 1, 1)) == 12
    assert multinomial(()) == 1
    assert multinomial((0, 5)) == 1
    with pytest.raises(ValueError):
        multinomial((-1, 2))


def test_composition_enumeration():
    assert list(exact_compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert sum(1 for _ in bounded_exponents(3, 4)) == 35  # C(7,3)


def test_grlex_order():
    assert grlex_key((1, 1)) < grlex_key((0, 3))
    assert grlex_key((0, 3)) < grlex_key((3, 0))


def test_interpolation_recovers_polynomial():
    spec = SimplexSpec.standard(2, 3)
    target = x(2, 0) ** 2 * x(2, 1) - 2 * x(2, 0) + 5
    values = {pt: target.evaluate(pt) for _, pt in spec.points()}
    assert interpolate_on_simplex(spec, values) == target


def test_interpolation_rejects_wrong_grid():
    spec = SimplexSpec.standard(2, 2)
    values = {pt: 0 for _, pt in spec.points()}
    values.pop((0, 0))
    with pytest.raises(ValueError):
        interpolate_on_simplex(spec, values)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 3), st.data())
def test_interpolation_round_trip(k, n, data):
    terms = {}
    for exps in bounded_exponents(k, n):
        coeff = data.draw(st.integers(-4, 4))
        if coeff:
            terms[exps] = coeff
    target = MultiPoly(k, terms)
    spec = SimplexSpec.standard(k, n)
    values = {pt: target.evaluate(pt) for _, pt in spec.points()}
    assert interpolate_on_simplex(spec, values) == target


def test_top_layer_expansion_round_trip():
    # prod ff(x_i, c_i) vanishes below the top layer by construction
    k = 2
    p = ff_poly(k, 0, 2) * ff_poly(k, 1, 1) + 3 * ff_poly(k, 0, 3)
    assert top_layer_expansion(p, 3) == p


def test_top_layer_expansion_rejects_nonvanishing():
    with pytest.raises(ValueError):
        top_layer_expansion(MultiPoly.one(2), 1)


def test_power_alternant_is_vandermonde_at_staircase():
    k = 3
    expected = MultiPoly.one(k)
    for i in range(k):
        for j in range(i + 1, k):
            expected = expected * (x(k, j) - x(k, i))
    assert power_alternant((0, 1, 2)) == expected


def test_falling_alternant_triangular_at_own_point():
    m = (1, 3, 4)
    # det(ff(m_i, m_j)) has zeros above the diagonal, so it is the product
    # of the diagonal falling factorials m_i!
    assert falling_alternant_at(m, m) == 1 * 6 * 24
    poly = falling_alternant(m)
    assert poly.evaluate(m) == falling_alternant_at(m, m)


def test_det_exact_values():
    assert det_exact([[1, 2], [3, 4]]) == -2
    assert det_exact([[1, 2], [2, 4]]) == 0
    assert det_exact([[Fraction(1, 2), 0], [7, 2]]) == 1


def test_divide_exact_linear_round_trip():
    k = 3
    q = x(k, 0) ** 2 + 2 * x(k, 1) * x(k, 2) - 5
    p = q * (x(k, 0) - x(k, 2))
    assert divide_exact_linear(p, 0, 2) == q


def test_divide_exact_linear_rejects_remainder():
    k = 2
    with pytest.raises(ArithmeticError):
        divide_exact_linear(x(k, 0) + 1, 0, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3), st.data())
def test_divide_exact_linear_random_round_trip(k, data):
    terms = {}
    for exps in bounded_exponents(k, 3):
        coeff = data.draw(st.integers(-3, 3))
        if coeff:
            terms[exps] = coeff
    q = MultiPoly(k, terms)
    a = data.draw(st.integers(0, k - 1))
    b = data.draw(st.integers(0, k - 1).filter(lambda v: v != a))
    assert divide_exact_linear(q * (x(k, a) - x(k, b)), a, b) == q
