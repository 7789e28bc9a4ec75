from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bgsat.errors import InexactDivision, NotPalindromic
from bgsat.laurent import (
    LaurentPoly,
    ONE,
    T,
    add,
    mul,
    render,
    substitute_power,
    symmetrize,
    top_degree,
)

polys = st.dictionaries(st.integers(-20, 20), st.integers(-50, 50), max_size=8).map(LaurentPoly)
POINTS = [Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7)]

TREFOIL = LaurentPoly({-1: 1, 0: -1, 1: 1})


def schoolbook(f, g):
    """Dense-list product used as an independent check."""
    if f.is_zero() or g.is_zero():
        return LaurentPoly()
    flo, glo = f.min_degree(), g.min_degree()
    a = [f[e] for e in range(flo, f.max_degree() + 1)]
    b = [g[e] for e in range(glo, g.max_degree() + 1)]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return LaurentPoly.from_list(out, flo + glo)


def test_basic_products():
    assert mul(LaurentPoly(), T + 1).is_zero()
    assert mul(T - 1, T + 1) == T ** 2 - 1
    assert mul(TREFOIL, TREFOIL) == LaurentPoly({2: 1, 1: -2, 0: 3, -1: -2, -2: 1})
    assert mul(TREFOIL, TREFOIL) == schoolbook(TREFOIL, TREFOIL)


def test_no_zero_coefficients_stored():
    f = (T + 1) - T
    assert f.coeffs == {0: 1}
    assert LaurentPoly({3: 0}).is_zero()
    assert add(T, -T).coeffs == {}


def test_substitute_power():
    assert substitute_power(TREFOIL, 1) == TREFOIL
    assert substitute_power(TREFOIL, 5) == LaurentPoly({5: 1, 0: -1, -5: 1})
    assert substitute_power(LaurentPoly(), 3).is_zero()


def test_symmetrize():
    assert symmetrize(LaurentPoly({0: 1, 1: -1, 2: 1})) == TREFOIL
    assert symmetrize(LaurentPoly.constant(7)) == 7
    assert symmetrize(-LaurentPoly({0: 1, 1: -1, 2: 1}).shift(4)) == TREFOIL
    with pytest.raises(NotPalindromic):
        symmetrize(LaurentPoly({3: -1, 2: 1}))
    with pytest.raises(NotPalindromic):
        symmetrize(T - T ** -1)
    with pytest.raises(NotPalindromic):
        symmetrize(LaurentPoly())


def test_top_degree():
    assert top_degree(TREFOIL) == 1
    assert top_degree(LaurentPoly.constant(4)) == 0
    assert top_degree(LaurentPoly({5: 1, 0: -1, -5: 1})) == 5
    with pytest.raises(ValueError):
        top_degree(LaurentPoly())


def test_render():
    assert render(TREFOIL) == "T^-1 - 1 + T"
    assert render(mul(TREFOIL, TREFOIL)) == "T^-2 - 2*T^-1 + 3 - 2*T + T^2"
    assert render(LaurentPoly()) == "0"
    assert render(-T ** 3) == "-T^3"


def test_json_round_trip_and_big_coefficients():
    f = LaurentPoly({-3: 2 ** 80, 4: -1})
    data = f.to_json()
    assert data == {"-3": str(2 ** 80), "4": "-1"}
    assert LaurentPoly.from_json(data) == f


def test_exact_division():
    num = (T ** 6 - 1) * (T - 1)
    den = (T ** 2 - 1) * (T ** 3 - 1)
    assert num.divide_exact(den) == LaurentPoly({0: 1, 1: -1, 2: 1})
    with pytest.raises(InexactDivision):
        (T ** 2 + 1).divide_exact(T - 1)
    with pytest.raises(InexactDivision):
        (2 * T + 1).divide_exact(3 * T + 1)


def test_evaluation_is_exact():
    assert TREFOIL(1) == 1
    assert TREFOIL(2) == Fraction(3, 2)


@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + g == g + f
    assert f * g == schoolbook(f, g)
    for x in POINTS:
        assert (f * g)(x) == f(x) * g(x)


@given(polys, polys, st.integers(1, 6))
def test_substitution_is_ring_map(f, g, w):
    assert substitute_power(f * g, w) == substitute_power(f, w) * substitute_power(g, w)
    assert substitute_power(f + g, w) == substitute_power(f, w) + substitute_power(g, w)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6), st.integers(-10, 10), st.sampled_from([1, -1]))
def test_symmetrize_idempotent(half, shift, unit):
    if half[-1] == 0:
        half[-1] = 1
    # palindrome c_k ... c_1 c_0 c_1 ... c_k, then an arbitrary unit multiple
    coeffs = list(reversed(half)) + half[1:]
    f = LaurentPoly.from_list(coeffs, shift) * unit
    g = symmetrize(f)
    assert symmetrize(g) == g
    assert g == g.reflect()
    assert g[g.max_degree()] > 0


@given(polys, polys)
def test_divide_exact_inverts_mul(f, g):
    if g.is_zero():
        return
    assert (f * g).divide_exact(g) == f
    assert ONE.divide_exact(ONE) == ONE
