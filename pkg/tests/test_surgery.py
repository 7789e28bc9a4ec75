from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from bgsat.errors import PreconditionError
from bgsat.pattern import BergeGabaiPattern, exceptional_slope_candidates, validate
from bgsat.surgery import (
    FillingHomology,
    Slope,
    filling_homology,
    filling_kernel_generator,
    in_filling_kernel,
    presented_group,
    relation_matrix,
    satellite_surgery_correspondence,
    smith_invariants,
    snf_homology_oracle,
)


def test_slope_parse():
    assert Slope.parse("7") == Slope(7)
    assert Slope.parse(" 1 / 2 ") == Slope(1, 2)
    assert Slope.parse("-3/4") == Slope(-3, 4)
    assert Slope.parse("2/4") == Slope(1, 2)
    for bad in ["1/0", "1/-2", "x", "", "1/2/3"]:
        with pytest.raises(ValueError):
            Slope.parse(bad)
    with pytest.raises(ValueError):
        Slope(2, 4)
    assert str(Slope(17, 25)) == "17/25" and str(Slope(3)) == "3"


def test_homology_examples():
    assert filling_homology(5, Slope(17)) == FillingHomology(1, 1)
    assert filling_homology(5, Slope(10, 3)) == FillingHomology(1, 5)
    assert str(filling_homology(5, Slope(10, 3))) == "Z + Z/5"
    assert filling_homology(1, Slope(-9, 4)) == FillingHomology(1, 1)
    assert snf_homology_oracle(5, Slope(17)) == FillingHomology(1, 1)
    assert snf_homology_oracle(5, Slope(10, 3)) == FillingHomology(1, 5)
    assert snf_homology_oracle(3, Slope(0)) == FillingHomology(1, 3)


def test_kernel_examples():
    assert filling_kernel_generator(5, Slope(17)) == (17, 25)
    assert filling_kernel_generator(5, Slope(10, 3)) == (2, 15)
    assert filling_kernel_generator(2, Slope(1)) == (1, 4)
    with pytest.raises(PreconditionError):
        filling_kernel_generator(0, Slope(1))


def test_snf_known():
    assert smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_invariants([[0, 0], [0, 0]]) == []
    assert smith_invariants([[6, 4]]) == [2]
    assert presented_group(3, [[2, 0, 0], [0, 3, 0]]) == FillingHomology(1, 6)


def _det(M):
    return M[0][0] * M[1][1] - M[0][1] * M[1][0]


@pytest.mark.parametrize("w", range(1, 11))
def test_grid_matches_oracle(w):
    for p2 in range(1, 11):
        for p1 in range(-30, 31):
            if gcd(p1, p2) != 1:
                continue
            s = Slope(p1, p2)
            assert filling_homology(w, s) == snf_homology_oracle(w, s)
            m, l = filling_kernel_generator(w, s)
            assert in_filling_kernel(w, s, m, l)


@pytest.mark.parametrize("w, p1, p2", [(5, 17, 1), (5, 10, 3), (2, 4, 1), (6, 9, 2), (4, 0, 1), (3, -7, 5)])
def test_kernel_generator_generates(w, p1, p2):
    s = Slope(p1, p2)
    gen = filling_kernel_generator(w, s)
    kernel = [(m, l) for m in range(-60, 61) for l in range(-120, 121) if in_filling_kernel(w, s, m, l)]
    assert gen in kernel
    for m, l in kernel:
        # every kernel element is an integer multiple of the generator
        k = Fraction(m, gen[0]) if gen[0] else Fraction(l, gen[1])
        assert k.denominator == 1 and (m, l) == (k * gen[0], k * gen[1])


def test_snf_against_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form
    import random

    rng = random.Random(7)
    for _ in range(150):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-12, 12) for _ in range(n)] for _ in range(m)]
        S = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
        diag = [abs(int(S[i, i])) for i in range(min(m, n)) if S[i, i] != 0]
        assert smith_invariants(rows) == sorted(diag)


@given(st.lists(st.lists(st.integers(-20, 20), min_size=2, max_size=2), min_size=2, max_size=2))
def test_snf_two_by_two_invariants(M):
    d = smith_invariants(M)
    det = abs(_det(M))
    if det:
        assert len(d) == 2 and d[0] * d[1] == det
        assert d[0] == gcd(*(x for row in M for x in row))
        assert d[1] % d[0] == 0


def test_correspondence_examples():
    assert satellite_surgery_correspondence(BergeGabaiPattern(5, 2, 3), 17) == Slope(17, 25)
    assert satellite_surgery_correspondence(BergeGabaiPattern(5, 2, 8), 42) == Slope(42, 25)
    assert satellite_surgery_correspondence(BergeGabaiPattern(2, 0, 3), 7) == Slope(7, 4)
    with pytest.raises(PreconditionError) as e:
        satellite_surgery_correspondence(BergeGabaiPattern(5, 2, 3), 19)
    assert e.value.code == "not_candidate_slope"


@pytest.mark.parametrize("w, b, t", [(5, 2, 3), (5, 2, 8), (7, 2, 4), (3, 0, 4), (2, 0, 5), (6, 1, 4)])
def test_correspondence_slopes_reduced(w, b, t):
    P = validate(w, b, t)
    for p in exceptional_slope_candidates(P):
        s = satellite_surgery_correspondence(P, p)
        assert gcd(p, w) == 1 and (s.p1, s.p2) == (p, w * w)
        assert relation_matrix(w, Slope(p)) == [[w, p]]
