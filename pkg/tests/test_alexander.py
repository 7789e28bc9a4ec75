from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from bgsat.alexander import (
    alexander_of_closure,
    burau_generator,
    determinant,
    fibered_genus_from_alexander,
    identity_matrix,
    matmul,
    reduced_burau,
    satellite_alexander,
    torus_alexander,
)
from bgsat.braid import BraidWord, descending
from bgsat.errors import PreconditionError
from bgsat.laurent import LaurentPoly, ONE, T, top_degree
from bgsat.pattern import BergeGabaiPattern, braid_word, construction_is_knot, pattern_genus

TREFOIL = LaurentPoly({-1: 1, 0: -1, 1: 1})


def naive_burau(word):
    """Full matrix product of generator images."""
    M = identity_matrix(word.width - 1)
    for i, sign in word.generators():
        M = matmul(M, burau_generator(word.width, i, sign))
    return M


def cofactor_det(M):
    n = len(M)
    if n == 0:
        return ONE
    if n == 1:
        return M[0][0]
    total = LaurentPoly()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_burau_small():
    assert reduced_burau(BraidWord(3)) == identity_matrix(2)
    assert reduced_burau(BraidWord(2, (1,))) == [[-T]]
    assert reduced_burau(BraidWord(2, (1, 1, 1))) == [[-T ** 3]]


def test_generator_inverse():
    for n in range(2, 6):
        for i in range(1, n):
            prod = matmul(burau_generator(n, i, 1), burau_generator(n, i, -1))
            assert prod == identity_matrix(n - 1)


def test_braid_relations():
    for n in range(3, 6):
        for i in range(1, n - 1):
            u = BraidWord(n, (i, i + 1, i))
            v = BraidWord(n, (i + 1, i, i + 1))
            assert reduced_burau(u) == reduced_burau(v)


def test_alexander_small():
    assert alexander_of_closure(BraidWord(2, (1,))) == ONE
    assert alexander_of_closure(BraidWord(2, (1, 1, 1))) == TREFOIL
    d = alexander_of_closure(braid_word(BergeGabaiPattern(5, 2, 3)))
    assert d == d.reflect() and top_degree(d) == 5
    with pytest.raises(PreconditionError):
        alexander_of_closure(BraidWord(2, (1, 1)))


def test_torus_closed_form():
    assert torus_alexander(2, 3) == TREFOIL
    assert torus_alexander(2, 5) == LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    assert top_degree(torus_alexander(3, 4)) == 3
    for args, code in [((1, 3), "torus_range"), ((2, 4), "torus_not_coprime")]:
        with pytest.raises(PreconditionError) as e:
            torus_alexander(*args)
        assert e.value.code == code


def test_satellite_examples():
    dP = alexander_of_closure(braid_word(BergeGabaiPattern(5, 2, 3)))
    assert satellite_alexander(dP, ONE, 5) == dP
    sat = satellite_alexander(dP, TREFOIL, 5)
    assert top_degree(sat) == 10
    assert fibered_genus_from_alexander(sat) == 10
    assert satellite_alexander(TREFOIL, TREFOIL, 1) == TREFOIL * TREFOIL
    assert fibered_genus_from_alexander(TREFOIL) == 1
    assert fibered_genus_from_alexander(ONE) == 0


def test_pretzel_polynomial_from_two_braids():
    # the (-2,3,7) pretzel knot is the closure of s1 s2^2 s1^2 s2^7, and also BG(5,2,3)
    expected = LaurentPoly({5: 1, 4: -1, 2: 1, 1: -1, 0: 1, -1: -1, -2: 1, -4: -1, -5: 1})
    word = BraidWord(3, (1, 2, 2, 1, 1) + (2,) * 7)
    assert alexander_of_closure(word) == expected
    assert alexander_of_closure(braid_word(BergeGabaiPattern(5, 2, 3))) == expected


@pytest.mark.parametrize("p", range(2, 6))
@pytest.mark.parametrize("q", range(2, 8))
def test_closure_matches_torus_formula(p, q):
    if gcd(p, q) != 1:
        return
    word = BraidWord(p, descending(p, p - 1).letters * q)
    assert alexander_of_closure(word) == torus_alexander(p, q)
    assert alexander_of_closure(BraidWord(q, descending(q, q - 1).letters * p)) == torus_alexander(p, q)


POSITIVE = [(w, b, t) for w in range(2, 7) for b in range(w - 1) for t in range(1, 9) if construction_is_knot(w, b, t)]


@pytest.mark.parametrize("w, b, t", POSITIVE)
def test_pattern_alexander_degree_and_normalization(w, b, t):
    d = alexander_of_closure(braid_word(BergeGabaiPattern(w, b, t)))
    assert d(1) in (1, -1)
    assert d == d.reflect()
    assert top_degree(d) == pattern_genus(BergeGabaiPattern(w, b, t))


@pytest.mark.parametrize("w, b, t", [(5, 2, -2), (4, 1, -3), (3, 0, -1), (7, 2, -4)])
def test_negative_form_is_same_braid(w, b, t):
    literal = descending(w, b)
    inv_full = descending(w, w - 1).inverse()
    for _ in range(-t):
        literal = literal * inv_full
    assert reduced_burau(braid_word(BergeGabaiPattern(w, b, t))) == reduced_burau(literal)


coherent_words = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=14).map(
        lambda xs: BraidWord(n, tuple(xs))
    )
)


@settings(max_examples=60)
@given(coherent_words)
def test_fast_burau_matches_naive(word):
    assert reduced_burau(word) == naive_burau(word)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=3).map(LaurentPoly),
             min_size=n, max_size=n),
    min_size=n, max_size=n)))
def test_bareiss_matches_cofactor(M):
    assert determinant(M) == cofactor_det(M)
