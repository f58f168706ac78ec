import itertools

import pytest
from hypothesis import given, strategies as st

from schubertmult.combinatorics import (
    Permutation, bruhat_geq, compose, contains_pattern, enumerate_perms, identity,
    inverse, is_pattern_smooth, length, longest, make_permutation, rank_matrix,
)


def P(word):
    return Permutation.from_word(word)


def test_make_permutation():
    w = make_permutation([2, 1, 4, 3])
    assert w.n == 4 and w.word == "2143"
    assert make_permutation([1]) == identity(1)


@pytest.mark.parametrize("bad", [[1, 1, 3], [0, 1, 2], [1, 2, 4], []])
def test_make_permutation_rejects_non_bijections(bad):
    with pytest.raises(ValueError):
        make_permutation(bad)


def test_word_formats():
    assert P("2,1,4,3") == P("2143")
    big = make_permutation(range(10, 0, -1))
    assert big.word == "10,9,8,7,6,5,4,3,2,1"
    assert Permutation.from_word(big.word) == big
    with pytest.raises(ValueError):
        P("21x3")


def test_length():
    assert length(P("2143")) == 2
    for n in range(1, 7):
        assert length(identity(n)) == 0
        assert length(longest(n)) == n * (n - 1) // 2


def test_inverse():
    assert inverse(P("2143")) == P("2143")
    assert inverse(P("23451")) == P("51234")
    assert inverse(identity(5)) == identity(5)
    for w in enumerate_perms(4):
        assert compose(inverse(w), w) == identity(4)


def test_rank_matrix_examples():
    assert rank_matrix(P("2143")).tolist() == [[0, 1, 1, 1], [1, 2, 2, 2], [1, 2, 2, 3], [1, 2, 3, 4]]
    for n in range(1, 6):
        r = rank_matrix(identity(n))
        assert all(r[i, j] == min(i, j) for i in range(1, n + 1) for j in range(1, n + 1))
        r = rank_matrix(longest(n))
        assert all(r[i, j] == max(0, i + j - n) for i in range(1, n + 1) for j in range(1, n + 1))


def test_rank_matrix_definition_literal():
    # r_ij = #{k <= j : w^{-1}(k) <= i}
    for w in enumerate_perms(4):
        winv = inverse(w)
        r = rank_matrix(w)
        for i in range(1, 5):
            for j in range(1, 5):
                assert r[i, j] == sum(1 for k in range(1, j + 1) if winv(k) <= i)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rank_matrix_invariants(n):
    for w in enumerate_perms(n):
        r = rank_matrix(w)
        assert r[n, n] == n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert 0 <= r[i, j] <= min(i, j)
                assert r[i, j] - r[i - 1, j] in (0, 1)
                assert r[i, j] - r[i, j - 1] in (0, 1)
                step = r[i, j] - r[i - 1, j] - r[i, j - 1] + r[i - 1, j - 1]
                assert step == (1 if w(i) == j else 0)
        assert r.permutation() == w


def _covering_closure(n):
    """Bruhat order from covers v = t.w with l(v) = l(w) + 1 (t swaps two values)."""
    perms = list(enumerate_perms(n))
    above = {w: {w} for w in perms}
    by_length = sorted(perms, key=length, reverse=True)
    for w in by_length:
        for a, b in itertools.combinations(range(1, n + 1), 2):
            v = Permutation(tuple(b if x == a else a if x == b else x for x in w.image))
            if length(v) == length(w) + 1:
                above[w] |= above[v]
    return above


def test_bruhat_matches_covering_closure():
    for n in (1, 2, 3, 4):
        above = _covering_closure(n)
        for w in enumerate_perms(n):
            for v in enumerate_perms(n):
                assert bruhat_geq(v, w) == (v in above[w]), (v, w)


def test_bruhat_examples():
    assert all(bruhat_geq(longest(4), w) for w in enumerate_perms(4))
    assert not bruhat_geq(identity(4), P("2143"))
    with pytest.raises(ValueError):
        bruhat_geq(identity(3), identity(4))


def test_bruhat_is_partial_order_and_graded():
    perms = list(enumerate_perms(4))
    geq = {(v, w): bruhat_geq(v, w) for v in perms for w in perms}
    for v in perms:
        assert geq[v, v]
        for w in perms:
            if geq[v, w] and geq[w, v]:
                assert v == w
            if geq[v, w]:
                assert length(v) >= length(w)
                if length(v) == length(w):
                    assert v == w
                for u in perms:
                    if geq[w, u]:
                        assert geq[v, u]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_length_complement(n):
    w0 = longest(n)
    for w in enumerate_perms(n):
        assert length(w) + length(compose(w, w0)) == n * (n - 1) // 2


def _contains_brute(w, p):
    k = p.n
    for idx in itertools.combinations(range(w.n), k):
        vals = [w.image[i] for i in idx]
        if all((vals[a] < vals[b]) == (p.image[a] < p.image[b])
               for a in range(k) for b in range(k)):
            return True
    return False


def test_contains_pattern_examples():
    assert contains_pattern(P("14325"), P("1324"))
    assert contains_pattern(P("2143"), P("2143"))
    assert not contains_pattern(identity(5), P("2143"))
    assert not contains_pattern(P("21"), P("213"))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_contains_pattern_against_subset_enumeration(n):
    for p in (P("1324"), P("2143")):
        for w in enumerate_perms(n):
            assert contains_pattern(w, p) == _contains_brute(w, p)


@given(st.permutations(list(range(1, 8))), st.permutations(list(range(1, 4))))
def test_contains_pattern_random(image, pattern):
    w, p = make_permutation(image), make_permutation(pattern)
    assert contains_pattern(w, p) == _contains_brute(w, p)


def test_is_pattern_smooth():
    assert not is_pattern_smooth(P("2143"))
    assert is_pattern_smooth(P("54321"))
    assert is_pattern_smooth(identity(6))
    assert [w.word for w in enumerate_perms(4) if not is_pattern_smooth(w)] == ["1324", "2143"]


def test_enumerate():
    assert [w.word for w in enumerate_perms(1)] == ["1"]
    assert [w.word for w in enumerate_perms(3)] == ["123", "132", "213", "231", "312", "321"]
    words = [w.word for w in enumerate_perms(5)]
    assert len(words) == 120 == len(set(words)) and words == sorted(words)
    with pytest.raises(ValueError):
        list(enumerate_perms(0))
