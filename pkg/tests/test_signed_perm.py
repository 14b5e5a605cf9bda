"""Core window arithmetic, checked against a signed permutation-matrix oracle."""

import random

import pytest

from bweyl.signed_perm import (
    all_windows,
    compose,
    format_window,
    group_order,
    identity,
    inverse,
    is_window,
    left_descents,
    left_mul_simple,
    length,
    longest_element,
    parse_window,
    simple_reflection,
    statistic_sets,
    validate_window,
)


def matrix(w):
    """Column j carries sign(w_j) in row |w_j|; the action on basis vectors."""
    n = len(w)
    m = [[0] * n for _ in range(n)]
    for j, x in enumerate(w):
        m[abs(x) - 1][j] = 1 if x > 0 else -1
    return m


def matmul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def transpose(a):
    return [list(col) for col in zip(*a)]


# ---------------------------------------------------------------- validation


def test_window_validation():
    assert is_window((-2, 3, 4, 5, 1))
    assert not is_window((0, 1))
    assert not is_window((1, 1))
    assert not is_window((2, 3))  # gap: no entry of magnitude 1
    assert not is_window(())
    with pytest.raises(ValueError):
        validate_window((1, -1))


def test_parse_and_format_round_trip():
    w = parse_window("-2 3 4 5 1")
    assert w == (-2, 3, 4, 5, 1)
    assert format_window(w) == "-2 3 4 5 1"
    for bad in ("", "0 1", "1 2 2", "1 3", "a b"):
        with pytest.raises(ValueError):
            parse_window(bad)


# -------------------------------------------------------------- constructors


def test_identity_and_longest():
    assert identity(3) == (1, 2, 3)
    assert identity(1) == (1,)
    assert length(identity(5)) == 0
    assert longest_element(2) == (-1, -2)
    assert length(longest_element(3)) == 9
    w0 = longest_element(4)
    assert compose(w0, w0) == identity(4)
    with pytest.raises(ValueError):
        identity(0)
    with pytest.raises(ValueError):
        longest_element(-1)


def test_simple_reflections():
    assert simple_reflection(2, 0) == (-1, 2)
    assert simple_reflection(2, 1) == (2, 1)
    assert simple_reflection(5, 3) == (1, 2, 4, 3, 5)
    assert all(length(simple_reflection(4, i)) == 1 for i in range(4))
    with pytest.raises(ValueError):
        simple_reflection(3, 3)
    with pytest.raises(ValueError):
        simple_reflection(3, -1)


def test_group_order_and_enumeration():
    for n, size in ((1, 2), (2, 8), (3, 48), (4, 384)):
        elems = list(all_windows(n))
        assert group_order(n) == size
        assert len(elems) == size
        assert len(set(elems)) == size
        assert all(is_window(w) for w in elems)


# -------------------------------------------------------------- composition


def test_compose_named_values():
    assert compose((2, 1), (-1, 2)) == (-2, 1)
    assert compose(longest_element(2), (2, 1)) == (-2, -1)
    w = (3, -1, 4, 2)
    assert compose(w, identity(4)) == w
    assert compose(identity(4), w) == w
    with pytest.raises(ValueError):
        compose((1, 2), (1, 2, 3))


def test_compose_matches_matrix_product_exhaustively():
    for n in (2, 3):
        elems = list(all_windows(n))
        for u in elems:
            mu = matrix(u)
            for v in elems:
                assert matrix(compose(u, v)) == matmul(mu, matrix(v))


def test_inverse_named_values():
    assert inverse((-2, 3, 4, 5, 1)) == (5, -1, 2, 3, 4)
    assert inverse(identity(4)) == identity(4)
    assert inverse((3, -1, 4, 2)) == (-2, 4, 1, 3)


def test_inverse_matches_matrix_transpose():
    for n in (2, 3):
        for w in all_windows(n):
            assert matrix(inverse(w)) == transpose(matrix(w))
            assert compose(w, inverse(w)) == identity(n)


def test_compose_associative_on_sampled_triples():
    rng = random.Random(8241)
    pool = list(all_windows(4)) + [
        tuple(rng.choice((1, -1)) * v for v in rng.sample(range(1, 6), 5))
        for _ in range(40)
    ]
    for _ in range(200):
        u, v, w = (rng.choice([p for p in pool if len(p) == k]) for k in (4, 4, 4))
        assert compose(compose(u, v), w) == compose(u, compose(v, w))


# ---------------------------------------------------------------- statistics


def test_statistic_sets_named_values():
    s = statistic_sets((1, -2))
    assert (set(s.neg), set(s.inv), set(s.nsp)) == ({2}, {(1, 2)}, {(1, 2)})
    s = statistic_sets((-2, -1))
    assert (set(s.neg), set(s.inv), set(s.nsp)) == ({1, 2}, set(), {(1, 2)})
    s = statistic_sets(identity(6))
    assert s.neg == s.inv == s.nsp == frozenset()


def test_length_named_values():
    assert length((1, -2)) == 3
    assert length((2, 3, 5, 1, -4)) == 11
    for n in (1, 2, 3, 4, 5):
        assert length(longest_element(n)) == n * n


def test_length_formulas_agree_exhaustively():
    # #neg + #inv + #nsp against the inversion-minus-negative-sum form
    for n in (1, 2, 3, 4, 5):
        for w in all_windows(n):
            neg, inv, nsp = statistic_sets(w)
            assert length(w) == len(neg) + len(inv) + len(nsp)


def test_left_multiplication_changes_length_by_one():
    for n in (1, 2, 3, 4):
        for w in all_windows(n):
            for i in range(n):
                assert abs(length(left_mul_simple(i, w)) - length(w)) == 1


def test_left_descents_match_length_drops():
    for n in (1, 2, 3, 4):
        for w in all_windows(n):
            drops = {
                i for i in range(n)
                if length(left_mul_simple(i, w)) == length(w) - 1
            }
            assert set(left_descents(w)) == drops


def test_left_mul_simple_matches_compose():
    for n in (2, 3):
        for w in all_windows(n):
            for i in range(n):
                assert left_mul_simple(i, w) == compose(simple_reflection(n, i), w)


def test_inverse_preserves_length_and_maps_negatives():
    for n in (1, 2, 3, 4):
        for w in all_windows(n):
            wi = inverse(w)
            assert length(wi) == length(w)
            expected = frozenset(abs(w[i - 1]) for i in statistic_sets(w).neg)
            assert statistic_sets(wi).neg == expected
