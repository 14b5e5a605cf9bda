"""Standardization, containment, separability, parabolic factorization,
and the minimality criteria."""

import random
from itertools import chain, combinations

import pytest

from bweyl.catalog import ST_FIBER_2413, ST_FIBER_3142
from bweyl.patterns import (
    PATTERN_SETS,
    SEPARABLE_FORBIDDEN,
    contains_pattern,
    inverse_minimality_criterion,
    is_doubly_minimal,
    is_minimal_nonseparable_definitional,
    is_minimal_nonseparable_fast,
    is_separable,
    parabolic_factor,
    st,
    sts,
)
from bweyl.signed_perm import (
    all_windows,
    compose,
    identity,
    inverse,
    left_mul_simple,
    length,
    longest_element,
)


def subsets(ns):
    return chain.from_iterable(combinations(ns, k) for k in range(len(ns) + 1))


# ------------------------------------------------------------ standardization


def test_st_named_values():
    assert st((2, -4, 3, -1)) == (3, 1, 4, 2)
    assert st((5, 9, 7)) == (1, 3, 2)
    assert st((1, -2)) == (2, 1)


def test_sts_named_values():
    assert sts((-5, 2)) == (-2, 1)
    assert sts((2, -4, 3, -1)) == (2, -4, 3, -1)
    for w in all_windows(3):
        assert sts(w) == w


def test_standardization_rejections():
    with pytest.raises(ValueError):
        st((1, 1))
    with pytest.raises(ValueError):
        st((0, 2))
    with pytest.raises(ValueError):
        sts((2, -2))
    with pytest.raises(ValueError):
        sts((0,))


# ----------------------------------------------------------------- containment


def test_contains_pattern_named_values():
    assert contains_pattern((-2, 3, 4, 5, 1), (-2, 1))
    assert not contains_pattern((1, 2, 3, 4), (2, 1))
    w = (3, -1, 4, 2)
    assert contains_pattern(w, w)
    assert not contains_pattern((2, 1), (3, 1, 4, 2))  # pattern longer than window


# ----------------------------------------------------------------- separability


def test_separable_rank_two_classification():
    expected = {(1, 2), (-1, 2), (2, 1), (1, -2), (-2, -1), (-1, -2)}
    assert {w for w in all_windows(2) if is_separable(w)} == expected


def test_forbidden_patterns_are_not_separable():
    for p in SEPARABLE_FORBIDDEN:
        assert not is_separable(p)
    assert is_separable(identity(5))
    assert is_separable(longest_element(5))


def test_standardization_fibers_match_catalog():
    assert {w for w in all_windows(4) if st(w) == (3, 1, 4, 2)} == ST_FIBER_3142
    assert {w for w in all_windows(4) if st(w) == (2, 4, 1, 3)} == ST_FIBER_2413
    assert len(ST_FIBER_3142) == len(ST_FIBER_2413) == 16


def test_separability_closed_under_inverse_and_longest_multiplication():
    for n in (1, 2, 3, 4):
        w0 = longest_element(n)
        for w in all_windows(n):
            sep = is_separable(w)
            assert sep == is_separable(inverse(w))
            assert sep == is_separable(compose(w0, w))
            assert sep == is_separable(compose(w, w0))


# ------------------------------------------------------- parabolic factorization


def test_parabolic_factor_named_values():
    q, s = parabolic_factor((-2, 3, 4, 5, 1), {4})
    assert q == (2, 3, 4, 5, 1)
    assert s == (-1, 2, 3, 4, 5)
    w = (3, 1, 4, 2)
    assert parabolic_factor(w, ()) == (identity(4), w)
    with pytest.raises(ValueError):
        parabolic_factor(w, {4})


def test_parabolic_factor_reconstructs_and_adds_lengths():
    for w in all_windows(3):
        for removed in subsets(range(3)):
            q, s = parabolic_factor(w, removed)
            assert compose(q, s) == w
            assert length(w) == length(q) + length(s)


def test_parabolic_factor_sampled_rank_five():
    rng = random.Random(515)
    pool = list(all_windows(4))
    for _ in range(60):
        w = rng.choice(pool)
        removed = tuple(i for i in range(4) if rng.random() < 0.5)
        q, s = parabolic_factor(w, removed)
        assert compose(q, s) == w
        assert length(w) == length(q) + length(s)
        # the quotient factor is its own quotient, the subgroup factor its own subgroup
        assert parabolic_factor(q, removed)[0] == q
        assert parabolic_factor(s, removed)[1] == s


def test_subgroup_factor_is_left_generator_multiple_for_tail_shape():
    # dropping the top generator from w ending (..., -n at inner place, n-1):
    # the subgroup factor equals s_{n-1} * w
    w = (-2, -3, -5, -1, 4)
    assert parabolic_factor(w, {4})[1] == left_mul_simple(4, w)


# ------------------------------------------------------------------ minimality


def test_minimal_nonseparable_named_values():
    assert is_minimal_nonseparable_definitional((-2, 3, 4, 5, 1))
    assert is_minimal_nonseparable_fast((-2, 3, 4, 5, 1))
    assert not is_minimal_nonseparable_definitional((5, -1, 2, 3, 4))
    assert not is_minimal_nonseparable_definitional(identity(3))
    assert is_minimal_nonseparable_fast((-2, 1))
    assert not is_minimal_nonseparable_fast(identity(1))


def test_minimality_fast_equals_definitional_small_ranks():
    for n in (1, 2, 3, 4):
        for w in all_windows(n):
            assert is_minimal_nonseparable_fast(w) == (
                is_minimal_nonseparable_definitional(w)
            ), w


def test_inverse_minimality_criterion_contract():
    assert not inverse_minimality_criterion((-2, 3, 4, 5, 1))
    with pytest.raises(ValueError):
        inverse_minimality_criterion(identity(4))
    for n in (2, 3, 4):
        for w in all_windows(n):
            if is_minimal_nonseparable_fast(w):
                assert inverse_minimality_criterion(w) == (
                    is_minimal_nonseparable_fast(inverse(w))
                ), w


def test_minimal_nonseparable_has_separable_shadows():
    # the unsigned standardization and the one-shorter signed prefix
    for n in (2, 3, 4, 5):
        for w in all_windows(n):
            if is_minimal_nonseparable_fast(w):
                assert is_separable(st(w))
                if n > 1:
                    assert is_separable(sts(w[:-1]))


def test_doubly_minimal_forces_top_entry_placement():
    for n in (2, 3, 4, 5):
        for w in all_windows(n):
            if is_doubly_minimal(w):
                assert abs(w[-1]) == n - 1 or abs(w[-2]) == n, w


def test_longest_multiplication_preserves_minimality():
    for n in (2, 3, 4):
        w0 = longest_element(n)
        for w in all_windows(n):
            if is_minimal_nonseparable_fast(w):
                assert is_minimal_nonseparable_fast(compose(w0, w))
                assert is_minimal_nonseparable_fast(compose(w, w0))
            if not is_separable(w):
                assert not is_separable(compose(w0, w))
                assert not is_separable(compose(w, w0))


def test_pattern_set_registry():
    assert set(PATTERN_SETS) == {
        "sep-forbidden-6",
        "minnonsep-quad-pos",
        "minnonsep-quad-neg",
        "inverse-quad-pos",
        "inverse-quad-neg",
    }
    assert PATTERN_SETS["sep-forbidden-6"].members == SEPARABLE_FORBIDDEN
    for ps in PATTERN_SETS.values():
        assert len(set(ps.members)) == len(ps.members)
