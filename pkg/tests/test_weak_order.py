"""Order comparisons, ideal enumeration, rank polynomials, reduced words."""

import random
from itertools import product

import pytest

from bweyl.polynomials import Poly
from bweyl.signed_perm import (
    all_windows,
    compose,
    identity,
    inverse,
    length,
    longest_element,
    simple_reflection,
    statistic_sets,
)
from bweyl.weak_order import (
    Ideal,
    interval_right,
    iter_reduced_words,
    left_leq,
    lower_covers_left,
    lower_ideal_left,
    product_word,
    rank_polynomial,
    reduced_word_count,
    right_leq,
    upper_ideal_left,
)


# ------------------------------------------------------------------ comparisons


def test_left_leq_named_values():
    assert left_leq(identity(5), (-2, 3, 4, 5, 1))
    assert not left_leq((1, -2), (-2, -1))
    assert left_leq((-1, 2), (-2, -1))
    with pytest.raises(ValueError):
        left_leq((1, 2), (1, 2, 3))


def test_left_leq_matches_length_definition():
    # u <= w iff length(w) = length(u) + length(w * u^-1)
    for u in all_windows(3):
        lu = length(u)
        ui = inverse(u)
        for w in all_windows(3):
            expected = length(w) == lu + length(compose(w, ui))
            assert left_leq(u, w) == expected


def test_right_leq_named_values():
    for u in all_windows(2):
        assert right_leq(u, u)
    assert right_leq(simple_reflection(2, 0), (-2, -1))
    assert not right_leq((2, 1), (-1, 2))


def test_right_leq_matches_length_definition():
    for u in all_windows(3):
        lu = length(u)
        ui = inverse(u)
        for w in all_windows(3):
            expected = length(w) == lu + length(compose(ui, w))
            assert right_leq(u, w) == expected


# ----------------------------------------------------------------------- covers


def test_lower_covers():
    assert lower_covers_left(identity(4)) == frozenset()
    assert len(lower_covers_left(longest_element(2))) == 2
    assert lower_covers_left((-1, 2)) == frozenset({identity(2)})
    for w in all_windows(3):
        for c in lower_covers_left(w):
            assert length(c) == length(w) - 1
            assert left_leq(c, w)


# ----------------------------------------------------------------------- ideals


def _stats_cache(n):
    return {w: statistic_sets(w) for w in all_windows(n)}


def _filter_lower(w, cache):
    sw = cache[w]
    return frozenset(
        u for u, su in cache.items()
        if su.neg <= sw.neg and su.inv <= sw.inv and su.nsp <= sw.nsp
    )


def test_lower_ideal_matches_direct_filter_exhaustively():
    for n in (1, 2, 3, 4):
        cache = _stats_cache(n)
        for w in cache:
            assert lower_ideal_left(w).elements == _filter_lower(w, cache)


def test_lower_ideal_spot_checks_rank_five():
    rng = random.Random(55)
    cache = _stats_cache(5)
    for w in rng.sample(sorted(cache), 8):
        assert lower_ideal_left(w).elements == _filter_lower(w, cache)


def test_ideal_container_protocol():
    ideal = lower_ideal_left((-1, 2))
    assert ideal.kind == "lower-left"
    assert ideal.apex == (-1, 2)
    assert len(ideal) == 2
    assert identity(2) in ideal
    assert list(ideal) == sorted(ideal.elements)


def test_upper_ideal_named_values():
    n = 3
    assert upper_ideal_left(identity(n)).elements == frozenset(all_windows(n))
    assert upper_ideal_left(longest_element(n)).elements == frozenset(
        {longest_element(n)}
    )
    assert len(upper_ideal_left((-1, 2))) == 4


def test_upper_ideal_matches_direct_filter():
    cache = _stats_cache(3)
    for w in cache:
        sw = cache[w]
        expected = frozenset(
            u for u, su in cache.items()
            if sw.neg <= su.neg and sw.inv <= su.inv and sw.nsp <= su.nsp
        )
        assert upper_ideal_left(w).elements == expected


def test_interval_right_named_values():
    assert interval_right(identity(3)).elements == {identity(3)}
    assert len(interval_right(longest_element(2))) == 8
    assert interval_right((-1, 2)).elements == {identity(2), (-1, 2)}


def test_interval_right_matches_right_order_filter():
    for u in all_windows(3):
        expected = frozenset(x for x in all_windows(3) if right_leq(x, u))
        assert interval_right(u).elements == expected


def test_ideal_sizes_and_degrees():
    for w in all_windows(3):
        ideal = lower_ideal_left(w)
        assert len(ideal) <= 48
        poly = rank_polynomial(ideal)
        assert poly.degree == length(w)
        assert sum(poly.to_list()) == len(ideal)


# ------------------------------------------------------------- rank polynomials


def test_rank_polynomial_named_values():
    assert rank_polynomial(lower_ideal_left((-2, 3, 4, 5, 1))) == Poly(
        (1, 2, 2, 2, 1, 1)
    )
    assert rank_polynomial(lower_ideal_left((2, 3, 4, 5, -1))) == Poly(
        (1, 1, 1, 1, 1, 1)
    )
    assert rank_polynomial(lower_ideal_left(identity(4))) == Poly.one()
    assert rank_polynomial(lower_ideal_left(longest_element(2))) == Poly(
        (1, 2, 2, 2, 1)
    )


def test_upper_ideal_polynomial_graded_from_its_bottom():
    w0 = longest_element(2)
    assert rank_polynomial(upper_ideal_left(w0)) == Poly.one()
    assert rank_polynomial(upper_ideal_left(identity(2))) == Poly((1, 2, 2, 2, 1))


def test_rank_polynomial_reversal_under_inverse_translation():
    # x -> x * u^-1 maps the ideal below u onto the ideal below u^-1,
    # reversing ranks
    for u in all_windows(4):
        f = rank_polynomial(lower_ideal_left(u))
        g = rank_polynomial(lower_ideal_left(inverse(u)))
        assert f.reversed() == g


# --------------------------------------------------------------- reduced words


def brute_force_word_count(w):
    n, l = len(w), length(w)
    count = 0
    for word in product(range(n), repeat=l):
        if product_word(n, word) == w:
            count += 1
    return count


def test_reduced_words_named_values():
    assert reduced_word_count(identity(4)) == 1
    assert list(iter_reduced_words(identity(4))) == [()]
    assert reduced_word_count(longest_element(2)) == 2
    for n in (3, 4, 5):
        w = identity(n)[: n - 2] + (-n, n - 1)
        assert reduced_word_count(w) == 1


def test_reduced_words_against_brute_force():
    for w in all_windows(2):
        assert reduced_word_count(w) == brute_force_word_count(w)
    rng = random.Random(99)
    pool = [w for w in all_windows(3) if length(w) <= 6]
    for w in rng.sample(pool, 10):
        assert reduced_word_count(w) == brute_force_word_count(w)


def test_iter_reduced_words_products_and_count():
    rng = random.Random(7)
    pool = sorted(all_windows(3))
    for w in rng.sample(pool, 12):
        words = list(iter_reduced_words(w))
        assert len(words) == reduced_word_count(w)
        assert len(set(words)) == len(words)
        assert words == sorted(words)
        for word in words:
            assert len(word) == length(w)
            assert product_word(3, word) == w
