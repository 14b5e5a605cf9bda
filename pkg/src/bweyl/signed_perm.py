"""
Signed permutations of {±1, ..., ±n} in one-line "window" notation.

A window is a tuple of n nonzero integers (w_1, ..., w_n) whose absolute
values form a permutation of {1, ..., n}.  The window records the images
w_i = w(i); the image of -i is always -w(i), so the window determines the
whole bijection of {±1, ..., ±n}.  The text form is space separated signed
decimals, e.g. "-2 3 4 5 1".

Products compose right to left: (u*v)(i) = u(v(i)), so the window of u*v
is sign(v_i) * u_{|v_i|}.  The generators are s_0, which negates the value
1, and s_i (1 <= i <= n-1), which swaps the values i and i+1; multiplying
s_i on the left acts on values, multiplying on the right acts on places.

The word length of w in these generators decomposes into three statistics
on the window: negative entries, inversions, and pairs with negative sum.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple, Sequence

Window = tuple[int, ...]


class StatisticSets(NamedTuple):
    """The three window statistics; positions are 1-based."""

    neg: frozenset[int]
    inv: frozenset[tuple[int, int]]
    nsp: frozenset[tuple[int, int]]


def is_window(w: Sequence[int]) -> bool:
    """
    Check that w is a valid window: nonzero entries whose absolute values
    are a permutation of {1, ..., n}.

    >>> is_window((-2, 3, 4, 5, 1)), is_window((1, 1)), is_window((0, 2))
    (True, False, False)
    """
    n = len(w)
    if n == 0:
        return False
    seen = 0
    for x in w:
        if not isinstance(x, int) or x == 0 or not -n <= x <= n:
            return False
        bit = 1 << (abs(x) - 1)
        if seen & bit:
            return False
        seen |= bit
    return seen == (1 << n) - 1


def validate_window(w: Sequence[int]) -> Window:
    """Return w as a tuple, raising ValueError if it is not a window."""
    t = tuple(w)
    if not is_window(t):
        raise ValueError(f"not a signed permutation window: {t!r}")
    return t


def parse_window(text: str) -> Window:
    """
    Parse the text form "-2 3 4 5 1".  Rejects zeros, repeated absolute
    values, and gaps.

    >>> parse_window("-2 3 4 5 1")
    (-2, 3, 4, 5, 1)
    """
    try:
        entries = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"window entries must be integers: {text!r}") from None
    if not entries:
        raise ValueError("empty window")
    return validate_window(entries)


def format_window(w: Sequence[int]) -> str:
    """Render a window in its canonical text form.

    >>> format_window((-2, 3, 4, 5, 1))
    '-2 3 4 5 1'
    """
    return " ".join(str(x) for x in w)


def _check_rank(n: int) -> None:
    if n < 1:
        raise ValueError(f"rank must be a positive integer, got {n}")


def identity(n: int) -> Window:
    """The identity window (1, 2, ..., n).

    >>> identity(3)
    (1, 2, 3)
    """
    _check_rank(n)
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Window:
    """The unique longest element (-1, -2, ..., -n), of length n^2.

    >>> longest_element(2)
    (-1, -2)
    """
    _check_rank(n)
    return tuple(range(-1, -n - 1, -1))


def simple_reflection(n: int, i: int) -> Window:
    """
    The generator s_i of rank n: s_0 = (-1, 2, ..., n), and s_i for i >= 1
    is the adjacent transposition of places i, i+1.

    >>> simple_reflection(2, 0), simple_reflection(5, 3)
    ((-1, 2), (1, 2, 4, 3, 5))
    """
    _check_rank(n)
    if not 0 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range [0, {n - 1}]")
    win = list(range(1, n + 1))
    if i == 0:
        win[0] = -1
    else:
        win[i - 1], win[i] = win[i], win[i - 1]
    return tuple(win)


def all_windows(n: int) -> Iterator[Window]:
    """Iterate over all 2^n * n! windows of rank n in a fixed order."""
    _check_rank(n)
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * p for s, p in zip(signs, perm))


def compose(u: Window, v: Window) -> Window:
    """
    The product u*v acting as u after v: (u*v)(i) = u(v(i)).

    >>> compose((2, 1), (-1, 2))
    (-2, 1)
    """
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def inverse(w: Window) -> Window:
    """
    The group inverse: the value k sits at the signed place recorded by
    inverse(w)_k.

    >>> inverse((-2, 3, 4, 5, 1))
    (5, -1, 2, 3, 4)
    """
    inv = [0] * len(w)
    for pos, x in enumerate(w, start=1):
        if x > 0:
            inv[x - 1] = pos
        else:
            inv[-x - 1] = -pos
    return tuple(inv)


def left_mul_simple(i: int, w: Window) -> Window:
    """Compose(simple_reflection(n, i), w) in one pass: act on values."""
    if i == 0:
        return tuple(-x if x in (1, -1) else x for x in w)
    lo, hi = i, i + 1
    out = []
    for x in w:
        a = abs(x)
        if a == lo:
            out.append(hi if x > 0 else -hi)
        elif a == hi:
            out.append(lo if x > 0 else -lo)
        else:
            out.append(x)
    return tuple(out)


def left_descents(w: Window) -> list[int]:
    """
    Indices i with length(s_i * w) = length(w) - 1.  s_0 descends iff the
    value 1 occurs negated; s_i descends iff the signed place of i exceeds
    the signed place of i+1.

    >>> left_descents((-1, -2))
    [0, 1]
    """
    n = len(w)
    place = [0] * (n + 1)
    for pos, x in enumerate(w, start=1):
        place[abs(x)] = pos if x > 0 else -pos
    out = []
    if place[1] < 0:
        out.append(0)
    for i in range(1, n):
        if place[i] > place[i + 1]:
            out.append(i)
    return out


def statistic_sets(w: Window) -> StatisticSets:
    """
    The negative places, inversions, and negative-sum pairs of a window:
    neg = {i : w_i < 0}, inv = {(i, j) : i < j, w_i > w_j}, and
    nsp = {(i, j) : i < j, w_i + w_j < 0}.

    >>> s = statistic_sets((1, -2))
    >>> sorted(s.neg), sorted(s.inv), sorted(s.nsp)
    ([2], [(1, 2)], [(1, 2)])
    """
    n = len(w)
    neg = frozenset(i for i in range(1, n + 1) if w[i - 1] < 0)
    inv = []
    nsp = []
    for i in range(n - 1):
        wi = w[i]
        for j in range(i + 1, n):
            wj = w[j]
            if wi > wj:
                inv.append((i + 1, j + 1))
            if wi + wj < 0:
                nsp.append((i + 1, j + 1))
    return StatisticSets(neg, frozenset(inv), frozenset(nsp))


def length(w: Window) -> int:
    """
    Word length in the generators: the inversion count minus the sum of
    the negative entries (equivalently #neg + #inv + #nsp).

    >>> length((2, 3, 5, 1, -4))
    11
    """
    n = len(w)
    inv = 0
    negsum = 0
    for i in range(n):
        wi = w[i]
        if wi < 0:
            negsum += wi
        for j in range(i + 1, n):
            if wi > w[j]:
                inv += 1
    return inv - negsum


def group_order(n: int) -> int:
    """The number of signed permutations of rank n, 2^n * n!."""
    _check_rank(n)
    order = 1
    for k in range(1, n + 1):
        order *= 2 * k
    return order


def sort_windows(ws: Iterable[Window]) -> list[Window]:
    """Sort windows by (length, window) for deterministic listings."""
    return sorted(ws, key=lambda w: (length(w), w))
