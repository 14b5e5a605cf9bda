"""
The two weak orders on signed permutations, their principal ideals, rank
generating polynomials, and reduced word counting.

u <= w on the left exactly when all three window statistics of u are
contained in those of w; the right order is the left order after
inverting.  Principal ideals are enumerated by breadth-first search
through cover relations (left multiplication by a generator that changes
the length by one), layer by layer, so every ideal is materialized with
its grading.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .polynomials import Poly, from_counts
from .signed_perm import (
    Window,
    identity,
    inverse,
    left_descents,
    left_mul_simple,
    length,
    statistic_sets,
)


def left_leq(u: Window, w: Window) -> bool:
    """Left order: the three statistic sets of u all sit inside those of w."""
    if len(u) != len(w):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(w)}")
    su, sw = statistic_sets(u), statistic_sets(w)
    return su.neg <= sw.neg and su.inv <= sw.inv and su.nsp <= sw.nsp


def right_leq(u: Window, w: Window) -> bool:
    """Right order: the left order applied to the inverses."""
    return left_leq(inverse(u), inverse(w))


def lower_covers_left(w: Window) -> frozenset[Window]:
    """The elements s_i * w one step below w in the left order."""
    return frozenset(left_mul_simple(i, w) for i in left_descents(w))


def left_ascents(w: Window) -> list[int]:
    """Generator indices i with length(s_i * w) = length(w) + 1."""
    desc = set(left_descents(w))
    return [i for i in range(len(w)) if i not in desc]


@dataclass(frozen=True)
class Ideal:
    """A principal order ideal, materialized with its generating element."""

    kind: str  # "lower-left" | "upper-left" | "lower-right"
    apex: Window
    elements: frozenset[Window]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: Window) -> bool:
        return w in self.elements

    def __iter__(self) -> Iterator[Window]:
        return iter(sorted(self.elements))

    def rank_polynomial(self) -> Poly:
        return rank_polynomial(self)


def _bfs(seed: Window, down: bool) -> frozenset[Window]:
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            steps = left_descents(x) if down else left_ascents(x)
            for i in steps:
                y = left_mul_simple(i, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def lower_ideal_left(w: Window) -> Ideal:
    """All u <= w in the left order, by downward search through covers."""
    return Ideal("lower-left", w, _bfs(w, down=True))


def upper_ideal_left(w: Window) -> Ideal:
    """All u >= w in the left order, by upward search through covers."""
    return Ideal("upper-left", w, _bfs(w, down=False))


def interval_right(u: Window) -> Ideal:
    """
    All x <= u in the right order: the inverses of the left lower ideal
    of the inverse.
    """
    below = _bfs(inverse(u), down=True)
    return Ideal("lower-right", u, frozenset(inverse(x) for x in below))


def rank_polynomial(ideal: Ideal) -> Poly:
    """
    The rank generating polynomial of an ideal, graded by length from the
    bottom of the ideal (for upper ideals the grading is shifted so the
    generating element sits in rank zero).
    """
    lengths = [length(w) for w in ideal.elements]
    base = min(lengths)
    return from_counts([l - base for l in lengths])


@lru_cache(maxsize=None)
def reduced_word_count(w: Window) -> int:
    """
    The number of reduced words for w: sequences (i_1, ..., i_l) of
    generator indices with l = length(w) whose product is w.

    >>> reduced_word_count((-1, -2))
    2
    """
    descents = left_descents(w)
    if not descents:
        return 1
    return sum(reduced_word_count(left_mul_simple(i, w)) for i in descents)


def iter_reduced_words(w: Window) -> Iterator[tuple[int, ...]]:
    """Yield every reduced word of w, in lexicographic order."""
    descents = left_descents(w)
    if not descents:
        yield ()
        return
    for i in descents:
        for word in iter_reduced_words(left_mul_simple(i, w)):
            yield (i,) + word


def product_word(n: int, word: tuple[int, ...]) -> Window:
    """Multiply out a word of generator indices in rank n."""
    out = identity(n)
    for i in reversed(word):
        out = left_mul_simple(i, out)
    return out
