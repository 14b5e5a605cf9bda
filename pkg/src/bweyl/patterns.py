"""
Standardization, signed pattern containment, the six-pattern test for
separability, parabolic factorization, and the minimal non-separability
criteria.

Patterns are themselves windows; w contains the pattern p when some index
subsequence of w standardizes (signed standardization) to p.  A window is
separable exactly when it avoids the six forbidden patterns below; the
quadruple families refine that test to recognize the minimal non-separable
windows and those whose inverses stay minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .signed_perm import Window, identity, inverse

#: The six forbidden patterns; avoiding all of them is separability.
SEPARABLE_FORBIDDEN: tuple[Window, ...] = (
    (-2, 1),
    (2, -1),
    (3, 1, 4, 2),
    (2, 4, 1, 3),
    (-3, -1, -4, -2),
    (-2, -4, -1, -3),
)

#: Forbidden quadruples through the last entry in the minimality test,
#: split by the sign of that entry.
MINNONSEP_QUAD_POS: frozenset[Window] = frozenset(
    [(1, 3, -4, 2), (2, -3, 4, 1), (-1, 3, -4, 2), (-2, 3, -4, 1)]
)
MINNONSEP_QUAD_NEG: frozenset[Window] = frozenset(
    [(-1, -3, 4, -2), (-2, 3, -4, -1), (1, -3, 4, -2), (2, -3, 4, -1)]
)

#: Forbidden quadruples in the inverse-minimality test.
INVERSE_QUAD_POS: frozenset[Window] = frozenset([(-1, -4, -2, 3), (1, -4, -2, 3)])
INVERSE_QUAD_NEG: frozenset[Window] = frozenset([(1, 4, 2, -3), (-1, 4, 2, -3)])


@dataclass(frozen=True)
class PatternSet:
    """A named family of forbidden patterns."""

    name: str
    members: tuple[Window, ...]


PATTERN_SETS: dict[str, PatternSet] = {
    ps.name: ps
    for ps in (
        PatternSet("sep-forbidden-6", SEPARABLE_FORBIDDEN),
        PatternSet("minnonsep-quad-pos", tuple(sorted(MINNONSEP_QUAD_POS))),
        PatternSet("minnonsep-quad-neg", tuple(sorted(MINNONSEP_QUAD_NEG))),
        PatternSet("inverse-quad-pos", tuple(sorted(INVERSE_QUAD_POS))),
        PatternSet("inverse-quad-neg", tuple(sorted(INVERSE_QUAD_NEG))),
    )
}


def st(seq: Sequence[int]) -> Window:
    """
    The unsigned standardization: replace each entry by its 1-based rank.
    Entries must be nonzero and pairwise distinct (ties are rejected).

    >>> st((2, -4, 3, -1))
    (3, 1, 4, 2)
    """
    if any(x == 0 for x in seq):
        raise ValueError("standardization rejects zero entries")
    if len(set(seq)) != len(seq):
        raise ValueError(f"standardization rejects repeated values: {tuple(seq)!r}")
    rank = {x: k for k, x in enumerate(sorted(seq), start=1)}
    return tuple(rank[x] for x in seq)


def sts(seq: Sequence[int]) -> Window:
    """
    The signed standardization: keep each sign, rank the absolute values.
    Absolute values must be pairwise distinct.

    >>> sts((-5, 2))
    (-2, 1)
    """
    if any(x == 0 for x in seq):
        raise ValueError("standardization rejects zero entries")
    mags = [abs(x) for x in seq]
    if len(set(mags)) != len(mags):
        raise ValueError(
            f"signed standardization rejects repeated magnitudes: {tuple(seq)!r}"
        )
    rank = {m: k for k, m in enumerate(sorted(mags), start=1)}
    return tuple(rank[abs(x)] if x > 0 else -rank[abs(x)] for x in seq)


def contains_pattern(w: Sequence[int], p: Window) -> bool:
    """
    Whether some subsequence of w standardizes (signed) to p.

    >>> contains_pattern((-2, 3, 4, 5, 1), (-2, 1))
    True
    >>> contains_pattern((1, 2, 3, 4), (2, 1))
    False
    """
    m = len(p)
    if m > len(w):
        return False
    for idx in combinations(range(len(w)), m):
        if sts(tuple(w[i] for i in idx)) == p:
            return True
    return False


def is_separable(w: Sequence[int]) -> bool:
    """
    Whether w avoids all six forbidden patterns.  Unsigned windows can
    only meet the two all-positive quadruples, signed ones any of the six.
    """
    n = len(w)
    # Length-2 patterns by a direct scan: a negated entry before or after
    # a smaller-magnitude entry of the opposite sign.
    for i in range(n - 1):
        wi = w[i]
        for j in range(i + 1, n):
            wj = w[j]
            if wi < 0 < wj and -wi > wj:
                return False
            if wj < 0 < wi and wi > -wj:
                return False
    if n < 4:
        return True
    for idx in combinations(range(n), 4):
        sub = sts(tuple(w[i] for i in idx))
        if sub in _FORBIDDEN_QUADS:
            return False
    return True


_FORBIDDEN_QUADS = frozenset(SEPARABLE_FORBIDDEN[2:])


def parabolic_factor(
    w: Window, removed: Iterable[int]
) -> tuple[Window, Window]:
    """
    Factor w = q * b over the standard parabolic subgroup obtained by
    deleting the generators s_p for p in removed.  The deleted indices cut
    the window into blocks; the subgroup factor b standardizes each block
    in place (signed standardization on the block before the first cut,
    unsigned and shifted on the later blocks), while the quotient factor q
    sorts each block increasingly (by magnitude before the first cut).
    Lengths add: length(w) = length(q) + length(b).

    With removed empty the subgroup is everything: returns (identity, w).
    """
    n = len(w)
    ps = sorted(set(removed))
    for p in ps:
        if not 0 <= p <= n - 1:
            raise ValueError(f"generator index {p} out of range [0, {n - 1}]")
    if not ps:
        return identity(n), w

    bounds = ps + [n]
    quotient = list(w)
    subgroup = list(range(1, n + 1))

    first = bounds[0]
    if first > 0:
        block = w[:first]
        quotient[:first] = sorted(abs(x) for x in block)
        subgroup[:first] = sts(block)
    for a, b in zip(bounds, bounds[1:]):
        block = w[a:b]
        quotient[a:b] = sorted(block)
        subgroup[a:b] = (a + r for r in st(block))
    return tuple(quotient), tuple(subgroup)


def parabolic_blocks(w: Window, removed: Iterable[int]) -> list[Window]:
    """The standardized blocks of the subgroup factor, as small windows."""
    n = len(w)
    ps = sorted(set(removed))
    if not ps:
        return [w]
    blocks: list[Window] = []
    first = ps[0]
    if first > 0:
        blocks.append(sts(w[:first]))
    for a, b in zip(ps + [n], ps[1:] + [n]):
        if b > a:
            blocks.append(st(w[a:b]))
    return blocks


def is_minimal_nonseparable_definitional(w: Window) -> bool:
    """
    Non-separable, but every maximal-parabolic restriction is separable:
    for each deleted generator index i, both standardized blocks of the
    subgroup factor avoid the six patterns.
    """
    if is_separable(w):
        return False
    n = len(w)
    for i in range(n):
        if not all(is_separable(block) for block in parabolic_blocks(w, (i,))):
            return False
    return True


def is_minimal_nonseparable_fast(w: Window) -> bool:
    """
    The direct window test for minimal non-separability: the prefix
    w_1..w_{n-1} avoids both length-2 patterns and w avoids the four
    length-4 separability patterns; some pair (w_i, w_n) realizes the
    length-2 violation matching the sign of w_n; and no quadruple through
    w_n standardizes into the forbidden family for that sign.
    """
    n = len(w)
    if n < 2:
        return False
    prefix = w[:-1]
    wn = w[-1]
    for i in range(n - 1):
        wi = prefix[i]
        for j in range(i + 1, n - 1):
            wj = prefix[j]
            if (wi < 0 < wj and -wi > wj) or (wj < 0 < wi and wi > -wj):
                return False
    for idx in combinations(range(n), 4):
        if sts(tuple(w[i] for i in idx)) in _FORBIDDEN_QUADS:
            return False
    target = (-2, 1) if wn > 0 else (2, -1)
    if not any(sts((x, wn)) == target for x in prefix):
        return False
    quads = MINNONSEP_QUAD_POS if wn > 0 else MINNONSEP_QUAD_NEG
    for idx in combinations(range(n - 1), 3):
        if sts((w[idx[0]], w[idx[1]], w[idx[2]], wn)) in quads:
            return False
    return True


def inverse_minimality_criterion(w: Window) -> bool:
    """
    For a minimal non-separable w, decide whether its inverse is also
    minimal non-separable: deleting the entry of magnitude n (which sits
    before the last place) must leave a separable standardization, and no
    quadruple through w_n may standardize into the inverse-forbidden
    family for the sign of w_n.  Raises ValueError when w is not minimal
    non-separable.
    """
    if not is_minimal_nonseparable_fast(w):
        raise ValueError(
            f"criterion needs a minimal non-separable window, got {w!r}"
        )
    n = len(w)
    i = next(k for k in range(n) if abs(w[k]) == n)
    if i == n - 1:
        return False
    if not is_separable(sts(w[:i] + w[i + 1:])):
        return False
    wn = w[-1]
    quads = INVERSE_QUAD_POS if wn > 0 else INVERSE_QUAD_NEG
    for idx in combinations(range(n - 1), 3):
        if sts((w[idx[0]], w[idx[1]], w[idx[2]], wn)) in quads:
            return False
    return True


def is_doubly_minimal(w: Window) -> bool:
    """Whether w and its inverse are both minimal non-separable."""
    return is_minimal_nonseparable_fast(w) and is_minimal_nonseparable_fast(
        inverse(w)
    )
