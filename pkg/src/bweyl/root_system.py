"""
The rank-n root system of the signed permutation group, in integer
coordinates, with the recursive pivot test for separability.

Roots are integer coordinate tuples of the ambient dimension n: the
positive roots are e_i (1 <= i <= n) and -e_i + e_j, e_i + e_j
(1 <= i < j <= n); the simple roots are a_0 = e_1 and a_i = -e_i + e_{i+1}.
A subsystem is the intersection of the ambient roots with the span of a
subset of simple roots; restriction of an inversion set to a subsystem is
plain set intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .signed_perm import Window, statistic_sets

Root = tuple[int, ...]


@dataclass(frozen=True)
class RootSubsystem:
    """A closed subsystem: its positive roots and ordered simple roots."""

    ambient_rank: int
    simple_roots: tuple[Root, ...]
    positive_roots: frozenset[Root]

    @property
    def rank(self) -> int:
        return len(self.simple_roots)


def _basis_vector(n: int, i: int, value: int = 1) -> Root:
    coords = [0] * n
    coords[i] = value
    return tuple(coords)


@lru_cache(maxsize=None)
def full_system(n: int) -> RootSubsystem:
    """The full rank-n system: n^2 positive roots, simples (a_0, ..., a_{n-1})."""
    if n < 1:
        raise ValueError(f"rank must be a positive integer, got {n}")
    positives: list[Root] = [_basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            minus = [0] * n
            minus[i], minus[j] = -1, 1
            plus = [0] * n
            plus[i], plus[j] = 1, 1
            positives.append(tuple(minus))
            positives.append(tuple(plus))
    simples: list[Root] = [_basis_vector(n, 0)]
    for i in range(n - 1):
        alpha = [0] * n
        alpha[i], alpha[i + 1] = -1, 1
        simples.append(tuple(alpha))
    return RootSubsystem(n, tuple(simples), frozenset(positives))


def inversion_roots(w: Window) -> frozenset[Root]:
    """
    The positive roots sent negative by w: e_i for each negative place i,
    -e_i + e_j for each inversion (i, j), and e_i + e_j for each
    negative-sum pair (i, j).  Their number equals the length of w.
    """
    n = len(w)
    neg, inv, nsp = statistic_sets(w)
    roots: list[Root] = [_basis_vector(n, i - 1) for i in neg]
    for i, j in inv:
        coords = [0] * n
        coords[i - 1], coords[j - 1] = -1, 1
        roots.append(tuple(coords))
    for i, j in nsp:
        coords = [0] * n
        coords[i - 1], coords[j - 1] = 1, 1
        roots.append(tuple(coords))
    return frozenset(roots)


@lru_cache(maxsize=None)
def _expand(simples: tuple[Root, ...], target: Root) -> tuple[Fraction, ...] | None:
    """
    Solve target = sum c_k * simples[k] exactly, or None if target is not
    in the span.  The simple roots are linearly independent, so any
    solution is unique.
    """
    rows = len(target)
    cols = len(simples)
    aug = [[Fraction(simples[k][r]) for k in range(cols)] + [Fraction(target[r])]
           for r in range(rows)]
    pivot_row = 0
    pivot_cols = []
    for col in range(cols):
        pr = next((r for r in range(pivot_row, rows) if aug[r][col] != 0), None)
        if pr is None:
            continue
        aug[pivot_row], aug[pr] = aug[pr], aug[pivot_row]
        pivot = aug[pivot_row][col]
        aug[pivot_row] = [x / pivot for x in aug[pivot_row]]
        for r in range(rows):
            if r != pivot_row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == rows:
            break
    for r in range(pivot_row, rows):
        if aug[r][cols] != 0:
            return None
    coeffs = [Fraction(0)] * cols
    for r, col in enumerate(pivot_cols):
        coeffs[col] = aug[r][cols]
    return tuple(coeffs)


def dominance_leq(alpha: Root, beta: Root, sys: RootSubsystem) -> bool:
    """
    The dominance order on positive roots: alpha <= beta iff beta - alpha
    is a nonnegative integer combination of the simple roots of sys.
    """
    for root in (alpha, beta):
        if root not in sys.positive_roots:
            raise ValueError(f"{root!r} is not a positive root of the subsystem")
    diff = tuple(b - a for a, b in zip(alpha, beta))
    coeffs = _expand(sys.simple_roots, diff)
    return coeffs is not None and all(c.denominator == 1 and c >= 0 for c in coeffs)


def subsystem_spanned_by(sys: RootSubsystem, kept: Iterable[int]) -> RootSubsystem:
    """
    The subsystem spanned by the simple roots of sys at the kept indices:
    those positive roots of sys lying in the span.
    """
    kept_idx = sorted(set(kept))
    for k in kept_idx:
        if not 0 <= k < sys.rank:
            raise ValueError(f"simple root index {k} out of range")
    simples = tuple(sys.simple_roots[k] for k in kept_idx)
    positives = frozenset(
        beta for beta in sys.positive_roots if _expand(simples, beta) is not None
    )
    return RootSubsystem(sys.ambient_rank, simples, positives)


def _dot(a: Root, b: Root) -> int:
    return sum(x * y for x, y in zip(a, b))


def components(sys: RootSubsystem) -> list[RootSubsystem]:
    """
    Split sys into its irreducible components: connected classes of simple
    roots under non-orthogonality, each carrying the positive roots in its
    span.  A single component means sys is irreducible.
    """
    k = sys.rank
    unassigned = list(range(k))
    classes: list[list[int]] = []
    while unassigned:
        seed = unassigned.pop(0)
        cls = [seed]
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            linked = [
                j for j in unassigned
                if _dot(sys.simple_roots[cur], sys.simple_roots[j]) != 0
            ]
            for j in linked:
                unassigned.remove(j)
                cls.append(j)
                frontier.append(j)
        classes.append(sorted(cls))
    return [subsystem_spanned_by(sys, cls) for cls in classes]


@lru_cache(maxsize=None)
def _upper_set(sys: RootSubsystem, pivot_index: int) -> frozenset[Root]:
    """Positive roots of sys dominance-above the given simple root."""
    alpha = sys.simple_roots[pivot_index]
    return frozenset(
        beta for beta in sys.positive_roots if dominance_leq(alpha, beta, sys)
    )


def is_separable_recursive(I: frozenset[Root], sys: RootSubsystem) -> bool:
    """
    The recursive pivot test for separability of an inversion set I inside
    sys: rank 1 is separable; a reducible system is separable iff each
    component is, with I restricted by intersection; an irreducible system
    needs some simple root whose dominance upper set lies wholly inside I
    or misses it, with the rest of the system recursively separable.
    """
    bad = I - sys.positive_roots
    if bad:
        raise ValueError(f"inversion set leaves the subsystem: {sorted(bad)!r}")
    if sys.rank <= 1:
        return True
    comps = components(sys)
    if len(comps) > 1:
        return all(
            is_separable_recursive(I & comp.positive_roots, comp) for comp in comps
        )
    for idx in range(sys.rank):
        upper = _upper_set(sys, idx)
        if upper <= I or not (upper & I):
            rest = subsystem_spanned_by(sys, [k for k in range(sys.rank) if k != idx])
            if is_separable_recursive(I & rest.positive_roots, rest):
                return True
    return False
