"""
Generalized quotients and splitting verification.

For a set U of signed permutations, the generalized quotient is the set
of w whose products wu are length-additive against every u in U.  When U
is the principal right interval below u, the quotient is itself a
principal left interval generated by w0 * u^-1, which is how the checks
here compute it.  A pair (X, Y) splits the group when multiplication
X x Y -> group is length-additive and bijective; the main verification
sweeps every u and compares "([quotient], interval) splits" against
separability of u.
"""

from __future__ import annotations

import multiprocessing
from typing import Iterable, Sequence

from .patterns import is_separable, parabolic_factor
from .reports import LemmaReport, SplittingReport
from .signed_perm import (
    Window,
    all_windows,
    compose,
    format_window,
    group_order,
    identity,
    inverse,
    length,
    longest_element,
)
from .weak_order import interval_right, left_leq, lower_ideal_left, right_leq


def generalized_quotient(U: Iterable[Window], n: int) -> frozenset[Window]:
    """
    The exact filter {w : length(w u) = length(w) + length(u) for all u in U}.
    """
    members = sorted(set(U))
    if not members:
        raise ValueError("generalized quotient of an empty set is degenerate")
    for u in members:
        if len(u) != n:
            raise ValueError(f"rank mismatch: {format_window(u)} in rank-{n} group")
    lengths = [length(u) for u in members]
    out = []
    for w in all_windows(n):
        lw = length(w)
        if all(length(compose(w, u)) == lw + lu for u, lu in zip(members, lengths)):
            out.append(w)
    return frozenset(out)


def quotient_of_interval(u: Window) -> frozenset[Window]:
    """
    The generalized quotient of the right interval below u, computed as
    the left interval below w0 * u^-1.
    """
    w0 = longest_element(len(u))
    return lower_ideal_left(compose(w0, inverse(u))).elements


def quotient_interval_identity(u: Window) -> bool:
    """
    Check on one element that the exact quotient filter of the right
    interval below u equals the left interval below w0 * u^-1.
    """
    U = interval_right(u).elements
    return generalized_quotient(U, len(u)) == quotient_of_interval(u)


def _splitting_report(
    X: Sequence[Window],
    Y: Sequence[Window],
    universe: frozenset[Window] | None,
    universe_size: int,
) -> SplittingReport:
    counts = (len(X), len(Y), universe_size)
    if len(X) * len(Y) != universe_size:
        return SplittingReport(False, False, counts)
    ys = [(y, length(y)) for y in sorted(Y)]
    seen: dict[Window, tuple[Window, Window]] = {}
    for x in sorted(X):
        lx = length(x)
        for y, ly in ys:
            xy = compose(x, y)
            if length(xy) != lx + ly:
                return SplittingReport(
                    False, True, counts,
                    ("length-deficit", x, y),
                )
            if universe is not None and xy not in universe:
                return SplittingReport(
                    False, True, counts,
                    ("escapes-subgroup", x, y),
                )
            prior = seen.get(xy)
            if prior is not None:
                return SplittingReport(
                    False, True, counts,
                    ("collision", prior[0], prior[1], x, y),
                )
            seen[xy] = (x, y)
    return SplittingReport(True, True, counts)


def is_splitting(
    X: Iterable[Window], Y: Iterable[Window], n: int
) -> SplittingReport:
    """
    Whether multiplication X x Y -> rank-n group is length-additive and
    bijective.  Fails fast on the cardinality check #X * #Y = 2^n n!.
    """
    Xs, Ys = sorted(set(X)), sorted(set(Y))
    for w in Xs + Ys:
        if len(w) != n:
            raise ValueError(f"rank mismatch: {format_window(w)} in rank-{n} group")
    return _splitting_report(Xs, Ys, None, group_order(n))


def left_maximal_elements(X: Iterable[Window]) -> list[Window]:
    """Elements of X with nothing above them in the left order within X."""
    Xs = sorted(set(X))
    return [
        x for x in Xs
        if not any(y != x and left_leq(x, y) for y in Xs)
    ]


def right_maximal_elements(Y: Iterable[Window]) -> list[Window]:
    """Elements of Y with nothing above them in the right order within Y."""
    Ys = sorted(set(Y))
    return [
        y for y in Ys
        if not any(z != y and right_leq(y, z) for z in Ys)
    ]


def splitting_transport(
    X: Iterable[Window], Y: Iterable[Window]
) -> tuple[frozenset[Window], frozenset[Window]]:
    """
    Produce a new splitting from one: with x0 the unique left-maximal
    element of X, map X to X * x0^-1 and Y to x0 * Y * w0.  Raises if X
    has no unique left-maximal element or if the maximal elements fail
    x0 * y0 = w0 (either way the input was not a splitting).
    """
    Xs, Ys = sorted(set(X)), sorted(set(Y))
    n = len(Xs[0])
    maxes = left_maximal_elements(Xs)
    if len(maxes) != 1:
        raise ValueError(
            f"no unique left-maximal element (found {len(maxes)}); not a splitting"
        )
    x0 = maxes[0]
    w0 = longest_element(n)
    y_maxes = right_maximal_elements(Ys)
    if len(y_maxes) != 1 or compose(x0, y_maxes[0]) != w0:
        raise ValueError("maximal elements do not multiply to w0; not a splitting")
    x0_inv = inverse(x0)
    new_x = frozenset(compose(z, x0_inv) for z in Xs)
    new_y = frozenset(compose(x0, compose(z, w0)) for z in Ys)
    return new_x, new_y


def parabolic_subgroup(n: int, removed: Iterable[int]) -> frozenset[Window]:
    """Elements of the parabolic subgroup: trivial quotient factor."""
    removed = tuple(sorted(set(removed)))
    e = identity(n)
    return frozenset(
        w for w in all_windows(n) if parabolic_factor(w, removed)[0] == e
    )


def minimal_coset_representatives(n: int, removed: Iterable[int]) -> frozenset[Window]:
    """Elements equal to their own quotient factor."""
    removed = tuple(sorted(set(removed)))
    return frozenset(
        w for w in all_windows(n) if parabolic_factor(w, removed)[0] == w
    )


def splitting_restriction(
    X: Iterable[Window], Y: Iterable[Window], removed: Iterable[int]
) -> SplittingReport:
    """
    Restrict a splitting to the parabolic subgroup fixed by deleting the
    generators in removed, and re-verify the splitting there (with the
    subgroup's own cardinality and its own universe of products).
    """
    Xs, Ys = sorted(set(X)), sorted(set(Y))
    n = len(Xs[0])
    subgroup = parabolic_subgroup(n, removed)
    Xr = [w for w in Xs if w in subgroup]
    Yr = [w for w in Ys if w in subgroup]
    return _splitting_report(Xr, Yr, subgroup, len(subgroup))


def splits_with_interval(u: Window) -> SplittingReport:
    """The splitting check for the pair (quotient of interval, interval)."""
    U = interval_right(u).elements
    X = quotient_of_interval(u)
    return _splitting_report(sorted(X), sorted(U), None, group_order(len(u)))


def _theorem_case(u: Window) -> tuple[Window, bool, bool]:
    return u, is_separable(u), splits_with_interval(u).is_splitting


def verify_main_theorem(n: int, jobs: int = 1) -> LemmaReport:
    """
    Sweep every u of rank n and compare: the pair (generalized quotient of
    the right interval below u, that interval) splits the group exactly
    when u is separable.  Reports counts on success and the offending
    elements on failure.
    """
    if not 2 <= n <= 6:
        raise ValueError(f"supported ranks are 2..6, got {n}")
    cases = list(all_windows(n))
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = list(pool.imap_unordered(_theorem_case, cases, chunksize=64))
    else:
        results = [_theorem_case(u) for u in cases]
    results.sort()
    witnesses = tuple(
        {"window": u, "separable": sep, "splits": splits}
        for u, sep, splits in results
        if sep != splits
    )
    separable_count = sum(1 for _, sep, _ in results if sep)
    return LemmaReport(
        lemma_id="splitting-theorem",
        n=n,
        universe_size=len(results),
        passed=not witnesses,
        witnesses=witnesses,
        counts={
            "separable": separable_count,
            "non_separable": len(results) - separable_count,
        },
    )
