"""
Built-in reference catalogs: small classifications that other parts of
the library must reproduce by computation.
"""

from __future__ import annotations

from .root_system import Root
from .signed_perm import Window

#: The six separable windows of rank 2, with their inversion root sets.
B2_SEPARABLE: dict[Window, frozenset[Root]] = {
    (1, 2): frozenset(),
    (-1, 2): frozenset({(1, 0)}),
    (2, 1): frozenset({(-1, 1)}),
    (1, -2): frozenset({(-1, 1), (0, 1), (1, 1)}),
    (-2, -1): frozenset({(1, 0), (0, 1), (1, 1)}),
    (-1, -2): frozenset({(1, 0), (0, 1), (-1, 1), (1, 1)}),
}

#: Rank-4 windows whose unsigned standardization is 3142.
ST_FIBER_3142: frozenset[Window] = frozenset(
    [
        (3, 1, 4, 2),
        (-2, -4, -1, -3),
        (3, -1, 4, 2),
        (3, -2, 4, 1),
        (2, -3, 4, 1),
        (2, -4, 3, 1),
        (3, -2, 4, -1),
        (2, -3, 4, -1),
        (2, -4, 3, -1),
        (1, -3, 4, -2),
        (1, -4, 3, -2),
        (1, -4, 2, -3),
        (-2, -4, 1, -3),
        (-1, -4, 2, -3),
        (-1, -4, 3, -2),
        (-1, -3, 4, -2),
    ]
)

#: Rank-4 windows whose unsigned standardization is 2413.
ST_FIBER_2413: frozenset[Window] = frozenset(
    [
        (2, 4, 1, 3),
        (-3, -1, -4, -2),
        (1, 3, -4, 2),
        (1, 4, -3, 2),
        (1, 4, -2, 3),
        (2, 4, -1, 3),
        (-3, 2, -4, 1),
        (-2, 3, -4, 1),
        (-2, 4, -3, 1),
        (-1, 3, -4, 2),
        (-1, 4, -3, 2),
        (-1, 4, -2, 3),
        (-3, 1, -4, -2),
        (-3, 2, -4, -1),
        (-2, 3, -4, -1),
        (-2, 4, -3, -1),
    ]
)

CATALOGS = {
    "b2-separable": B2_SEPARABLE,
    "b4-st-fibers": {"3142": ST_FIBER_3142, "2413": ST_FIBER_2413},
}
