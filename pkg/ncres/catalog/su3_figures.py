"""Supporting subquivers of the r = 4 abelian SU(3) orbifold, as drawn.

Each entry lists the arrows of one figure support ``Q^g`` for a point ``g``
of the toric diagram. An arrow token is ``<kind><x><y>`` for the arrow of
that kind leaving grid vertex ``(x, y)``. The digits after ``:`` are the
labels the figure prints on that arrow: removing every arrow with label
``i`` from ``Q^g`` gives the support shared with a neighbouring point.
"""

from typing import Dict, FrozenSet, List, Tuple

FIGURE_SUPPORTS: Dict[str, str] = {
    "a1": (
        "a00:2 a10:2 a20:2 a30:2 a01 a11 a21 a31 a02 a12 a22 a32 a03 a13 "
        "a23 a33 b00:1 b10 b20 b30 b01:1 b11 b21 b31 b02:1 b12 b22 b32 "
        "b03:1 b13 b23 b33"
    ),
    "a2": (
        "a00:2 a10 a20 a30 a01 a11:2 a21 a31 a02 a12 a22:2 a32 a03 a13 "
        "a23 a33:2 c00:1 c10 c20 c30 c01:1 c11 c21 c31 c02:1 c12 c22 c32 "
        "c03:1 c13 c23 c33"
    ),
    "a3": (
        "b00:1 b10 b20 b30 b01 b11:1 b21 b31 b02 b12 b22:1 b32 b03 b13 "
        "b23 b33:1 c00:2 c10:2 c20:2 c30:2 c01 c11 c21 c31 c02 c12 c22 "
        "c32 c03 c13 c23 c33"
    ),
    "b1": (
        "a00:34 a10:3 a20:34 a30:34 a01 a11:4 a21 a31 a02 a12 a22 a32 a03 "
        "a13 a23 a33 b10:2 b20 b30 b11:24 b21 b31 b12:2 b22 b32 b13:2 b23 "
        "b33 c10:13 c11:1 c12:13 c13:13"
    ),
    "b2": (
        "a00:34 a10 a20:3 a30:34 a01 a11:34 a21 a31 a02 a12 a22:4 a32 a03 "
        "a13 a23 a33 b20:2 b30 b21:24 b31 b22:24 b32 b23:2 b33 c10 c20:13 "
        "c11 c21:1 c12 c22:1 c13 c23:13"
    ),
    "b3": (
        "a00:34 a10 a20 a30:3 a01 a11:34 a21 a31 a02 a12 a22:34 a32 a03 "
        "a13 a23 a33:4 b30:2 b31:24 b32:24 b33:24 c10 c20 c30:13 c11 c21 "
        "c31:1 c12 c22 c32:1 c13 c23 c33:1"
    ),
    "c1": (
        "a10 a20 a30:34 a01:3 a21 a31 a02 a12:3 a32 a03 a13 a23:3 b30:1 "
        "b01:12 b12:12 b23:12 c00:24 c10 c20 c30:4 c01:2 c11 c21 c31 "
        "c02:24 c12 c22 c32 c03:24 c13 c23 c33"
    ),
    "c2": (
        "a10 a20:34 a21 a31:34 a02:3 a32 a03 a13:3 b20:1 b30 b01 b31:1 "
        "b02:12 b12 b13:12 b23 c00:24 c10 c20:4 c30:24 c01 c11 c21 c31 "
        "c02:2 c12 c22 c32 c03:24 c13 c23 c33"
    ),
    "c3": (
        "a10:34 a21:34 a32:34 a03:3 b10:1 b20 b30 b01 b21:1 b31 b02 b12 "
        "b32:1 b03:12 b13 b23 c00:24 c10:4 c20:24 c30:24 c01 c11 c21 c31 "
        "c02 c12 c22 c32 c03:2 c13 c23 c33"
    ),
    "d1": (
        "a03:1 a13:14 a23:14 a33:14 b00:34 b10 b20 b30 b01 b11:34 b21 b31 "
        "b02 b12 b22:34 b32 b03:3 b13 b23 b33:4 c01 c11 c21 c31 c02 c12 "
        "c22 c32 c03:23 c13:2 c23:2 c33:2"
    ),
    "d2": (
        "a02:1 a12:14 a22:14 a32:1 a03 a13 a23 a33 b00:34 b10 b20 b30 b01 "
        "b11:34 b21 b31 b02:3 b12 b22:4 b32 b03:34 b13 b23 b33 c01 c11 "
        "c21 c31 c02:23 c12:2 c22:2 c32:23"
    ),
    "d3": (
        "a01:1 a11:14 a21:1 a31:1 a02 a12 a22 a32 a03 a13 a23 a33 b00:34 "
        "b10 b20 b30 b01:3 b11:4 b21 b31 b02:34 b12 b22 b32 b03:34 b13 "
        "b23 b33 c01:23 c11:2 c21:23 c31:23"
    ),
    "e1": (
        "a10:24 a01:26 a21:2 a31:26 a02 a12:6 a22:56 a32 a03 a13 a23 a33 "
        "b10:15 b20 b30 b01:13 b21:5 b31 b12:1 b22:56 b32 b13:15 b23 b33 "
        "c10:24 c01:13 c11 c21:3 c31:13 c12:4 c22:34 c13:24"
    ),
    "e2": (
        "a10 a20:14 a01:45 a21 a31:4 a02 a12:45 a32 a03 a13 a23:5 a33:25 "
        "b20:23 b30 b01:36 b31:2 b12:36 b32:25 b23:3 b33:25 c10 c20:14 "
        "c01:36 c11 c21 c31:6 c12 c22 c32:16 c13 c23:1 c33:16"
    ),
    "e3": (
        "a10:36 a21:36 a02:23 a32:3 a03 a13:2 a23:25 a33:25 b10:45 b20 "
        "b30 b01 b21:45 b31 b02:14 b12 b32:5 b13:4 b23 b33:25 c10:36 c01 "
        "c11 c21 c31 c02:14 c12 c22 c32:1 c13:6 c23:16 c33:16"
    ),
}

ADJACENCY_ROWS: Tuple[Tuple[str, str, int, int], ...] = (
    ("a1", "d3", 2, 2),
    ("a1", "b1", 1, 1),
    ("b1", "d3", 3, 3),
    ("b1", "e1", 4, 3),
    ("b1", "b2", 2, 1),
    ("b2", "e1", 3, 1),
    ("b2", "e2", 4, 6),
    ("b2", "b3", 2, 1),
    ("b3", "e2", 3, 3),
    ("b3", "c1", 4, 2),
    ("b3", "a2", 2, 1),
    ("a2", "c1", 2, 1),
    ("c1", "e2", 4, 2),
    ("c1", "c2", 3, 1),
    ("c2", "e2", 2, 5),
    ("c2", "e3", 4, 5),
    ("c2", "c3", 3, 1),
    ("c3", "e3", 2, 2),
    ("c3", "d1", 4, 4),
    ("c3", "a3", 3, 1),
    ("a3", "d1", 2, 1),
    ("d1", "e3", 3, 3),
    ("d1", "d2", 2, 1),
    ("d2", "e3", 4, 6),
    ("d2", "e1", 3, 2),
    ("d2", "d3", 2, 1),
    ("d3", "e1", 4, 4),
    ("e1", "e2", 5, 1),
    ("e2", "e3", 4, 4),
    ("e3", "e1", 1, 6),
)


def parse_support(name: str) -> List[Tuple[str, int, int, FrozenSet[int]]]:
    """``(kind, x, y, labels)`` for every arrow of figure support ``name``."""
    out = []
    for token in FIGURE_SUPPORTS[name].split():
        head, _, labels = token.partition(":")
        out.append((head[0], int(head[1]), int(head[2]), frozenset(int(c) for c in labels)))
    return out
