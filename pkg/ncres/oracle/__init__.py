"""Commutative-geometry oracles: continued fractions, the toric diagram, perfect matchings."""

from ncres.oracle.hj import HJData, boundary_points, hj_continued_fraction
from ncres.oracle.toric import (
    ToricDiagram,
    is_perfect_matching,
    perfect_matchings,
    su3_adjacency_table,
    su3_level_count,
    su3_toric_diagram,
)

__all__ = [
    "HJData",
    "ToricDiagram",
    "boundary_points",
    "hj_continued_fraction",
    "is_perfect_matching",
    "perfect_matchings",
    "su3_adjacency_table",
    "su3_level_count",
    "su3_toric_diagram",
]
