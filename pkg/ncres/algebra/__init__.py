"""Quivers, exact scalars and impressions."""

from ncres.algebra.quiver import (
    Arrow,
    Path,
    Quiver,
    QuiverAlgebra,
    Relation,
    Subquiver,
    compose,
    enumerate_paths,
    path_in_subquiver,
)

__all__ = [
    "Arrow",
    "Path",
    "Quiver",
    "QuiverAlgebra",
    "Relation",
    "Subquiver",
    "compose",
    "enumerate_paths",
    "path_in_subquiver",
]
