"""The algebras studied here, with their figure data."""

from ncres.catalog.builders import (
    CatalogEntry,
    abelian_su3_algebra,
    build_algebra,
    catalog_entries,
    conifold_algebra,
    cyclic_mckay_algebra,
    preprojective_algebra,
    st_figure_module,
    tautological_algebra,
)
from ncres.catalog.charts import IntersectionRow, builtin_family_charts, intersection_rows

__all__ = [
    "CatalogEntry",
    "IntersectionRow",
    "abelian_su3_algebra",
    "build_algebra",
    "builtin_family_charts",
    "catalog_entries",
    "conifold_algebra",
    "cyclic_mckay_algebra",
    "intersection_rows",
    "preprojective_algebra",
    "st_figure_module",
    "tautological_algebra",
]
