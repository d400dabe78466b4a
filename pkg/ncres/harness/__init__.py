"""Verification workflows, reports and serialization."""

from ncres.harness.report import Check, VerificationReport
from ncres.harness.serialize import (
    algebra_from_json,
    algebra_to_json,
    chart_to_dot,
    export_case,
    quiver_to_dot,
    subquiver_to_dot,
)
from ncres.harness.verify import (
    verify_case,
    verify_conifold,
    verify_cyclic,
    verify_preprojective,
    verify_su3,
    verify_tautological,
)

__all__ = [
    "Check",
    "VerificationReport",
    "algebra_from_json",
    "algebra_to_json",
    "chart_to_dot",
    "export_case",
    "quiver_to_dot",
    "subquiver_to_dot",
    "verify_case",
    "verify_conifold",
    "verify_cyclic",
    "verify_preprojective",
    "verify_su3",
    "verify_tautological",
]
