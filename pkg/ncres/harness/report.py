"""Verification reports: itemized checks plus the diagrams they produced."""

import json
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from ncres.config.models import CheckStatus
from ncres.errors import NcresError
from ncres.log import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    status: CheckStatus
    detail: str = ""


@dataclass
class VerificationReport:
    """Checks run for one case, in the order they ran.

    A failing check never stops the report; ``assumed`` rows record
    statements taken on trust and do not count against ``ok``.
    """
    case: str
    checks: List[Check] = field(default_factory=list)
    diagrams: Dict[str, str] = field(default_factory=dict)
    artifacts: List[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> Check:
        return self.record(name, CheckStatus.PASS if passed else CheckStatus.FAIL, detail)

    def assume(self, name: str, detail: str = "") -> Check:
        return self.record(name, CheckStatus.ASSUMED, detail)

    def record(self, name: str, status: CheckStatus, detail: str = "") -> Check:
        check = Check(name, status, detail)
        self.checks.append(check)
        logger.info("%s: %s %s %s", self.case, status.symbol, name, detail)
        return check

    def run(self, name: str, body: Callable[[], Tuple[bool, str]]) -> Check:
        """Record ``body()`` as a check; a library error becomes a failed row."""
        try:
            passed, detail = body()
        except NcresError as exc:
            return self.record(name, CheckStatus.FAIL, f"{type(exc).__name__}: {exc}")
        return self.add(name, passed, detail)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def count(self, status: CheckStatus) -> int:
        return sum(1 for c in self.checks if c.status is status)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "ok": self.ok,
            "checks": [{"name": c.name, "status": c.status.value, "detail": c.detail} for c in self.checks],
            "diagrams": sorted(self.diagrams),
            "artifacts": list(self.artifacts),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_dot(self) -> str:
        """Every diagram of the report, in name order."""
        return "\n".join(self.diagrams[name] for name in sorted(self.diagrams))
