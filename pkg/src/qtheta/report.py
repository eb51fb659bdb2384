"""Check records shared by every verification suite."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import List


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    residual_term_count: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return asdict(self)


def check(name: str, residual=None, detail: str = "", ok=None) -> Check:
    """Build a Check from a residual (anything with len()) or an explicit verdict."""
    count = 0 if residual is None else len(residual)
    if ok is None:
        ok = count == 0
    if not ok and not detail and residual is not None and hasattr(residual, "text"):
        detail = residual.text()[:2000]
    return Check(name, "pass" if ok else "fail", detail, count)


@dataclass
class SuiteResult:
    suite: str
    params: dict
    checks: List[Check] = field(default_factory=list)

    def add(self, c: Check) -> Check:
        self.checks.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]
