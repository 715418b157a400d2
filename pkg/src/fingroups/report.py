"""Check verdicts and machine-readable reports.

Theorem-checking operations return Check records rather than bare booleans
so that both sides of each asserted relation stay visible.  The CLI bundles
checks and certificates into a Report with a stable JSON form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    """One verified relation: lhs and rhs are the two computed sides."""

    name: str
    ok: bool
    lhs: Any
    rhs: Any
    witness: Any = None
    ms: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_dict(self, with_timing: bool = True) -> dict:
        d = {
            "name": self.name,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": self.witness,
        }
        if with_timing:
            d["ms"] = round(self.ms, 3)
        return d


@dataclass
class Report:
    """Everything one CLI command asserts about one group."""

    group: str
    order: int
    checks: list[Check] = field(default_factory=list)
    certificates: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self, with_timing: bool = True) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "checks": [c.to_dict(with_timing) for c in self.checks],
            "certificates": self.certificates,
        }

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), sort_keys=True, separators=(",", ": "))

    def render_text(self) -> str:
        lines = [f"group: {self.group} (order {self.order})"]
        for c in self.checks:
            mark = "pass" if c.ok else "FAIL"
            line = f"  {mark}  {c.name}: {c.lhs} vs {c.rhs}"
            if c.witness is not None and not c.ok:
                line += f"  witness={c.witness}"
            lines.append(line)
        for cert in self.certificates:
            lines.append(
                f"  certificate {cert['kind']} p={cert['p']} n={cert['n']} "
                f"elements={cert['elements']}"
            )
            for step in cert["trace"]:
                lines.append(f"    * {step}")
        verdict = "all checks passed" if self.ok else "SOME CHECKS FAILED"
        lines.append(f"  => {verdict}")
        return "\n".join(lines)
