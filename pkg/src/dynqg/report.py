"""Check reports shared by the verification suites."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    witness: str | None = None
    status: str = ""

    def __post_init__(self):
        if not self.status:
            self.status = "pass" if self.ok else "fail"


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)
    elapsed: float = 0.0

    def add(self, name: str, ok: bool, witness=None, status: str = "") -> Check:
        c = Check(name, bool(ok), None if witness is None else str(witness), status)
        self.checks.append(c)
        self.elapsed = time.perf_counter() - self.started
        return c

    def skip(self, name: str, reason: str) -> Check:
        c = Check(name, True, reason, "skipped")
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness, c.status))
        self.elapsed = time.perf_counter() - self.started

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "elapsed_s": round(self.elapsed, 3),
            "checks": [
                {"name": c.name, "status": c.status, **({"witness": c.witness} if c.witness else {})}
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        lines = [f"{self.suite}: {'PASS' if self.ok else 'FAIL'} ({len(self.checks)} checks, {self.elapsed:.2f}s)"]
        for c in self.checks:
            line = f"  [{c.status}] {c.name}"
            if c.witness and c.status != "pass":
                line += f" -- {c.witness}"
            lines.append(line)
        return "\n".join(lines)
