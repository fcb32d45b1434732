from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a batch of exact checks.

    ``checks`` maps a check name to the list of failures found for it; an
    empty list means the check passed.  Failures are short strings naming
    the basis elements involved.
    """

    title: str
    checks: dict[str, list[str]] = field(default_factory=dict)

    def record(self, name: str, failures) -> None:
        self.checks[name] = list(failures)

    @property
    def passed(self) -> bool:
        return all(not f for f in self.checks.values())

    def __bool__(self):
        return self.passed

    @property
    def failed(self) -> list[str]:
        return [name for name, f in self.checks.items() if f]

    def first_failure(self) -> tuple[str, str] | None:
        for name, f in self.checks.items():
            if f:
                return name, f[0]
        return None

    def lines(self) -> list[str]:
        out = []
        for name, f in self.checks.items():
            status = "ok" if not f else f"FAIL ({len(f)}): " + "; ".join(f[:3])
            out.append(f"{self.title}: {name}: {status}")
        return out

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": {name: {"passed": not f, "failures": f[:10]} for name, f in self.checks.items()},
        }

    def __str__(self):
        return "\n".join(self.lines())
