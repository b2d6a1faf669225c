from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self, prefix="CHECK"):
        status = "PASS" if self.passed else "FAIL"
        return f"{prefix} {self.name} {status}: {self.detail}"


@dataclass
class Report:
    """An ordered list of named PASS/FAIL checks."""

    title: str = ""
    checks: list = field(default_factory=list)
    prefix: str = "CHECK"

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))
        return passed

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self):
        return [c.line(self.prefix) for c in self.checks]

    def text(self):
        return "\n".join(self.lines())


@dataclass
class WindowReport(Report):
    window: tuple = ()
    vertices: list = field(default_factory=list)


def summarize(failures, limit=3):
    """Render the first few counterexamples of a failed check."""
    shown = "; ".join(str(f) for f in failures[:limit])
    more = len(failures) - limit
    if more > 0:
        shown += f"; ... {more} more"
    return shown
