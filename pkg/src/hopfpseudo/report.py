"""Check reports with a deterministic plain-text rendering."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a family of checks.

    ``passed`` is ``True``/``False`` or ``None`` when the question could not
    be decided (solver scope, not-applicable branches).  ``failures`` hold
    ``(label, residual text)`` pairs in the order they were found, which is
    always the sorted order of the underlying index tuples.
    """

    title: str
    passed: bool | None = True
    checked: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    children: list["Report"] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def fail(self, label: str, residual) -> None:
        self.passed = False
        self.failures.append((label, str(residual)))

    def tick(self, n: int = 1) -> None:
        self.checked += n

    def note(self, text: str) -> None:
        self.notes.append(text)

    def undecided(self, reason: str) -> None:
        if self.passed is not False:
            self.passed = None
        self.notes.append(reason)

    def add(self, child: "Report") -> "Report":
        """Attach a sub-report; the verdict becomes the weakest of the two."""
        self.children.append(child)
        self.checked += child.checked
        if child.passed is False:
            self.passed = False
        elif child.passed is None and self.passed is True:
            self.passed = None
        return child

    def __bool__(self) -> bool:
        return self.passed is True

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "UNDECIDED"}[self.passed]

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}[{self.status}] {self.title} (checked {self.checked})"]
        for note in self.notes:
            lines.append(f"{pad}  note: {note}")
        for label, residual in self.failures:
            lines.append(f"{pad}  failure {label}: {residual}")
        for child in self.children:
            lines.append(child.render(indent + 1))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()
