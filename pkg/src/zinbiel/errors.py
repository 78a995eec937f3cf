"""Exception hierarchy and the shared verdict type."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class ZinbielError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(ZinbielError, ValueError):
    pass


class ParseError(ZinbielError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GradingError(ZinbielError, ValueError):
    """A product or map does not respect the Z2-grading."""


class UnsupportedIdentity(ZinbielError, ValueError):
    pass


class PreconditionError(ZinbielError, ValueError):
    """A named precondition of a construction failed."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        super().__init__(f"{condition}: {detail}" if detail else condition)


class TheoremContradiction(ZinbielError, AssertionError):
    """Raised when a computed object contradicts a proven structural result."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: truthy iff it passed.

    ``what`` names the failed condition and ``witness`` carries the basis
    tuple (labels) on which it failed; ``residual`` is the offending value.
    """

    ok: bool
    what: str = ""
    witness: tuple = ()
    residual: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, **details) -> "Verdict":
        return cls(True, details=details)

    def to_dict(self) -> dict:
        d = {"ok": self.ok}
        if not self.ok:
            d["what"] = self.what
            d["witness"] = list(self.witness)
            if self.residual is not None:
                d["residual"] = str(self.residual)
        return d
