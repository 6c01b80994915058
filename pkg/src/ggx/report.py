"""Validation reports and the error types shared across the package.

Every validator returns a :class:`ValidationReport` instead of raising, so
callers (tests, the CLI) can inspect which axiom failed and on which
witness.  Validators scan in canonical index order, which makes the first
reported witness deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass


class GgxError(Exception):
    """Base class for errors raised by this package."""


class ParseError(GgxError):
    """A document is syntactically or structurally malformed.

    ``path`` points at the offending entry, e.g. ``"table[1][2]"``.
    """

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class NotComposableError(GgxError):
    """Arrows or squares whose endpoints do not match were composed."""


class DomainMismatchError(GgxError):
    """Maps with incompatible domain/codomain were combined."""


class BoundExceededError(GgxError):
    """An enumeration was requested beyond the configured order bound."""


class InvalidStructureError(GgxError):
    """A structure failed validation where a valid one was required."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.describe())


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an axiom check.

    ``axiom`` is a short stable tag (``"CM1"``, ``"latin-square"``, ...),
    ``where`` locates the failure inside a composite structure
    (``"arrows"``, ``"epsh"``, ``"level-objects"``, ...) and ``witness``
    holds the element indices exhibiting the violation.
    """

    ok: bool
    axiom: str | None = None
    where: str = ""
    witness: tuple = ()
    message: str = ""

    def describe(self) -> str:
        if self.ok:
            return "valid"
        loc = f" [{self.where}]" if self.where else ""
        wit = f" witness={self.witness}" if self.witness else ""
        msg = f": {self.message}" if self.message else ""
        return f"invalid{loc} axiom={self.axiom}{wit}{msg}"

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "axiom": self.axiom,
            "where": self.where,
            "witness": list(self.witness),
            "message": self.message,
        }

    def require(self) -> None:
        if not self.ok:
            raise InvalidStructureError(self)


VALID = ValidationReport(ok=True)


def fail(axiom: str, witness: tuple = (), message: str = "",
         where: str = "") -> ValidationReport:
    return ValidationReport(ok=False, axiom=axiom, where=where,
                            witness=witness, message=message)


def nested(where: str, inner: ValidationReport) -> ValidationReport:
    """Re-scope a component's failure under ``where``."""
    if inner.ok:
        return inner
    prefix = f"{where}.{inner.where}" if inner.where else where
    return ValidationReport(ok=False, axiom=inner.axiom, where=prefix,
                            witness=inner.witness, message=inner.message)
