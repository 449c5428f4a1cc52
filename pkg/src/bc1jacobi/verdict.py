from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

EXACT = "exact"
TOLERANCE = "tolerance"
FAIL = "fail"


@dataclass(frozen=True)
class OperatorVerdict:
    """Outcome of checking one identity.

    ``status`` is ``"exact"`` when the residual is identically zero in exact
    arithmetic, ``"tolerance"`` when a floating residual is below ``tol`` and
    ``"fail"`` otherwise.
    """

    identity: str
    status: str
    residual: float
    detail: str = ""
    data: dict = field(default_factory=dict, compare=False)

    @property
    def holds(self) -> bool:
        return self.status != FAIL

    def __bool__(self):
        return self.holds


def from_residual(identity, residual, tol=None, detail="", **data):
    """Build a verdict from a residual.

    With ``tol=None`` the residual must be exactly zero.
    """
    if tol is None:
        status = EXACT if residual == 0 else FAIL
    elif residual == 0 and isinstance(residual, (int, Fraction)):
        status = EXACT
    else:
        status = TOLERANCE if abs(residual) <= tol else FAIL
    return OperatorVerdict(identity, status, float(residual), detail, data)


def combine(identity, verdicts, detail=""):
    """Fold several verdicts into one; fails if any part fails."""
    verdicts = list(verdicts)
    if not verdicts:
        return OperatorVerdict(identity, EXACT, 0.0, detail)
    residual = max(v.residual for v in verdicts)
    if any(not v.holds for v in verdicts):
        status = FAIL
        failed = [v.identity for v in verdicts if not v.holds]
        detail = (detail + "; " if detail else "") + "failed: " + ", ".join(failed[:5])
    elif all(v.status == EXACT for v in verdicts):
        status = EXACT
    else:
        status = TOLERANCE
    return OperatorVerdict(identity, status, residual, detail, {"cases": len(verdicts)})
