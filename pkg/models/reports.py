"""
linkage-lab - Verification reports
A report lists the hypotheses a verifier looked at, the values it computed,
the conclusion claims it tested and the reduced bases witnessing each claim.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class HypothesisStatus(Enum):
    CHECKED = "checked"
    ASSERTED = "asserted"
    UNASSERTED = "unasserted"
    OUT_OF_SCOPE = "out-of-scope"


class Conclusion(Enum):
    PASS = "pass"
    FAIL = "fail"
    INAPPLICABLE = "inapplicable"
    ERROR = "error"


@dataclass
class Hypothesis:
    name: str
    status: HypothesisStatus
    passed: Optional[bool] = None
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        d = {"name": self.name, "status": self.status.value, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Certificate:
    """Two reduced bases whose comparison decides a claim."""
    claim: str
    left: List[str]
    right: List[str]
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"claim": self.claim, "left": self.left, "right": self.right, "holds": self.holds}


@dataclass
class VerificationReport:
    theorem: str
    hypotheses: List[Hypothesis] = field(default_factory=list)
    values: Dict[str, Any] = field(default_factory=dict)
    claims: Dict[str, bool] = field(default_factory=dict)
    certificates: List[Certificate] = field(default_factory=list)
    error: Optional[str] = None

    # ── recording ────────────────────────────────────────
    def check(self, name: str, passed: bool, detail: Optional[str] = None) -> bool:
        self.hypotheses.append(Hypothesis(name, HypothesisStatus.CHECKED, bool(passed), detail))
        return bool(passed)

    def assumption(self, name: str, asserted: bool):
        """An undecidable hypothesis: recorded as asserted by the user or left open."""
        if asserted:
            self.hypotheses.append(Hypothesis(name, HypothesisStatus.ASSERTED, True))
        else:
            self.hypotheses.append(Hypothesis(name, HypothesisStatus.UNASSERTED))

    def out_of_scope(self, name: str):
        self.hypotheses.append(Hypothesis(name, HypothesisStatus.OUT_OF_SCOPE))
        self.values[name] = {"status": "out-of-scope"}

    def claim(self, name: str, holds: bool, left=None, right=None) -> bool:
        holds = bool(holds)
        self.claims[name] = holds
        self.values[name] = holds
        if left is not None and right is not None:
            self.certificates.append(Certificate(name, left.gb_text(), right.gb_text(), holds))
        return holds

    def fail_with(self, message: str):
        self.error = message

    # ── outcome ──────────────────────────────────────────
    def hypotheses_hold(self) -> bool:
        return all(h.passed for h in self.hypotheses if h.status is HypothesisStatus.CHECKED)

    @property
    def conclusion(self) -> Conclusion:
        if self.error is not None:
            return Conclusion.ERROR
        if not self.hypotheses_hold():
            return Conclusion.INAPPLICABLE
        return Conclusion.PASS if all(self.claims.values()) else Conclusion.FAIL

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "theorem": self.theorem,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "values": self.values,
            "conclusion": self.conclusion.value,
            "certificates": [c.to_dict() for c in self.certificates],
        }
        if self.error is not None:
            d["error"] = self.error
        return d
