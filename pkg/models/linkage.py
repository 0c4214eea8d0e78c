"""
linkage-lab - Linkage records
Plain results passed between core operations, verifiers and the runner.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple


class TriState(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class NotWithin:
    """No reduction number up to n_max."""
    n_max: int

    def to_dict(self):
        return {"not_within": self.n_max}


@dataclass(frozen=True)
class SocleData:
    socle_ideal: Any
    type: int


@dataclass
class LinkData:
    """I = (z) : p together with the data it was built from."""
    ring: Any
    target: Any
    z: Tuple[Any, ...]
    J: Any
    I: Any
    p_is_prime: bool = False
    L1: TriState = TriState.UNKNOWN
    L2: TriState = TriState.UNKNOWN

    @property
    def g(self) -> int:
        return len(self.z)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ideal": self.I.gb_text(),
            "g": self.g,
            "p_is_prime": self.p_is_prime,
            "L1": self.L1.value,
            "L2": self.L2.value,
        }


@dataclass
class ReesPresentation:
    """R[It] ≅ k[x, T]/P, with T_i matched to the i-th generator of I."""
    ring: Any                 # RingPresentation k[x, T]
    ideal: Any                # P
    generators: Tuple[Any, ...]
    x_count: int
    t_names: Tuple[str, ...]

    @property
    def irrelevant(self):
        """M = (x, T), the full variable ideal of the presentation ring."""
        return self.ring.maximal_ideal()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "variables": list(self.ring.variables),
            "generators": {t: g.to_text() for t, g in zip(self.t_names, self.generators)},
            "presentation": self.ideal.gb_text(),
        }


@dataclass
class CanonicalComponents:
    """Graded components ω_1..ω_kMax of the canonical module of R[It]."""
    g: int
    L: Any
    components: List[Any] = field(default_factory=list)
    stabilization_depth: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "g": self.g,
            "L": self.L.gb_text(),
            "jDepth": self.stabilization_depth,
            "components": [c.gb_text() for c in self.components],
        }
