"""
linkage-lab - Ring presentations and ideals
R = k[x_1..x_n]/Q localized at (x_1..x_n). Ideals of R are stored as
generator lists of their preimages in k[x]; Q is adjoined whenever a basis
is computed.
"""
import logging
import threading
from typing import Iterable, List, Optional, Sequence

from core.errors import StructuralError
from core.fields import QQ, Field
from core.groebner import GroebnerBasis, buchberger, local_leading_monomials, normal_form
from core.monomials import GREVLEX, Monomial, MonomialOrder
from core.polynomial import Polynomial, PolyRing

log = logging.getLogger("linkage_lab.rings")


class RingPresentation:
    """Ambient polynomial ring plus the defining ideal Q (possibly zero)."""

    def __init__(self, variables: Sequence[str], field: Field = QQ, order: MonomialOrder = GREVLEX,
                 quotient: Iterable = (), name: Optional[str] = None):
        self.poly_ring = PolyRing(variables, field, order)
        gens = []
        for q in quotient:
            if isinstance(q, str):
                q = self.poly_ring.parse(q)
            if q.ring != self.poly_ring:
                raise StructuralError(f"quotient generator {q} is not in {self.poly_ring}")
            if q:
                gens.append(q)
        self.quotient_gens = tuple(gens)
        self.name = name
        self._lock = threading.Lock()
        self._quotient_ideal = None

    @classmethod
    def from_poly_ring(cls, poly_ring: PolyRing, quotient: Iterable = (), name=None) -> "RingPresentation":
        return cls(poly_ring.variables, poly_ring.field, poly_ring.order, quotient, name)

    @property
    def variables(self):
        return self.poly_ring.variables

    @property
    def field(self) -> Field:
        return self.poly_ring.field

    @property
    def order(self) -> MonomialOrder:
        return self.poly_ring.order

    @property
    def nvars(self) -> int:
        return self.poly_ring.nvars

    def has_quotient(self) -> bool:
        return bool(self.quotient_gens)

    def __eq__(self, other):
        return (isinstance(other, RingPresentation) and self.poly_ring == other.poly_ring
                and self.quotient_gens == other.quotient_gens)

    def __hash__(self):
        return hash((self.poly_ring, self.quotient_gens))

    def __repr__(self):
        label = f"{self.field}[{','.join(self.variables)}]"
        if self.quotient_gens:
            label += " / (" + ", ".join(q.to_text() for q in self.quotient_gens) + ")"
        return label

    # ── elements and ideals ──────────────────────────────
    def parse(self, text: str) -> Polynomial:
        return self.poly_ring.parse(text)

    def var(self, name: str) -> Polynomial:
        return self.poly_ring.var(name)

    def ideal(self, gens: Iterable) -> "Ideal":
        return Ideal(self, gens)

    def zero_ideal(self) -> "Ideal":
        return Ideal(self, ())

    def unit_ideal(self) -> "Ideal":
        return Ideal(self, (self.poly_ring.one(),))

    def maximal_ideal(self) -> "Ideal":
        return Ideal(self, self.poly_ring.gens())

    def quotient_ideal(self) -> "Ideal":
        with self._lock:
            if self._quotient_ideal is None:
                self._quotient_ideal = Ideal(self, self.quotient_gens)
        return self._quotient_ideal

    def is_zero(self, f: Polynomial) -> bool:
        """True when f vanishes in R, i.e. f lies in Q."""
        return self.quotient_ideal().contains(f)


class Ideal:
    """Generator list bound to a RingPresentation, with write-once basis caches."""

    __slots__ = ("ring", "gens", "_lock", "_gb", "_local_leads")

    def __init__(self, ring: RingPresentation, gens: Iterable):
        self.ring = ring
        cleaned: List[Polynomial] = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Polynomial):
                g = ring.poly_ring.constant(g)
            if g.ring != ring.poly_ring:
                raise StructuralError(f"generator {g} is not in {ring.poly_ring}")
            if g and g not in cleaned:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._lock = threading.Lock()
        self._gb: Optional[GroebnerBasis] = None
        self._local_leads: Optional[List[Monomial]] = None

    def gb(self) -> GroebnerBasis:
        """Reduced global Groebner basis of the preimage gens + Q."""
        cached = self._gb
        if cached is not None:
            return cached
        with self._lock:
            if self._gb is None:
                self._gb = buchberger(self.gens, self.ring, poly_ring=self.ring.poly_ring)
            return self._gb

    def local_leads(self) -> List[Monomial]:
        """Minimal generators of the leading ideal of the localization at the variables."""
        cached = self._local_leads
        if cached is not None:
            return cached
        with self._lock:
            if self._local_leads is None:
                self._local_leads = local_leading_monomials(self.gens, self.ring,
                                                            poly_ring=self.ring.poly_ring)
            return self._local_leads

    def same_ring(self, other: "Ideal"):
        if self.ring != other.ring:
            raise StructuralError(f"ideals live in different rings: {self.ring} vs {other.ring}")

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb().polys)

    def contains(self, f) -> bool:
        if isinstance(f, Ideal):
            self.same_ring(f)
            return all(self.contains(g) for g in f.gens)
        if f.ring != self.ring.poly_ring:
            raise StructuralError(f"{f} is not in {self.ring.poly_ring}")
        return not self.reduce(f)

    __contains__ = contains

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gb().polys == other.gb().polys

    def __hash__(self):
        return hash((self.ring, self.gb().polys))

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def is_zero(self) -> bool:
        """True when every generator vanishes in R."""
        return all(self.ring.is_zero(g) for g in self.gens)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def in_variable_ideal(self) -> bool:
        return all(not g.constant_term() for g in self.gens)

    def to_text(self) -> str:
        return "(" + ", ".join(g.to_text() for g in self.gens) + ")"

    def gb_text(self) -> List[str]:
        return self.gb().to_text()

    def __repr__(self):
        return self.to_text()
