"""
linkage-lab - Groebner engine
Buchberger's algorithm with Gebauer-Moeller pair management, normal forms,
reduced bases and the homogenized local standard basis used for lengths.
"""
import heapq
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from core.errors import StructuralError
from core.monomials import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    minimal_monomials,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    weighted_order,
)
from core.polynomial import Polynomial, PolyRing, normalize

log = logging.getLogger("linkage_lab.groebner")

Pair = Tuple[int, int]


class _Desc:
    """Heap entry that pops the largest order key first."""

    __slots__ = ("key", "mono")

    def __init__(self, key, mono):
        self.key = key
        self.mono = mono

    def __lt__(self, other):
        return self.key > other.key


def _quotient_gens(ring) -> List[Polynomial]:
    return list(getattr(ring, "quotient_gens", ()) or ())


def normal_form(f: Polynomial, basis: Sequence[Polynomial], ring=None) -> Polynomial:
    """Remainder of f on division by `basis` (plus the quotient generators of `ring`).

    Always reduces the largest reducible term, using the first basis element
    whose leading monomial divides it.
    """
    reducers = [g for g in list(basis) + _quotient_gens(ring) if g]
    if not f or not reducers:
        return f
    poly_ring = f.ring
    for g in reducers:
        if g.ring != poly_ring:
            raise StructuralError(f"ring mismatch: {g.ring} vs {poly_ring}")
    key = poly_ring.order.key
    zero = poly_ring.field.zero
    leads = [(g.lm, g.lc, g.terms) for g in reducers]

    pending = dict(f.terms)
    heap = [_Desc(key(m), m) for m in pending]
    heapq.heapify(heap)
    remainder = []
    while heap:
        m = heapq.heappop(heap).mono
        c = pending.pop(m, None)
        if c is None:
            continue
        for lm, lc, terms in leads:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                factor = c / lc
                for gm, gc in terms[1:]:
                    mm = mono_mul(gm, shift)
                    old = pending.get(mm)
                    v = (zero if old is None else old) - factor * gc
                    if v:
                        pending[mm] = v
                        if old is None:
                            heapq.heappush(heap, _Desc(key(mm), mm))
                    elif old is not None:
                        del pending[mm]
                break
        else:
            remainder.append((m, c))
    return Polynomial(poly_ring, tuple(remainder))


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of monic f and g."""
    lcm = mono_lcm(f.lm, g.lm)
    one = f.ring.field.one
    return f.mul_term(mono_div(lcm, f.lm), one) - g.mul_term(mono_div(lcm, g.lm), one)


def select(G: List[Polynomial], P: Set[Pair], order: MonomialOrder) -> Pair:
    """Normal strategy: the pair with the smallest lcm, ties broken by index."""
    return min(P, key=lambda p: (order.key(mono_lcm(G[p[0]].lm, G[p[1]].lm)), p[1], p[0]))


def update(G: List[Polynomial], P: Set[Pair], f: Polynomial,
           order: MonomialOrder) -> Tuple[List[Polynomial], Set[Pair]]:
    """Add f to G and refresh the pair set with the Gebauer-Moeller criteria."""
    lmf = f.lm
    lmG = [g.lm for g in G]

    def keep(p):
        L = mono_lcm(lmG[p[0]], lmG[p[1]])
        return (not mono_divides(lmf, L)
                or L == mono_lcm(lmG[p[0]], lmf)
                or L == mono_lcm(lmG[p[1]], lmf))

    P = {p for p in P if keep(p)}

    groups = {}
    for i, lm in enumerate(lmG):
        groups.setdefault(mono_lcm(lm, lmf), []).append(i)
    minimal = []
    for L in sorted(groups, key=order.key):
        if all(not mono_divides(L_, L) for L_ in minimal):
            minimal.append(L)
    new = set()
    for L in minimal:
        if not any(mono_coprime(lmG[i], lmf) for i in groups[L]):
            new.add((min(groups[L]), len(G)))
    return G + [f], P | new


def minimalize(G: List[Polynomial]) -> List[Polynomial]:
    if not G:
        return []
    key = G[0].ring.order.key
    kept = []
    for f in sorted(G, key=lambda h: key(h.lm)):
        if all(not mono_divides(g.lm, f.lm) for g in kept):
            kept.append(f)
    return kept


def interreduce(G: List[Polynomial]) -> List[Polynomial]:
    """Reduced basis from a minimal one."""
    return [normal_form(g, G[:i] + G[i + 1:]).monic() for i, g in enumerate(G)]


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, order-tagged basis; equal bases mean equal ideals."""
    ring: PolyRing
    polys: Tuple[Polynomial, ...]

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.polys)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def leading_monomials(self) -> List[Monomial]:
        return [g.lm for g in self.polys]

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def is_zero(self) -> bool:
        return not self.polys

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.polys)

    def to_text(self) -> List[str]:
        return [g.to_text() for g in self.polys]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)


def buchberger(gens: Iterable[Polynomial], ring=None, poly_ring: Optional[PolyRing] = None) -> GroebnerBasis:
    """Reduced Groebner basis of `gens` plus the quotient generators of `ring`."""
    F = [f for f in list(gens) + _quotient_gens(ring) if f]
    if poly_ring is None:
        poly_ring = F[0].ring if F else getattr(ring, "poly_ring", None)
    if poly_ring is None:
        raise StructuralError("cannot infer the ring of an empty generator list")
    for f in F:
        if f.ring != poly_ring:
            raise StructuralError(f"ring mismatch: {f.ring} vs {poly_ring}")
    if not F:
        return GroebnerBasis(poly_ring, ())
    if any(f.is_constant() for f in F):
        return GroebnerBasis(poly_ring, (poly_ring.one(),))

    order = poly_ring.order
    G: List[Polynomial] = []
    P: Set[Pair] = set()
    for f in F:
        G, P = update(G, P, f.monic(), order)

    reductions = 0
    while P:
        i, j = select(G, P, order)
        P.remove((i, j))
        r = normal_form(spoly(G[i], G[j]), G)
        reductions += 1
        if r:
            if r.is_constant():
                log.debug(f"unit ideal detected after {reductions} reductions")
                return GroebnerBasis(poly_ring, (poly_ring.one(),))
            G, P = update(G, P, r.monic(), order)

    reduced = interreduce(minimalize(G))
    key = order.key
    reduced.sort(key=lambda g: key(g.lm))
    log.debug(f"buchberger: {len(F)} gens -> {len(reduced)} basis elements, "
              f"{reductions} pair reductions, order {order.describe()}")
    return GroebnerBasis(poly_ring, tuple(reduced))


# ── Local standard basis ─────────────────────────────────

def homogenizing_ring(poly_ring: PolyRing) -> PolyRing:
    """poly_ring plus a trailing homogenizer, ordered by degree, then by the
    homogenizer exponent, then grevlex."""
    name = "h"
    while name in poly_ring.variables:
        name = "_" + name
    n = poly_ring.nvars
    prefer_h = weighted_order((0,) * n + (1,), tie_break=GREVLEX)
    order = weighted_order((1,) * (n + 1), tie_break=prefer_h)
    return PolyRing(poly_ring.variables + (name,), poly_ring.field, order)


def local_leading_monomials(gens: Iterable[Polynomial], ring=None,
                            poly_ring: Optional[PolyRing] = None) -> List[Monomial]:
    """Minimal generators of the leading ideal of (gens + quotient) localized at
    the variable ideal, under a local degree order.

    The generators are homogenized, a Groebner basis is taken under an order
    that prefers high powers of the homogenizer, and the homogenizer is
    dropped from the leading monomials.
    """
    F = [f for f in list(gens) + _quotient_gens(ring) if f]
    if poly_ring is None:
        poly_ring = F[0].ring if F else getattr(ring, "poly_ring", None)
    if not F:
        return []
    if all(f.is_homogeneous() for f in F):
        # homogeneous: the global grevlex basis already is a local one
        grev = poly_ring.with_order(GREVLEX)
        gb = buchberger([normalize(grev, f.terms) for f in F], poly_ring=grev)
        return minimal_monomials(sorted(gb.leading_monomials(), key=sum))
    target = homogenizing_ring(poly_ring)
    gb = buchberger([f.homogenize(target) for f in F], poly_ring=target)
    leads = [m[:-1] for m in gb.leading_monomials()]
    log.debug(f"local standard basis: {len(gb)} elements in {target}")
    return minimal_monomials(sorted(leads, key=sum))
