"""
linkage-lab - Ideal calculus
Sums, products, powers, intersections, colons, saturation, elimination,
regular sequences, symbolic-square membership and the Jacobian test.
"""
import logging
from enum import Enum
from itertools import combinations, combinations_with_replacement
from typing import List, Optional, Sequence

import config
from core.errors import DomainError, StructuralError
from core.groebner import buchberger
from core.monomials import GREVLEX, block_order, minimal_monomials, mono_div, mono_gcd, mono_lcm
from core.polynomial import Polynomial, PolyRing, normalize
from core.rings import Ideal, RingPresentation

log = logging.getLogger("linkage_lab.ideals")


class JacobianStatus(Enum):
    REGULAR = "regular"
    NOT_REGULAR = "not-regular"
    INCONCLUSIVE = "inconclusive"


# ── Generators ───────────────────────────────────────────

def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    A.same_ring(B)
    return Ideal(A.ring, A.gens + B.gens)


def ideal_product(A: Ideal, B: Ideal) -> Ideal:
    A.same_ring(B)
    return Ideal(A.ring, [f * g for f in A.gens for g in B.gens])


def ideal_power(A: Ideal, n: int) -> Ideal:
    """A^n from generator multisets; A^0 is the unit ideal, (0)^n the zero ideal."""
    if n < 0:
        raise DomainError("negative ideal power")
    if n == 0:
        return A.ring.unit_ideal()
    products = []
    for combo in combinations_with_replacement(A.gens, n):
        p = combo[0]
        for g in combo[1:]:
            p = p * g
        products.append(p)
    return Ideal(A.ring, products)


def equals(A: Ideal, B: Ideal) -> bool:
    A.same_ring(B)
    return A.gb().polys == B.gb().polys


def contains(A: Ideal, B: Ideal) -> bool:
    """A ⊇ B."""
    A.same_ring(B)
    return all(A.contains(g) for g in B.gens)


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


# ── Elimination ──────────────────────────────────────────

def eliminate_polys(polys: Sequence[Polynomial], drop: int,
                    target: Optional[PolyRing] = None) -> List[Polynomial]:
    """Generators of (polys) ∩ k[x_{drop+1}..x_n], mapped into `target`.

    The first `drop` variables form the outer block of the elimination order.
    """
    if not polys:
        return []
    source = polys[0].ring
    inner = source.order if source.order.kind in ("lex", "grevlex") else GREVLEX
    elim_ring = PolyRing(source.variables, source.field, block_order(drop, GREVLEX, inner))
    gb = buchberger([normalize(elim_ring, f.terms) for f in polys], poly_ring=elim_ring)
    if target is None:
        target = PolyRing(source.variables[drop:], source.field, GREVLEX)
    kept = []
    for g in gb.polys:
        if not any(g.lm[:drop]):
            kept.append(normalize(target, ((m[drop:], c) for m, c in g.terms)))
    log.debug(f"eliminated {drop} variable(s): {len(gb)} basis elements, {len(kept)} kept")
    return kept


def eliminate(I: Ideal, drop_count: int) -> Ideal:
    """I ∩ k[remaining variables], as an ideal of the smaller polynomial ring."""
    if not 0 <= drop_count <= I.ring.nvars:
        raise StructuralError(f"cannot drop {drop_count} of {I.ring.nvars} variables")
    smaller = RingPresentation(I.ring.variables[drop_count:], I.ring.field, GREVLEX)
    polys = list(I.gens) + list(I.ring.quotient_gens)
    return Ideal(smaller, eliminate_polys(polys, drop_count, smaller.poly_ring))


def _with_leading_variable(ring: RingPresentation, base: str):
    """Ring k[u, x] with a fresh first variable, and the embedding x ↦ x."""
    name = base
    while name in ring.variables:
        name = "_" + name
    bigger = PolyRing((name,) + ring.variables, ring.field, GREVLEX)
    positions = list(range(1, ring.nvars + 1))
    return bigger, positions


def _monomial_fast_path(*ideals: Ideal) -> bool:
    return (config.MONOMIAL_FAST_PATH
            and not ideals[0].ring.has_quotient()
            and all(I.is_monomial() for I in ideals))


def _monomial_ideal(ring: RingPresentation, monos) -> Ideal:
    one = ring.field.one
    return Ideal(ring, [ring.poly_ring.term(m, one) for m in minimal_monomials(sorted(monos, key=sum))])


# ── Intersection, colon, saturation ──────────────────────

def _meet(ring: RingPresentation, left: Sequence[Polynomial],
          right: Sequence[Polynomial]) -> List[Polynomial]:
    """Generators of (left) ∩ (right) in k[x]; Q is not adjoined here."""
    if not left or not right:
        return []
    bigger, positions = _with_leading_variable(ring, "u")
    u = bigger.gen(0)
    gens = [u * a.embed(bigger, positions) for a in left]
    gens += [(1 - u) * b.embed(bigger, positions) for b in right]
    return eliminate_polys(gens, 1, ring.poly_ring)


def intersect(A: Ideal, B: Ideal) -> Ideal:
    """A ∩ B, eliminating u from u·(A + Q) + (1 − u)·(B + Q)."""
    A.same_ring(B)
    ring = A.ring
    if A.is_unit():
        return B
    if B.is_unit():
        return A
    if _monomial_fast_path(A, B):
        return _monomial_ideal(ring, [mono_lcm(a.lm, b.lm) for a in A.gens for b in B.gens])
    quotient = list(ring.quotient_gens)
    return Ideal(ring, _meet(ring, list(A.gens) + quotient, list(B.gens) + quotient))


def _colon_principal(A: Ideal, b: Polynomial) -> Ideal:
    ring = A.ring
    if A.contains(b):
        return ring.unit_ideal()
    if _monomial_fast_path(A) and b.is_monomial():
        m = b.lm
        return _monomial_ideal(ring, [mono_div(a.lm, mono_gcd(a.lm, m)) for a in A.gens])
    meet = _meet(ring, list(A.gens) + list(ring.quotient_gens), [b])
    return Ideal(ring, [g.exact_div(b) for g in meet])


def colon(A: Ideal, B: Ideal) -> Ideal:
    """{f : f·B ⊆ A}, intersecting the principal colons over the generators of B."""
    A.same_ring(B)
    ring = A.ring
    live = [b for b in B.gens if not ring.is_zero(b)]
    if not live:
        raise DomainError("colon by the zero ideal")
    if A.is_unit() or contains(A, B):
        return ring.unit_ideal()
    result = None
    for b in live:
        part = _colon_principal(A, b)
        result = part if result is None else intersect(result, part)
    return result


def colon_power(A: Ideal, I: Ideal, j: int) -> Ideal:
    """A : I^j as j successive colons by I."""
    for _ in range(j):
        if A.is_unit():
            break
        A = colon(A, I)
    return A


def saturate(A: Ideal, f: Polynomial, method: Optional[str] = None) -> Ideal:
    """A : f^∞, by the Rabinowitsch trick or by iterated colons."""
    ring = A.ring
    if ring.is_zero(f):
        raise DomainError("saturation by zero")
    method = method or config.SATURATION_METHOD
    if method == "iterated":
        F = Ideal(ring, [f])
        current = A
        while True:
            nxt = colon(current, F)
            if equals(nxt, current):
                return current
            current = nxt
    if method != "rabinowitsch":
        raise DomainError(f"unknown saturation method: {method}")
    bigger, positions = _with_leading_variable(ring, "w")
    w = bigger.gen(0)
    gens = [a.embed(bigger, positions) for a in A.gens]
    gens += [q.embed(bigger, positions) for q in ring.quotient_gens]
    gens.append(1 - w * f.embed(bigger, positions))
    return Ideal(ring, eliminate_polys(gens, 1, ring.poly_ring))


# ── Regular sequences and local conditions ───────────────

def first_irregular_index(z: Sequence[Polynomial], ring: RingPresentation) -> Optional[int]:
    """1-based index of the first z_i that is a zero divisor modulo the previous ones."""
    for i, zi in enumerate(z):
        previous = Ideal(ring, z[:i])
        # a unit of the local ring never starts or extends a regular sequence
        if ring.is_zero(zi) or zi.constant_term() or previous.contains(zi):
            return i + 1
        if not equals(colon(previous, Ideal(ring, [zi])), previous):
            return i + 1
    return None


def is_regular_sequence(z: Sequence[Polynomial], ring: RingPresentation) -> bool:
    return first_irregular_index(z, ring) is None


def symbolic_square_member(z: Polynomial, p: Ideal) -> bool:
    """z ∈ p^(2), tested as (p² : z) ⊄ p."""
    if p.is_unit():
        raise DomainError("symbolic square of the unit ideal")
    if p.ring.is_zero(z):
        return True
    p2 = ideal_power(p, 2)
    return not contains(p, colon(p2, Ideal(p.ring, [z])))


def jacobian_minors(polys: Sequence[Polynomial], h: int) -> List[Polynomial]:
    """All h×h minors of the Jacobian matrix of `polys`."""
    if not polys or h <= 0:
        return []
    n = polys[0].ring.nvars
    matrix = [[f.derivative(i) for i in range(n)] for f in polys]
    minors = []
    for rows in combinations(range(len(polys)), h):
        for cols in combinations(range(n), h):
            det = _determinant([[matrix[r][c] for c in cols] for r in rows])
            if det:
                minors.append(det)
    return minors


def _determinant(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = None
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = _determinant([r[:j] + r[j + 1:] for r in rows[1:]])
        term = entry * minor if j % 2 == 0 else -(entry * minor)
        total = term if total is None else total + term
    return total if total is not None else rows[0][0].ring.zero()


def jacobian_regular_at(p: Ideal) -> JacobianStatus:
    """Jacobian criterion for R_p; characteristic p is never decided."""
    from core.invariants import height

    ring = p.ring
    if not ring.has_quotient():
        return JacobianStatus.REGULAR
    if ring.field.characteristic != 0:
        return JacobianStatus.INCONCLUSIVE
    ambient = RingPresentation(ring.variables, ring.field, ring.order)
    h = height(Ideal(ambient, ring.quotient_gens))
    minors = jacobian_minors(list(ring.quotient_gens), h)
    if not minors:
        return JacobianStatus.NOT_REGULAR
    M = Ideal(ring, minors)
    status = JacobianStatus.NOT_REGULAR if contains(p, M) else JacobianStatus.REGULAR
    log.debug(f"jacobian test at {p.to_text()}: height {h}, {len(minors)} minors -> {status.value}")
    return status
