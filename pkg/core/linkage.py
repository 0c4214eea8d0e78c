"""
linkage-lab - Linkage
Direct links, reduction numbers, self-linkage and the graded components
of the canonical module of R[It].
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from core.errors import DomainError, InapplicableError, RegularSequenceError, StabilizationError
from core.ideals import (
    JacobianStatus,
    colon,
    contains,
    equals,
    first_irregular_index,
    ideal_power,
    ideal_product,
    intersect,
    jacobian_regular_at,
    symbolic_square_member,
)
from core.invariants import height
from core.polynomial import Polynomial
from core.rings import Ideal
from models.linkage import CanonicalComponents, LinkData, NotWithin, TriState

log = logging.getLogger("linkage_lab.linkage")


def _require_regular(J: Ideal):
    index = first_irregular_index(list(J.gens), J.ring)
    if index is not None:
        raise RegularSequenceError(index)


def linkage_conditions(p: Ideal, z: Sequence[Polynomial]) -> Tuple[TriState, TriState]:
    """(L1, L2): R_p not regular; or R_p regular of dimension >= 2 with two z_i in p^(2)."""
    status = jacobian_regular_at(p)
    if status is JacobianStatus.INCONCLUSIVE:
        return TriState.UNKNOWN, TriState.UNKNOWN
    if status is JacobianStatus.NOT_REGULAR:
        return TriState.HOLDS, TriState.FAILS
    if height(p) < 2:
        return TriState.FAILS, TriState.FAILS
    in_square = sum(1 for zi in z if symbolic_square_member(zi, p))
    return TriState.FAILS, TriState.HOLDS if in_square >= 2 else TriState.FAILS


def link(J: Ideal, A: Ideal, p_is_prime: bool = False) -> LinkData:
    """I = J : A for J generated by a regular sequence inside A.

    L1/L2 are only meaningful at a prime, so they stay unknown unless A is asserted prime.
    """
    J.same_ring(A)
    _require_regular(J)
    if not contains(A, J):
        raise DomainError("the regular sequence is not contained in the ideal being linked")
    I = colon(J, A)
    log.debug(f"link {J.to_text()} : {A.to_text()} = {I.gb_text()}")
    data = LinkData(ring=J.ring, target=A, z=J.gens, J=J, I=I, p_is_prime=p_is_prime)
    if p_is_prime:
        data.L1, data.L2 = linkage_conditions(A, J.gens)
    return data


def double_link(J: Ideal, p: Ideal) -> Ideal:
    """J : (J : p); returns p again for unmixed p in a Cohen-Macaulay ring."""
    return colon(J, colon(J, p))


def reduction_number(I: Ideal, J: Ideal, n_max: int) -> Union[int, NotWithin]:
    """Least n <= n_max with I^{n+1} = J·I^n."""
    I.same_ring(J)
    if not contains(I, J):
        raise DomainError("J is not contained in I")
    power = I.ring.unit_ideal()          # I^n
    for n in range(n_max + 1):
        nxt = ideal_product(power, I) if n else Ideal(I.ring, I.gens)
        if contains(ideal_product(J, power), nxt):
            return n
        power = nxt
    return NotWithin(n_max)


def is_self_linked(I: Ideal, J: Ideal) -> bool:
    I.same_ring(J)
    if not contains(I, J):
        raise DomainError("J is not contained in I")
    _require_regular(J)
    return equals(colon(J, I), I)


# ── Canonical module components ──────────────────────────

class _ColonCache:
    """(J^e : I^j), built by successive colons and reused across k."""

    def __init__(self, I: Ideal, J: Ideal):
        self.I = I
        self.J = J
        self.chains: Dict[int, List[Ideal]] = {}

    def get(self, e: int, j: int) -> Ideal:
        chain = self.chains.setdefault(e, [ideal_power(self.J, e)])
        while len(chain) <= j:
            previous = chain[-1]
            chain.append(previous if previous.is_unit() else colon(previous, self.I))
        return chain[j]


def _components(I: Ideal, g: int, k_max: int, depth: int, cache: _ColonCache) -> List[Ideal]:
    """ω_k = ∩_{j=0..depth} (ωA_{k+j} : I^j), ωA_m = R for m < g and J^{m−g+1} otherwise."""
    unit = I.ring.unit_ideal()
    components = []
    for k in range(1, k_max + 1):
        omega = unit
        for j in range(depth + 1):
            m = k + j
            if m <= g - 1:
                continue
            part = cache.get(m - g + 1, j)
            omega = part if omega.is_unit() else intersect(omega, part)
        components.append(omega)
    return components


def canonical_components(I: Ideal, J: Ideal, k_max: Optional[int] = None,
                         j_depth: Optional[int] = None) -> CanonicalComponents:
    I.same_ring(J)
    g = height(I)
    if g < 2:
        raise InapplicableError(f"canonical form needs height >= 2, got {g}")
    if not equals(ideal_power(I, 2), ideal_product(J, I)):
        raise InapplicableError("hypotheses violated: I^2 != JI")
    k_max = k_max if k_max is not None else g + 2
    j_depth = j_depth if j_depth is not None else g + 2

    cache = _ColonCache(I, J)
    first = _components(I, g, k_max, j_depth, cache)
    second = _components(I, g, k_max, j_depth + 1, cache)
    if not all(equals(a, b) for a, b in zip(first, second)):
        log.error(f"canonical components not stable at depth {j_depth}")
        raise StabilizationError(f"canonical components differ between depth {j_depth} and {j_depth + 1}",
                                 [first, second])
    L = colon(J, I)
    return CanonicalComponents(g=g, L=L, components=first, stabilization_depth=j_depth)


def expected_canonical_components(g: int, L: Ideal, I: Ideal, k_max: int) -> List[Ideal]:
    """R in degrees 1..g−2, then L·I^{k−g+1}."""
    if g < 2:
        raise InapplicableError(f"canonical form needs height >= 2, got {g}")
    if not contains(L, I):
        raise DomainError("hypotheses violated: I^2 not in J")
    expected = []
    for k in range(1, k_max + 1):
        if k <= g - 2:
            expected.append(I.ring.unit_ideal())
        else:
            expected.append(ideal_product(L, ideal_power(I, k - g + 1)))
    return expected


def graded_link_multiplicity(degrees: Sequence[int], base_multiplicity: int) -> int:
    """(Σ_{i<d} a_1⋯a_i)·e(R) for ascending degrees a_1 <= ... <= a_d."""
    a = sorted(degrees)
    total, product = 0, 1
    for i in range(len(a)):
        total += product
        product *= a[i]
    return total * base_multiplicity


def generator_degrees(z: Sequence[Polynomial]) -> Optional[Tuple[int, ...]]:
    """Degrees of homogeneous generators, or None when one is not homogeneous."""
    if not all(f.is_homogeneous() for f in z):
        return None
    return tuple(sorted(f.total_degree() for f in z))
