"""
linkage-lab - Local invariants
Lengths, dimensions, Hilbert-Samuel functions and multiplicities of
R/A localized at the variable ideal, read off the local leading ideal;
minimal generators, socle type and embedding dimension.
"""
import logging
from enum import Enum
from itertools import combinations
from typing import List, Optional, Sequence, Union

import config
from core.errors import BudgetExceededError, DomainError, EmptyRingError, NotArtinianError
from core.ideals import colon, equals, ideal_power, ideal_product, ideal_sum
from core.monomials import Monomial, in_monomial_ideal, mono_one, mono_support
from core.polynomial import Polynomial
from core.rings import Ideal, RingPresentation
from models.linkage import SocleData
from models.tables import HilbertSamuelTable

log = logging.getLogger("linkage_lab.invariants")


class Infinite(Enum):
    INFINITE = "infinite"

    def __repr__(self):
        return "INFINITE"


INFINITE = Infinite.INFINITE
LengthValue = Union[int, Infinite]


# ── Staircase helpers ────────────────────────────────────

def is_artinian_leads(leads: Sequence[Monomial], nvars: int) -> bool:
    """Every variable has a pure power among the leading monomials."""
    pure = set()
    for m in leads:
        support = mono_support(m)
        if len(support) == 1:
            pure |= support
        elif not support:
            return True
    return len(pure) == nvars


def standard_counts(leads: Sequence[Monomial], nvars: int, max_degree: int) -> List[int]:
    """Number of standard monomials in each degree 0..max_degree."""
    one = mono_one(nvars)
    if in_monomial_ideal(one, leads):
        return [0] * (max_degree + 1)
    counts = [1]
    layer = {one}
    for _ in range(max_degree):
        nxt = set()
        for m in layer:
            for i in range(nvars):
                e = list(m)
                e[i] += 1
                e = tuple(e)
                if e not in nxt and not in_monomial_ideal(e, leads):
                    nxt.add(e)
        counts.append(len(nxt))
        layer = nxt
    return counts


def _count_standard(leads: Sequence[Monomial], nvars: int) -> int:
    total = 0
    degree_bound = 1 + sum(max((m[i] for m in leads if mono_support(m) == {i}), default=0)
                           for i in range(nvars))
    for c in standard_counts(leads, nvars, degree_bound):
        total += c
    return total


def _independent_dimension(leads: Sequence[Monomial], nvars: int) -> int:
    supports = [mono_support(m) for m in leads]
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return -1


# ── Lengths and dimensions ───────────────────────────────

def length_of_quotient(A: Ideal) -> LengthValue:
    """λ(R/A) at the variable ideal; INFINITE when the quotient is not Artinian."""
    leads = A.local_leads()
    n = A.ring.nvars
    if not is_artinian_leads(leads, n):
        return INFINITE
    return _count_standard(leads, n)


def krull_dim(A: Ideal) -> int:
    leads = A.local_leads()
    if in_monomial_ideal(mono_one(A.ring.nvars), leads):
        raise EmptyRingError()
    return _independent_dimension(leads, A.ring.nvars)


def ring_dim(ring: RingPresentation) -> int:
    return krull_dim(ring.zero_ideal())


def height(A: Ideal) -> int:
    """dim R − dim R/A; valid for the equidimensional catenary rings used here."""
    if A.is_unit() or in_monomial_ideal(mono_one(A.ring.nvars), A.local_leads()):
        raise DomainError("height of the unit ideal")
    return ring_dim(A.ring) - krull_dim(A)


def length_between(larger: Ideal, smaller: Ideal) -> int:
    """λ(larger/smaller) for smaller ⊆ larger with Artinian quotients."""
    a, b = length_of_quotient(smaller), length_of_quotient(larger)
    if a is INFINITE or b is INFINITE:
        raise NotArtinianError()
    return a - b


# ── Hilbert-Samuel function and multiplicity ─────────────

def _is_variable_ideal(q: Ideal) -> bool:
    return equals(q, q.ring.maximal_ideal())


def hilbert_samuel(A: Ideal, q: Ideal, s_max: int) -> HilbertSamuelTable:
    """λ(R/(A + q^s)) for s = 1..s_max."""
    table = _start_table(A, q)
    _fill(table, A, q, s_max)
    return table


def _start_table(A: Ideal, q: Ideal) -> HilbertSamuelTable:
    A.same_ring(q)
    if not q.in_variable_ideal():
        raise NotArtinianError("filter ideal not contained in the variable ideal")
    if length_of_quotient(ideal_sum(A, q)) is INFINITE:
        raise NotArtinianError()
    return HilbertSamuelTable(base=A, filter_ideal=q, dimension=krull_dim(A))


def _fill(table: HilbertSamuelTable, A: Ideal, q: Ideal, s_max: int):
    start = len(table.values) + 1
    if start > s_max:
        return
    n = A.ring.nvars
    if _is_variable_ideal(q):
        counts = standard_counts(A.local_leads(), n, s_max - 1)
        running = sum(counts[:start - 1])
        for s in range(start, s_max + 1):
            running += counts[s - 1]
            table.extend(running)
        return
    for s in range(start, s_max + 1):
        value = length_of_quotient(ideal_sum(A, ideal_power(q, s)))
        if value is INFINITE:
            raise NotArtinianError()
        table.extend(value)


def _stable(row: List[int], runs: int) -> bool:
    return len(row) >= runs and len(set(row[-runs:])) == 1


def multiplicity_table(A: Ideal, q: Ideal, s_max: Optional[int] = None) -> HilbertSamuelTable:
    """Grow the table from d+4 until the d-th difference repeats STABILIZATION_RUNS times."""
    s_max = s_max or config.DEFAULT_SMAX
    runs = config.STABILIZATION_RUNS
    table = _start_table(A, q)
    d = table.dimension
    target = min(d + 4, s_max)
    _fill(table, A, q, target)
    while not _stable(table.top_row(), runs):
        if target >= s_max:
            log.warning(f"multiplicity of {A.to_text()} not stable within s <= {s_max}")
            raise BudgetExceededError(f"budget exceeded: no stable {d}-th difference within sMax = {s_max}",
                                      table)
        target += 1
        _fill(table, A, q, target)
    table.multiplicity = table.top_row()[-1]
    log.debug(f"multiplicity {table.multiplicity} (dim {d}) stable at s = {target}")
    return table


def multiplicity(A: Ideal, q: Ideal, s_max: Optional[int] = None) -> int:
    return multiplicity_table(A, q, s_max).multiplicity


# ── Generators and socle ─────────────────────────────────

def min_gens(A: Ideal) -> List[Polynomial]:
    """A minimal local generating set, discarding generators greedily by degree."""
    ring = A.ring
    ordered = sorted((g for g in A.gens if not ring.is_zero(g)), key=lambda g: g.total_degree())
    mA = ideal_product(ring.maximal_ideal(), A)
    kept: List[Polynomial] = []
    for idx, g in enumerate(ordered):
        others = Ideal(ring, kept + ordered[idx + 1:])
        if ideal_sum(others, mA).contains(g):
            continue
        kept.append(g)
    return kept


def socle_type(J: Ideal) -> SocleData:
    """Socle (J : m) of R/J and its dimension over the residue field."""
    total = length_of_quotient(J)
    if total is INFINITE:
        raise NotArtinianError("socle requires an Artinian quotient")
    socle = colon(J, J.ring.maximal_ideal())
    return SocleData(socle_ideal=socle, type=total - length_of_quotient(socle))


def embedding_dim(ring: RingPresentation) -> int:
    """μ(m) = λ(R/m²) − 1."""
    m2 = ideal_power(ring.maximal_ideal(), 2)
    return max(length_of_quotient(m2) - 1, 0)
