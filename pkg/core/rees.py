"""
linkage-lab - Rees algebras
Presentations of R[It] and gr_I(R) by elimination, the fiber ring,
analytic spread and the multiplicity of R[It] at M = (m, It).
"""
import logging
from typing import List, Optional, Sequence, Tuple

from core.ideals import eliminate_polys
from core.invariants import height, krull_dim, multiplicity_table
from core.monomials import GREVLEX
from core.polynomial import PolyRing
from core.rings import Ideal, RingPresentation
from models.linkage import ReesPresentation
from models.tables import HilbertSamuelTable

log = logging.getLogger("linkage_lab.rees")


def fresh_names(taken: Sequence[str], stems: Sequence[str]) -> Tuple[str, ...]:
    """`stems`, each prefixed with underscores until none clashes with `taken`."""
    taken = set(taken)
    prefix = ""
    while any(prefix + s in taken for s in stems):
        prefix += "_"
    return tuple(prefix + s for s in stems)


def rees_presentation(I: Ideal) -> ReesPresentation:
    """P = (Q + (T_i − f_i t)) ∩ k[x, T]."""
    ring = I.ring
    gens = list(I.gens)
    n = ring.nvars
    t_names = fresh_names(ring.variables, [f"T{i + 1}" for i in range(len(gens))])
    (t_name,) = fresh_names(ring.variables + t_names, ["t"])

    big = PolyRing((t_name,) + ring.variables + t_names, ring.field, GREVLEX)
    x_pos = list(range(1, n + 1))
    t = big.gen(0)
    polys = [q.embed(big, x_pos) for q in ring.quotient_gens]
    for i, f in enumerate(gens):
        polys.append(big.gen(n + 1 + i) - f.embed(big, x_pos) * t)

    presentation_ring = RingPresentation(ring.variables + t_names, ring.field, GREVLEX)
    P = Ideal(presentation_ring, eliminate_polys(polys, 1, presentation_ring.poly_ring))
    log.debug(f"rees presentation of {I.to_text()}: {len(P.gens)} relations")
    return ReesPresentation(ring=presentation_ring, ideal=P, generators=tuple(gens),
                            x_count=n, t_names=t_names)


def lift_generators(rp: ReesPresentation) -> List:
    """The generators f_i of I as elements of k[x, T]."""
    target = rp.ring.poly_ring
    positions = list(range(rp.x_count))
    return [f.embed(target, positions) for f in rp.generators]


def fiber_ideal(rp: ReesPresentation) -> Ideal:
    """Presentation of the fiber ring R[It] ⊗ R/m as an ideal of k[T]."""
    x_vars = rp.ring.maximal_ideal().gens[:rp.x_count]
    fiber_ring = RingPresentation(rp.t_names, rp.ring.field, GREVLEX)
    polys = list(rp.ideal.gens) + list(x_vars)
    return Ideal(fiber_ring, eliminate_polys(polys, rp.x_count, fiber_ring.poly_ring))


def analytic_spread(I: Ideal, rp: Optional[ReesPresentation] = None) -> int:
    rp = rp or rees_presentation(I)
    if not rp.t_names:
        return 0
    return krull_dim(fiber_ideal(rp))


def analytic_deviation(I: Ideal) -> int:
    return analytic_spread(I) - height(I)


def is_equimultiple(I: Ideal) -> bool:
    return analytic_deviation(I) == 0


def assoc_graded_presentation(I: Ideal, rp: Optional[ReesPresentation] = None) -> Ideal:
    """gr_I(R) ≅ k[x, T]/(P + (f_i))."""
    rp = rp or rees_presentation(I)
    return Ideal(rp.ring, list(rp.ideal.gens) + lift_generators(rp))


def rees_multiplicity_table(I: Ideal, s_max: Optional[int] = None,
                            rp: Optional[ReesPresentation] = None) -> HilbertSamuelTable:
    rp = rp or rees_presentation(I)
    return multiplicity_table(rp.ideal, rp.irrelevant, s_max)


def rees_multiplicity(I: Ideal, s_max: Optional[int] = None) -> int:
    """e(M, R[It]) with M the full variable ideal of the presentation."""
    return rees_multiplicity_table(I, s_max).multiplicity
