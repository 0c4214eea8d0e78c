"""
Verifier service: one function per theorem.
- hypotheses are checked when decidable, otherwise recorded as asserted/unasserted
- mathematical failures land in the report, never in an exception
"""
import logging
from math import comb
from typing import AbstractSet, Optional, Sequence

import config
from core.errors import BudgetExceededError, LinkageLabError, StabilizationError
from core.ideals import (
    colon,
    contains,
    equals,
    first_irregular_index,
    ideal_power,
    ideal_product,
)
from core.invariants import (
    INFINITE,
    height,
    length_of_quotient,
    min_gens,
    multiplicity,
    ring_dim,
    socle_type,
)
from core.linkage import (
    canonical_components,
    expected_canonical_components,
    generator_degrees,
    graded_link_multiplicity,
    is_self_linked,
    linkage_conditions,
    reduction_number,
)
from core.polynomial import Polynomial
from core.rees import analytic_spread, rees_multiplicity_table
from core.rings import Ideal, RingPresentation
from models.linkage import NotWithin, TriState
from models.reports import VerificationReport

log = logging.getLogger("linkage_lab.verifiers")

NO_ASSERTIONS: AbstractSet[str] = frozenset()


def _record_conditions(report: VerificationReport, p: Ideal, z: Sequence[Polynomial],
                       assertions: AbstractSet[str]):
    L1, L2 = linkage_conditions(p, z)
    report.values["L1"] = L1.value
    report.values["L2"] = L2.value
    if L1 is TriState.UNKNOWN:
        report.assumption("L1 or L2", "l1" in assertions or "l2" in assertions)
    else:
        report.check("L1 or L2", L1 is TriState.HOLDS or L2 is TriState.HOLDS)


def _reduction_value(r):
    return r.to_dict() if isinstance(r, NotWithin) else r


def verify_link_theorem(ring: RingPresentation, p: Ideal, z: Sequence[Polynomial],
                        assertions: AbstractSet[str] = NO_ASSERTIONS,
                        n_max: Optional[int] = None) -> VerificationReport:
    """I = (z) : p is equimultiple with I^2 = JI; for p = m also mI = mJ and μ(I) = g + s."""
    report = VerificationReport("link-theorem")
    n_max = n_max if n_max is not None else config.DEFAULT_NMAX
    log.info(f"link theorem: p = {p.to_text()}, z = {[f.to_text() for f in z]}")
    try:
        J = Ideal(ring, z)
        m = ring.maximal_ideal()
        report.check("z in p", contains(p, J))
        report.check("z regular sequence", first_irregular_index(list(z), ring) is None)
        report.check("height(p) = |z|", not p.is_unit() and height(p) == len(z))
        report.assumption("p prime", "prime" in assertions)
        report.assumption("R Cohen-Macaulay", "cm" in assertions)
        _record_conditions(report, p, z, assertions)

        I = colon(J, p)
        report.values["I"] = I.gb_text()
        report.values["g"] = len(z)
        report.claim("I2_equals_JI", equals(ideal_power(I, 2), ideal_product(J, I)),
                     ideal_power(I, 2), ideal_product(J, I))
        report.values["reduction_number"] = _reduction_value(reduction_number(I, J, n_max))

        is_maximal = equals(p, m)
        if is_maximal:
            mI, mJ = ideal_product(m, I), ideal_product(m, J)
            report.claim("mI_equals_mJ", equals(mI, mJ), mI, mJ)

        if not I.is_unit():
            spread, ht = analytic_spread(I), height(I)
            report.values["analytic_spread"] = spread
            report.values["height_I"] = ht
            report.claim("equimultiple", spread == ht)

        if is_maximal and length_of_quotient(J) is not INFINITE:
            s = socle_type(J).type
            mu = len(min_gens(I))
            quotient_length = length_of_quotient(J) - length_of_quotient(I)
            report.values.update({"socle_type": s, "mu_I": mu, "length_I_over_J": quotient_length})
            report.claim("mu_I_equals_g_plus_s", mu == len(z) + s)
            report.claim("length_I_over_J_equals_s", quotient_length == s)

        report.out_of_scope("gr_I_cohen_macaulay")
        report.out_of_scope("rees_cohen_macaulay")
    except LinkageLabError as e:
        log.error(f"link theorem: {e}")
        report.fail_with(str(e))
    log.info(f"link theorem: {report.conclusion.value}")
    return report


def delta_length(ring: RingPresentation, z: Sequence[Polynomial]) -> VerificationReport:
    """λ(δ(I)) = C(s+1, 2) − λ(I²/JI) for the link I = (z) : m."""
    report = VerificationReport("delta-length")
    try:
        J = Ideal(ring, z)
        m = ring.maximal_ideal()
        length_J = length_of_quotient(J)
        if not report.check("R/(z) Artinian", length_J is not INFINITE):
            return report
        report.check("z regular sequence", first_irregular_index(list(z), ring) is None)
        I = colon(J, m)
        report.values["I"] = I.gb_text()
        if not report.check("mI in J", contains(J, ideal_product(m, I))):
            return report

        s = length_J - length_of_quotient(I)
        JI, I2 = ideal_product(J, I), ideal_power(I, 2)
        excess = length_of_quotient(JI) - length_of_quotient(I2)
        delta = comb(s + 1, 2) - excess
        report.values.update({
            "s": s,
            "lambda_I2_over_JI": excess,
            "lambda_delta": delta,
            "binomial": comb(s + 1, 2),
        })
        report.check("s >= 2", s >= 2)
        report.claim("I2_equals_JI", excess == 0, I2, JI)
        report.claim("delta_equals_binomial", delta == comb(s + 1, 2))
    except LinkageLabError as e:
        log.error(f"delta length: {e}")
        report.fail_with(str(e))
    return report


def verify_canonical_form(I: Ideal, J: Ideal, p: Optional[Ideal] = None,
                          assertions: AbstractSet[str] = NO_ASSERTIONS,
                          k_max: Optional[int] = None,
                          j_depth: Optional[int] = None) -> VerificationReport:
    """Computed components of ω_{R[It]} against R,..,R, L, L·I, L·I², ..."""
    report = VerificationReport("canonical-form")
    try:
        g = height(I)
        report.values["g"] = g
        L = colon(J, I)
        report.values["L"] = L.gb_text()
        gates = [
            report.check("height >= 2", g >= 2),
            report.check("I != J", not equals(I, J)),
            report.check("I^2 = JI", equals(ideal_power(I, 2), ideal_product(J, I))),
        ]
        report.assumption("I Cohen-Macaulay", "cm" in assertions)
        report.assumption("R Gorenstein", "gorenstein" in assertions)
        if not all(gates):
            return report

        k_max = k_max if k_max is not None else (config.DEFAULT_KMAX or g + 2)
        j_depth = j_depth if j_depth is not None else (config.DEFAULT_JDEPTH or g + 2)
        try:
            computed = canonical_components(I, J, k_max, j_depth)
        except StabilizationError as e:
            report.claim("stabilized", False)
            report.values["candidates"] = [[c.gb_text() for c in cand] for cand in e.candidates]
            return report
        report.claim("stabilized", True)
        data = computed.to_dict()
        report.values["jDepth"] = data["jDepth"]
        report.values["components"] = data["components"]

        expected = expected_canonical_components(g, L, I, k_max)
        for k, (got, want) in enumerate(zip(computed.components, expected), start=1):
            report.claim(f"omega_{k}", equals(got, want), got, want)
        module = all(contains(nxt, ideal_product(I, cur))
                     for cur, nxt in zip(computed.components, computed.components[1:]))
        report.claim("module_structure", module)
        if p is not None:
            report.claim("L_equals_p", equals(L, p), L, p)
    except LinkageLabError as e:
        log.error(f"canonical form: {e}")
        report.fail_with(str(e))
    return report


def gorenstein_gr_check(I: Ideal, J: Ideal,
                        assertions: AbstractSet[str] = NO_ASSERTIONS) -> VerificationReport:
    """gr_I(R) is Gorenstein iff I = J : I."""
    report = VerificationReport("gorenstein-gr")
    try:
        I.same_ring(J)
        report.check("J inside I", contains(I, J))
        report.check("J regular sequence", first_irregular_index(list(J.gens), J.ring) is None)
        g = height(I)
        report.values["g"] = g
        report.check("height >= 2", g >= 2)
        report.check("I^2 = JI", equals(ideal_power(I, 2), ideal_product(J, I)))
        report.assumption("I Cohen-Macaulay", "cm" in assertions)
        report.assumption("R Gorenstein", "gorenstein" in assertions)
        if not report.hypotheses_hold():
            return report
        L = colon(J, I)
        self_linked = equals(L, I)
        report.values["L"] = L.gb_text()
        report.values["self_linked"] = self_linked
        report.claim("gr_gorenstein", self_linked, L, I)
    except LinkageLabError as e:
        log.error(f"gorenstein gr: {e}")
        report.fail_with(str(e))
    return report


def verify_multiplicity_theorem(ring: RingPresentation, p: Ideal, z: Sequence[Polynomial],
                                assertions: AbstractSet[str] = NO_ASSERTIONS,
                                s_max: Optional[int] = None) -> VerificationReport:
    """e(M, R[It]) = e(N, R[Jt]) for I = (z) : m, cross-checked with the complete-intersection formula."""
    report = VerificationReport("multiplicity-theorem")
    log.info(f"multiplicity theorem: z = {[f.to_text() for f in z]}")
    try:
        J = Ideal(ring, z)
        report.check("p = m", equals(p, ring.maximal_ideal()))
        report.check("z regular sequence", first_irregular_index(list(z), ring) is None)
        _record_conditions(report, p, z, assertions)
        report.assumption("R Gorenstein", "gorenstein" in assertions)
        I = colon(J, p)
        report.values["I"] = I.gb_text()
        if not report.check("I != J", not equals(I, J)):
            return report

        table_I = rees_multiplicity_table(I, s_max)
        table_J = rees_multiplicity_table(J, s_max)
        report.values["e_I"] = table_I.multiplicity
        report.values["e_J"] = table_J.multiplicity
        report.values["rees_table_I"] = table_I.to_dict()
        report.values["rees_table_J"] = table_J.to_dict()
        report.claim("e_I_equals_e_J", table_I.multiplicity == table_J.multiplicity)

        degrees = generator_degrees(z)
        if not ring.has_quotient() and degrees is not None and len(z) == ring_dim(ring):
            base = multiplicity(ring.zero_ideal(), ring.maximal_ideal(), s_max)
            formula = graded_link_multiplicity(degrees, base)
            report.values["degrees"] = list(degrees)
            report.values["formula_value"] = formula
            report.claim("formula_matches", formula == table_J.multiplicity)
    except BudgetExceededError as e:
        log.error(f"multiplicity theorem: {e}")
        if e.table is not None:
            report.values["partial_table"] = e.table.to_dict()
        report.fail_with(str(e))
    except LinkageLabError as e:
        log.error(f"multiplicity theorem: {e}")
        report.fail_with(str(e))
    return report


def multiplicity_bound_check(ring: RingPresentation, I: Ideal, J: Ideal,
                             assertions: AbstractSet[str] = NO_ASSERTIONS) -> VerificationReport:
    """e(R/I) >= C(β₁ − g + 1, 2) for self-linked I."""
    report = VerificationReport("multiplicity-bound")
    try:
        try:
            self_linked = is_self_linked(I, J)
        except LinkageLabError as e:
            log.warning(f"self-linkage precondition: {e}")
            self_linked = False
        report.check("I self-linked", self_linked)
        report.assumption("licci", "licci" in assertions)
        report.assumption("generically Gorenstein", "generically-gorenstein" in assertions)
        report.assumption("I Cohen-Macaulay", "cm" in assertions)
        if not self_linked:
            return report
        e = multiplicity(I, ring.maximal_ideal())
        beta1 = len(min_gens(I))
        g = height(I)
        bound = comb(beta1 - g + 1, 2) if beta1 - g + 1 >= 2 else 0
        report.values.update({"e": e, "beta1": beta1, "g": g, "bound": bound})
        report.claim("bound_holds", e >= bound)
    except LinkageLabError as e:
        log.error(f"multiplicity bound: {e}")
        report.fail_with(str(e))
    return report
