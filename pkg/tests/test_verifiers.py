"""Golden examples: exact values for the shipped linkage examples.

Hand oracles:
- QQ[x,y,z]/(x^2 - y^2), z = (y, z): x^2 = y^2 lies in (y), so (y, z) : m = m;
  m^2 = (y, z)·m modulo x^2 - y^2; R/(y, z) = QQ[x]/(x^2) has length 2 and type 1.
- k[t^3, t^4, t^5] = QQ[x,y,z]/(xz - y^2, x^3 - yz, x^2 y - z^2), z = (x):
  R/(x) has basis 1, t^4, t^5, so (x) : m = m, s = 2 and m^2 = x·m.
- QQ[x,y]/m^3 with z empty: 0 : m = m^2, s = 6 - 3 = 3 and m^4 = 0.
"""
import pytest

from core.ideals import ideal_power
from core.linkage import linkage_conditions
from models.linkage import TriState
from models.reports import Conclusion, HypothesisStatus
from services.verifiers import (
    delta_length,
    gorenstein_gr_check,
    multiplicity_bound_check,
    verify_canonical_form,
    verify_link_theorem,
    verify_multiplicity_theorem,
)


def _z(ring, *texts):
    return [ring.parse(t) for t in texts]


def _hypothesis(report, name):
    return next(h for h in report.hypotheses if h.name == name)


def test_link_theorem_for_complete_intersection(example_link):
    R, J, I = example_link
    report = verify_link_theorem(R, R.maximal_ideal(), _z(R, "x", "y^2", "z^2"), {"prime", "cm"})
    assert report.conclusion is Conclusion.PASS
    assert set(report.values["I"]) == {"x", "y^2", "y*z", "z^2"}
    assert report.values["reduction_number"] == 1
    assert report.values["analytic_spread"] == report.values["height_I"] == 3
    assert report.values["mu_I"] == 4
    assert report.values["socle_type"] == 1
    assert report.values["length_I_over_J"] == 1
    assert report.claims == {
        "I2_equals_JI": True,
        "mI_equals_mJ": True,
        "equimultiple": True,
        "mu_I_equals_g_plus_s": True,
        "length_I_over_J_equals_s": True,
    }
    assert report.values["L1"] == "fails"
    assert report.values["L2"] == "holds"
    assert _hypothesis(report, "p prime").status is HypothesisStatus.ASSERTED
    assert report.values["rees_cohen_macaulay"] == {"status": "out-of-scope"}
    claimed = {c.claim for c in report.certificates}
    assert {"I2_equals_JI", "mI_equals_mJ"} <= claimed


def test_link_theorem_unasserted_hypotheses_do_not_block(example_link):
    R, J, I = example_link
    report = verify_link_theorem(R, R.maximal_ideal(), _z(R, "x", "y^2", "z^2"))
    assert _hypothesis(report, "R Cohen-Macaulay").status is HypothesisStatus.UNASSERTED
    assert report.conclusion is Conclusion.PASS


def test_link_theorem_in_non_cohen_macaulay_ring(embedded_point):
    R = embedded_point
    report = verify_link_theorem(R, R.maximal_ideal(), _z(R, "y^3"))
    assert set(report.values["I"]) == {"x", "y^2"}
    assert report.claims["I2_equals_JI"] is False
    assert _hypothesis(report, "z regular sequence").passed is False
    assert report.values["reduction_number"] == {"not_within": 5}
    assert report.conclusion is Conclusion.INAPPLICABLE


def test_link_theorem_on_singular_hypersurface(hypersurface):
    H = hypersurface
    report = verify_link_theorem(H, H.maximal_ideal(), _z(H, "y", "z"), {"prime", "cm"})
    assert report.values["L1"] == "holds"
    assert set(report.values["I"]) == set(H.maximal_ideal().gb_text())
    assert report.values["reduction_number"] == 1
    assert report.values["socle_type"] == 1
    assert report.values["mu_I"] == 3
    assert report.claims["equimultiple"] is True
    assert report.conclusion is Conclusion.PASS


def test_linkage_conditions(qxyz, hypersurface):
    m = qxyz.maximal_ideal()
    assert linkage_conditions(m, _z(qxyz, "x", "y^2", "z^2")) == (TriState.FAILS, TriState.HOLDS)
    assert linkage_conditions(m, _z(qxyz, "x", "y", "z^2")) == (TriState.FAILS, TriState.FAILS)
    H = hypersurface
    assert linkage_conditions(H.maximal_ideal(), _z(H, "y", "z")) == (TriState.HOLDS, TriState.FAILS)


def test_link_theorem_failing_gate(qxyz):
    # x, y, z^2 has only one element in the symbolic square of m
    report = verify_link_theorem(qxyz, qxyz.maximal_ideal(), _z(qxyz, "x", "y", "z^2"))
    assert _hypothesis(report, "L1 or L2").passed is False
    assert report.conclusion is Conclusion.INAPPLICABLE


def test_delta_length_on_semigroup_ring(semigroup_ring):
    report = delta_length(semigroup_ring, _z(semigroup_ring, "x"))
    assert report.values["s"] == 2
    assert report.values["lambda_delta"] == 3
    assert report.values["binomial"] == 3
    assert report.conclusion is Conclusion.PASS


def test_delta_length_on_artinian_ring(artinian_cube):
    report = delta_length(artinian_cube, [])
    assert report.values["s"] == 3
    assert report.values["lambda_delta"] == 6
    assert report.conclusion is Conclusion.PASS


def test_delta_length_needs_type_two(curve):
    report = delta_length(curve, _z(curve, "y"))
    assert report.values["s"] == 1
    assert report.values["lambda_delta"] == 1
    assert report.conclusion is Conclusion.INAPPLICABLE


def test_delta_length_on_non_artinian_quotient(qxyz):
    report = delta_length(qxyz, _z(qxyz, "x"))
    assert report.conclusion is Conclusion.INAPPLICABLE


def test_gorenstein_associated_graded_ring(example_link, qxyz):
    R, J, I = example_link
    report = gorenstein_gr_check(I, J, {"cm", "gorenstein"})
    assert report.values["self_linked"] is False
    assert report.conclusion is Conclusion.FAIL
    # m^2 is self-linked over (x^2, y^2, z^2) and m^4 = (x^2, y^2, z^2)·m^2
    m2 = ideal_power(qxyz.maximal_ideal(), 2)
    ok = gorenstein_gr_check(m2, qxyz.ideal(["x^2", "y^2", "z^2"]))
    assert ok.values["self_linked"] is True
    assert ok.conclusion is Conclusion.PASS


def test_multiplicity_bound(qxyz, curve):
    report = multiplicity_bound_check(qxyz, qxyz.ideal(["x", "y"]), qxyz.ideal(["x^2", "y"]))
    assert (report.values["e"], report.values["bound"]) == (1, 0)
    assert report.conclusion is Conclusion.PASS

    report = multiplicity_bound_check(curve, curve.maximal_ideal(), curve.ideal(["y"]))
    assert (report.values["e"], report.values["bound"]) == (1, 1)
    assert report.values["beta1"] == 2
    assert report.conclusion is Conclusion.PASS


def test_multiplicity_bound_needs_self_linkage(qxyz):
    report = multiplicity_bound_check(qxyz, qxyz.maximal_ideal(), qxyz.ideal(["x^2", "y^2", "z^2"]))
    assert _hypothesis(report, "I self-linked").passed is False
    assert report.conclusion is Conclusion.INAPPLICABLE


def test_canonical_form_gate(curve):
    report = verify_canonical_form(curve.maximal_ideal(), curve.ideal(["y"]))
    assert _hypothesis(report, "height >= 2").passed is False
    assert report.conclusion is Conclusion.INAPPLICABLE


@pytest.mark.slow
def test_canonical_form_of_link(example_link):
    R, J, I = example_link
    report = verify_canonical_form(I, J, R.maximal_ideal(), {"cm", "gorenstein"})
    assert report.claims["stabilized"] is True
    assert report.claims["L_equals_p"] is True
    assert report.claims["omega_1"] and report.claims["omega_2"] and report.claims["omega_3"]
    assert report.values["components"][0] == ["1"]
    assert report.conclusion is Conclusion.PASS


@pytest.mark.slow
def test_multiplicity_theorem_for_complete_intersection(qxyz):
    report = verify_multiplicity_theorem(qxyz, qxyz.maximal_ideal(), _z(qxyz, "x", "y^2", "z^2"),
                                         {"gorenstein"})
    assert report.values["e_I"] == report.values["e_J"] == 4
    assert report.values["degrees"] == [1, 2, 2]
    assert report.values["formula_value"] == 4
    assert report.conclusion is Conclusion.PASS


def test_multiplicity_theorem_reports_budget(qxyz):
    report = verify_multiplicity_theorem(qxyz, qxyz.maximal_ideal(), _z(qxyz, "x", "y^2", "z^2"),
                                         s_max=3)
    assert report.conclusion is Conclusion.ERROR
    assert "partial_table" in report.values
    assert report.to_dict()["error"].startswith("budget exceeded")


def test_report_dict_layout(example_link):
    R, J, I = example_link
    data = gorenstein_gr_check(I, J).to_dict()
    assert set(data) == {"theorem", "hypotheses", "values", "conclusion", "certificates"}
    assert data["theorem"] == "gorenstein-gr"
    assert data["conclusion"] == "fail"
    assert data["certificates"][0]["claim"] == "gr_gorenstein"


def test_gorenstein_gr_gates_are_inapplicable_not_errors(qxyz, embedded_point):
    report = gorenstein_gr_check(qxyz.ideal(["x", "y"]), qxyz.ideal(["z"]))
    assert _hypothesis(report, "J inside I").passed is False
    assert report.conclusion is Conclusion.INAPPLICABLE
    assert "self_linked" not in report.values

    R = embedded_point
    report = gorenstein_gr_check(R.maximal_ideal(), R.ideal(["y^3"]))
    assert _hypothesis(report, "J regular sequence").passed is False
    assert report.conclusion is Conclusion.INAPPLICABLE
    assert report.error is None


def test_gorenstein_gr_and_bound_agree_on_failed_gates(qxyz):
    I, J = qxyz.ideal(["x", "y"]), qxyz.ideal(["z"])
    assert gorenstein_gr_check(I, J).conclusion is Conclusion.INAPPLICABLE
    assert multiplicity_bound_check(qxyz, I, J).conclusion is Conclusion.INAPPLICABLE
