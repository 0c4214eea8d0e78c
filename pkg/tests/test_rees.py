import random

import pytest

from core.ideals import equals
from core.invariants import height, ring_dim
from core.polynomial import PolyRing
from core.rees import (
    analytic_deviation,
    analytic_spread,
    assoc_graded_presentation,
    fiber_ideal,
    fresh_names,
    is_equimultiple,
    lift_generators,
    rees_multiplicity,
    rees_multiplicity_table,
    rees_presentation,
)
from core.rings import RingPresentation


def test_fresh_names_avoid_ring_variables():
    assert fresh_names(("x", "y"), ["T1", "T2"]) == ("T1", "T2")
    assert fresh_names(("T1", "x"), ["T1", "T2"]) == ("_T1", "_T2")


def test_rees_algebra_of_maximal_ideal(qxy):
    rp = rees_presentation(qxy.maximal_ideal())
    assert rp.ring.variables == ("x", "y", "T1", "T2")
    assert rp.ideal.gb_text() == ["y*T1 - x*T2"]
    assert rp.to_dict()["generators"] == {"T1": "x", "T2": "y"}
    assert [f.to_text() for f in lift_generators(rp)] == ["x", "y"]


def test_associated_graded_ring_of_maximal_ideal(qxy):
    rp = rees_presentation(qxy.maximal_ideal())
    gr = assoc_graded_presentation(qxy.maximal_ideal(), rp)
    assert equals(gr, rp.ring.ideal(["x", "y"]))


def test_fiber_ring_and_spread(qxy, example_link):
    rp = rees_presentation(qxy.ideal(["x^2", "x*y", "y^2"]))
    # fiber ring of m^2 is the Veronese k[T1,T2,T3]/(T1*T3 - T2^2)
    assert set(fiber_ideal(rp).gb_text()) == {"T2^2 - T1*T3"}
    assert analytic_spread(qxy.ideal(["x^2", "x*y", "y^2"]), rp) == 2
    R, J, I = example_link
    assert analytic_spread(I) == 3
    assert analytic_spread(J) == 3


def test_equimultiplicity(qxy, example_link):
    R, J, I = example_link
    assert is_equimultiple(I)
    A = qxy.ideal(["x^2", "x*y"])
    assert analytic_deviation(A) == 1
    assert not is_equimultiple(A)


def test_rees_multiplicity_of_maximal_ideal(qxy):
    # R[mt] for m = (x, y) is a 3-dimensional ring of multiplicity 2 at M
    table = rees_multiplicity_table(qxy.maximal_ideal())
    assert table.dimension == 3
    assert table.multiplicity == 2


@pytest.mark.slow
def test_rees_multiplicities_agree_for_link_and_complete_intersection(example_link):
    R, J, I = example_link
    assert rees_multiplicity(I) == 4
    assert rees_multiplicity(J) == 4


def test_rees_in_quotient_ring(curve):
    rp = rees_presentation(curve.maximal_ideal())
    assert rp.ring.variables == ("x", "y", "T1", "T2")
    # x^2 - y^2 survives in the presentation
    assert rp.ideal.contains(rp.ring.parse("x^2 - y^2"))
    assert rp.ideal.contains(rp.ring.parse("T1^2 - T2^2"))


def test_rees_of_ring_with_clashing_names():
    R = RingPresentation(("t", "T1"))
    rp = rees_presentation(R.ideal(["t"]))
    assert rp.t_names == ("_T1",)
    assert rp.ideal.is_zero()


def _random_monomial_ideal(rng, ring, max_degree=3):
    P = ring.poly_ring
    exponents = set()
    count = rng.randint(1, 3)
    while len(exponents) < count:
        e = tuple(rng.randint(0, max_degree) for _ in range(ring.nvars))
        if 0 < sum(e) <= max_degree:
            exponents.add(e)
    return ring.ideal([P.term(e) for e in sorted(exponents)])


@pytest.mark.parametrize("seed", range(5))
def test_spread_lies_between_height_and_dimension(qxyz, hypersurface, seed):
    rng = random.Random(seed)
    for R in (qxyz, hypersurface):
        I = _random_monomial_ideal(rng, R)
        assert height(I) <= analytic_spread(I) <= ring_dim(R), I.to_text()


@pytest.mark.parametrize("seed", range(4))
def test_rees_relations_vanish_on_generators(hypersurface, seed):
    rng = random.Random(seed)
    R = hypersurface
    I = _random_monomial_ideal(rng, R)
    I = R.ideal(list(I.gens) + [R.parse("y - z^2")])
    rp = rees_presentation(I)
    target = PolyRing(R.variables + ("t",))
    x_positions = list(range(R.nvars))
    t = target.var("t")
    images = target.gens()[:R.nvars] + [f.embed(target, x_positions) * t for f in rp.generators]
    relations = RingPresentation(target.variables, quotient=[q.embed(target, x_positions)
                                                            for q in R.quotient_gens])
    assert rp.ideal.gens
    for p in rp.ideal.gens:
        assert relations.is_zero(p.substitute(target, images)), p.to_text()
