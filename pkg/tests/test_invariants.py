import itertools
import random

import pytest

from core.errors import BudgetExceededError, DomainError, EmptyRingError, NotArtinianError
from core.ideals import ideal_power
from core.invariants import (
    INFINITE,
    embedding_dim,
    height,
    hilbert_samuel,
    krull_dim,
    length_between,
    length_of_quotient,
    min_gens,
    multiplicity,
    multiplicity_table,
    ring_dim,
    socle_type,
    standard_counts,
)
from core.monomials import in_monomial_ideal
from core.rings import RingPresentation
from models.tables import difference_rows


def test_lengths(qxy, example_link):
    R, J, I = example_link
    assert length_of_quotient(qxy.ideal(["x^2", "y^2"])) == 4
    assert length_of_quotient(J) == 4
    assert length_of_quotient(I) == 3
    assert length_between(I, J) == 1
    assert length_of_quotient(qxy.ideal(["x"])) is INFINITE
    assert length_of_quotient(qxy.unit_ideal()) == 0


def test_length_is_local(qxy):
    # x - x^2 = x(1 - x) and 1 - x is a unit at the origin
    assert length_of_quotient(qxy.ideal(["x - x^2", "y"])) == 1
    assert length_of_quotient(qxy.ideal(["x^2 - x^3", "y^2 - y^4"])) == 4


def test_dimensions(qxyz, hypersurface, semigroup_ring, artinian_cube):
    assert ring_dim(qxyz) == 3
    assert krull_dim(qxyz.ideal(["x"])) == 2
    assert ring_dim(hypersurface) == 2
    assert ring_dim(semigroup_ring) == 1
    assert ring_dim(artinian_cube) == 0
    with pytest.raises(EmptyRingError):
        krull_dim(qxyz.unit_ideal())


def test_height(qxyz, hypersurface):
    assert height(qxyz.ideal(["x", "y"])) == 2
    assert height(qxyz.ideal(["x*y"])) == 1
    assert height(hypersurface.ideal(["y", "z"])) == 2
    with pytest.raises(DomainError):
        height(qxyz.unit_ideal())


def test_standard_counts_layers():
    assert standard_counts([(2, 0), (0, 2)], 2, 3) == [1, 2, 1, 0]
    assert standard_counts([(0, 0)], 2, 2) == [0, 0, 0]


def test_difference_rows_prefix_zero():
    assert difference_rows([1, 3, 6, 10], 2) == [[1, 2, 3, 4], [1, 1, 1]]


def test_multiplicity_of_polynomial_ring_and_parameter_ideal(qxyz):
    zero = qxyz.zero_ideal()
    assert multiplicity(zero, qxyz.maximal_ideal()) == 1
    assert multiplicity(zero, qxyz.ideal(["x", "y^2", "z^2"])) == 4


def test_multiplicity_of_hypersurface(hypersurface, curve):
    assert multiplicity(hypersurface.zero_ideal(), hypersurface.maximal_ideal()) == 2
    assert multiplicity(curve.zero_ideal(), curve.maximal_ideal()) == 2


def test_multiplicity_of_artinian_quotient_is_length(qxy):
    A = qxy.ideal(["x^2", "x*y", "y^3"])
    assert multiplicity(A, qxy.maximal_ideal()) == length_of_quotient(A) == 4


def test_multiplicity_table_shape(qxyz):
    table = multiplicity_table(qxyz.zero_ideal(), qxyz.maximal_ideal())
    assert table.values[:4] == [1, 4, 10, 20]
    assert table.top_row()[-3:] == [1, 1, 1]
    data = table.to_dict()
    assert data["multiplicity"] == 1
    assert data["dimension"] == 3
    assert data["s"] == list(range(1, len(data["lambda"]) + 1))


def test_budget_exceeded_carries_partial_table(qxyz):
    with pytest.raises(BudgetExceededError) as info:
        multiplicity_table(qxyz.zero_ideal(), qxyz.maximal_ideal(), s_max=4)
    assert info.value.table.values == [1, 4, 10, 20]


def test_filter_ideal_must_be_primary(qxy):
    with pytest.raises(NotArtinianError):
        hilbert_samuel(qxy.zero_ideal(), qxy.ideal(["x"]), 3)
    with pytest.raises(NotArtinianError):
        hilbert_samuel(qxy.zero_ideal(), qxy.ideal(["x - 1", "y"]), 3)


def test_min_gens(qxy, example_link):
    R, J, I = example_link
    assert len(min_gens(I)) == 4
    A = qxy.ideal(["x", "y^2", "x*y", "y^2 + x"])
    assert len(min_gens(A)) == 2


def test_socle_type(example_link, artinian_cube):
    R, J, I = example_link
    socle = socle_type(J)
    assert socle.type == 1
    assert set(socle.socle_ideal.gb_text()) == {"x", "y^2", "y*z", "z^2"}
    assert socle_type(artinian_cube.zero_ideal()).type == 3
    with pytest.raises(NotArtinianError):
        socle_type(R.ideal(["x"]))


def test_embedding_dimension(qxyz, hypersurface, curve, semigroup_ring, artinian_cube):
    assert embedding_dim(qxyz) == 3
    assert embedding_dim(hypersurface) == 3
    assert embedding_dim(curve) == 2
    assert embedding_dim(semigroup_ring) == 3
    assert embedding_dim(artinian_cube) == 2
    assert embedding_dim(RingPresentation(("x", "y"), quotient=("x - y^2",))) == 1


# ── property: Hilbert-Samuel functions against monomial enumeration ──

def _brute_length(n, a_gens, q_gens, s):
    """Monomials outside A + q^s, counted directly."""
    q_power = {tuple(sum(c) for c in zip(*combo))
               for combo in itertools.combinations_with_replacement(q_gens, s)}
    gens = list(a_gens) + list(q_power)
    bound = max(sum(g) for g in gens) + 1
    return sum(1 for e in itertools.product(range(bound), repeat=n) if not in_monomial_ideal(e, gens))


def test_hilbert_samuel_matches_monomial_enumeration():
    rng = random.Random(3)
    names = ("x", "y", "z")
    for trial in range(50):
        n = rng.randint(1, 3)
        ring = RingPresentation(names[:n])
        a_gens = sorted({tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(0, 3))} - {(0,) * n})
        if trial % 2:
            q_gens = [tuple(2 if j == i else 0 for j in range(n)) for i in range(n)]
        else:
            q_gens = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        A = ring.ideal([ring.poly_ring.term(e) for e in a_gens])
        q = ring.ideal([ring.poly_ring.term(e) for e in q_gens])
        table = hilbert_samuel(A, q, 4)
        assert table.values == [_brute_length(n, a_gens, q_gens, s) for s in range(1, 5)], (a_gens, q_gens)


def test_power_of_maximal_ideal_length(qxy):
    assert length_of_quotient(ideal_power(qxy.maximal_ideal(), 3)) == 6


@pytest.mark.parametrize("seed", range(5))
def test_minimal_generator_count_ignores_rescaling(qxyz, seed):
    rng = random.Random(seed)
    P = qxyz.poly_ring
    gens = []
    for _ in range(4):
        e = tuple(rng.randint(0, 2) for _ in range(3))
        if sum(e):
            gens.append(P.term(e) + P.term(tuple(rng.randint(1, 2) for _ in range(3)), rng.randint(-2, 2)))
    gens.append(P.parse("x*y"))
    scaled = [g.scale(rng.choice((2, -3, 7))) for g in gens]
    kept = min_gens(qxyz.ideal(gens))
    assert len(min_gens(qxyz.ideal(scaled))) == len(kept)
    assert len(min_gens(qxyz.ideal(gens + scaled))) == len(kept)


def _permuted(ideal, ring, perm):
    images = [ring.poly_ring.gen(perm[i]) for i in range(ring.nvars)]
    return ring.ideal([g.substitute(ring.poly_ring, images) for g in ideal.gens])


@pytest.mark.parametrize("seed", range(4))
def test_multiplicity_ignores_variable_order(qxy, qxyz, seed):
    rng = random.Random(seed)
    P = qxy.poly_ring
    q = qxy.ideal([P.parse(f"x^{rng.randint(1, 3)}"), P.parse(f"y^{rng.randint(1, 3)}"),
                   P.term((rng.randint(1, 2), rng.randint(0, 2)))])
    zero = qxy.zero_ideal()
    assert multiplicity(zero, _permuted(q, qxy, (1, 0))) == multiplicity(zero, q)

    e = (rng.randint(0, 2), rng.randint(0, 2), rng.randint(1, 2))
    A = qxyz.ideal([qxyz.poly_ring.term(e) + qxyz.parse("x^3")])
    m = qxyz.maximal_ideal()
    expected = multiplicity(A, m)
    assert expected == min(sum(e), 3)
    for perm in itertools.permutations(range(3)):
        assert multiplicity(_permuted(A, qxyz, perm), m) == expected
