from itertools import product

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from multiacm import Configuration, has_inclusion, staircase
from multiacm.algebra import RationalField, hilbert_multi, min_gens
from multiacm.algebra.hilbert import monomials_of_multidegree
from multiacm.errors import ChainError
from multiacm.lab.generate import GenSpec, generate
from multiacm.points import (
    bdl_ideal,
    bdl_ideal_for,
    config_ideal,
    config_ring,
    generator_factorization_check,
    level_form,
    point_ideal,
    staircase_ideal,
    subset_ideal,
)

from conftest import FOUR_POINTS, EIGHT_POINTS, grid, two_level


def evaluation_rank(X, d):
    """Rank of the multidegree-d monomials evaluated at X, computed by sympy over Q."""
    ring = config_ring(X)
    monos = list(monomials_of_multidegree(ring, d))
    rows = []
    for P in X.points:
        vals = [c for part in P.parts for c in part.coords]
        rows.append([sp.prod([sp.Rational(v) ** k for v, k in zip(vals, e)]) for e in monos])
    return sp.Matrix(rows).rank()


def test_point_ideal_vanishes_only_at_its_point(four_points):
    ring = config_ring(four_points)
    for P in four_points.points:
        I = point_ideal(P, ring)
        for Q in four_points.points:
            vals = [c for part in Q.parts for c in part.coords]
            vanish = all(g.evaluate(vals) == 0 for g in I.gens)
            assert vanish == (P == Q)


@pytest.mark.parametrize("pairs", [FOUR_POINTS, EIGHT_POINTS])
def test_hilbert_function_matches_evaluation_rank(pairs):
    X = two_level(pairs, RationalField())
    I = config_ideal(X)
    for d in product(range(4), range(4)):
        assert hilbert_multi(I, d) == evaluation_rank(X, d), d


def test_hilbert_stabilizes_at_cardinality(four_points):
    assert hilbert_multi(config_ideal(four_points), (5, 5)) == 4


def test_single_point_minimal_generators(field):
    X = Configuration.from_coords((1, 2), [[[1, 0], [1, 0, 0]]], field)
    assert dict(min_gens(config_ideal(X)).by_degree()) == {(1, 0): 1, (0, 1): 2}


def test_grid_ideal_is_sum_of_factor_ideals():
    X = grid(3, 2)
    ring = config_ring(X)
    rows = [P.parts[0] for P in X.points]
    cols = [P.parts[1] for P in X.points]
    assert config_ideal(X) == subset_ideal(rows, 1, ring) + subset_ideal(cols, 2, ring)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_staircase_decomposition(seed):
    X = generate(GenSpec((1, 2), "star", budget=8, seed=seed))
    assert staircase_ideal(staircase(X), config_ring(X)) == config_ideal(X)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_bdl_decomposition(seed):
    X = generate(GenSpec((1, 2), "inclusion", budget=8, seed=seed, levels=2))
    assert has_inclusion(X)
    assert bdl_ideal_for(X) == config_ideal(X)


def test_bdl_rejects_unnested_levels(four_points):
    ring = config_ring(four_points)
    from multiacm.config import level_sets, pi

    ls = level_sets(four_points, 1)
    Ys = [pi(Xj, 1) for _, Xj in ls.classes]
    with pytest.raises(ChainError):
        bdl_ideal(Ys, [level_form(P, ring) for P, _ in ls.classes], ring)


def test_level_form_vanishes_on_level(four_points):
    ring = config_ring(four_points)
    P0 = four_points.points[0].parts[0]
    L = level_form(P0, ring)
    assert L.evaluate(list(P0.coords) + [0, 0, 0]) == 0
    assert L.multidegree() == (1, 0)


def test_factored_generators_of_acm_configuration(four_points):
    rep = generator_factorization_check(four_points)
    assert rep.success
    assert all(f.residual_ok for f in rep.factored_set)
