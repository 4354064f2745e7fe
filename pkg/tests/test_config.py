from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from multiacm import (
    Configuration,
    ab_partition,
    d_membership,
    eta,
    has_inclusion,
    has_star,
    level_sets,
    pi,
    staircase,
    vz_chains,
)
from multiacm.algebra import PrimeField
from multiacm.config import d_intervals
from multiacm.errors import DuplicatePointError, InvalidPointError, NotStarError, ShapeError
from multiacm.lab.suites import D_TABLE_EXPECTED

from conftest import SIX_POINTS, grid, two_level


def test_points_normalize_projectively(field):
    X = Configuration.from_coords((1, 1), [[[2, 4], [1, 0]], [[1, 2], [3, 0]]], field)
    assert len(X) == 1
    with pytest.raises(DuplicatePointError):
        Configuration.from_coords((1, 1), [[[2, 4], [1, 0]], [[1, 2], [3, 0]]], field, allow_duplicates=False)


@pytest.mark.parametrize(
    "coords",
    [
        [[[1, 2, 3], [1, 0]]],  # wrong length
        [[[0, 0], [1, 0]]],  # zero tuple
        [[[1, 2]]],  # missing factor
        [[[32003, 0], [1, 0]]],  # zero mod p
    ],
)
def test_invalid_points(coords, field):
    with pytest.raises(InvalidPointError):
        Configuration.from_coords((1, 1), coords, field)


def test_factor_index_checked(four_points):
    with pytest.raises(ShapeError):
        eta(four_points, 3)


def test_level_sets_and_projection(four_points):
    ls = level_sets(four_points, 1)
    assert [len(c) for _, c in ls.classes] == [2, 2]
    assert len(pi(four_points, 1)) == 3
    assert len(eta(four_points, 2)) == 3


def test_four_point_combinatorics(four_points):
    assert not has_star(four_points)
    assert not has_inclusion(four_points)
    ab = ab_partition(four_points)
    assert (ab.n0, ab.n1, len(ab.levels)) == (2, 1, 2)
    assert len(ab.a_part) == 2 and len(ab.b_part) == 2


def test_grid_is_star_with_one_corner():
    X = grid(3, 2)
    assert has_star(X) and has_inclusion(X)
    st_ = staircase(X)
    assert st_.corners == ((2, 1),)
    V, Z = vz_chains(st_)
    assert [len(v) for v in V] == [3] and [len(z) for z in Z] == [2]


def test_staircase_requires_star(four_points):
    with pytest.raises(NotStarError):
        staircase(four_points)


def test_staircase_cells_reproduce_configuration():
    X = Configuration.from_coords(
        (1, 1),
        [[[1, 0], [1, 0]], [[1, 0], [0, 1]], [[1, 0], [1, 1]], [[0, 1], [1, 0]], [[1, 1], [1, 0]], [[1, 1], [0, 1]]],
        PrimeField(),
    )
    st_ = staircase(X)
    assert sorted(st_.corners) == [(0, 2), (1, 1), (2, 0)]
    assert st_.to_configuration((1, 1), X.field) == X


def test_inclusion_needs_oracle_beyond_two_factors(field):
    X = Configuration.from_coords((1, 1, 1), [[[1, 0], [1, 0], [1, 0]]], field)
    with pytest.raises(ValueError):
        has_inclusion(X, 1)
    assert has_inclusion(X, 1, acm=lambda Y: True)


def brute_force_d(n0, n, upto):
    out = set()
    for i in range(-n0, upto + 2):
        lo, hi = comb(n0 + i, n) if n0 + i >= 0 else 0, comb(n0 + i + 1, n) - n0
        out.update(v for v in range(lo, hi + 1) if v >= 0)
    return out


@settings(deadline=None)
@given(st.integers(2, 7), st.integers(2, 4))
def test_d_membership_matches_formula(n0, n):
    expected = brute_force_d(n0, n, 80)
    got = {v for v in range(60) if d_membership(n0, v, n)[0]}
    assert got == {v for v in expected if v < 60}


def test_d_table_pattern():
    assert [v for v in range(36) if d_membership(4, v, 2)[0]] == D_TABLE_EXPECTED
    # each block C(k,2)..C(k+1,2)-1 loses its last three values
    for i, lo, hi in d_intervals(4, 2, 35):
        assert lo == comb(4 + i, 2) and hi == comb(5 + i, 2) - 1 - 3


def test_d_membership_witness():
    assert d_membership(2, 1, 2) == (True, 0)
    assert d_membership(3, 1, 2) == (False, None)
    with pytest.raises(ValueError):
        d_membership(1, 3, 2)


def test_transpose_swaps_factors(four_points):
    T = four_points.transpose()
    assert T.shape.dims == (2, 1)
    assert T.transpose() == four_points


small_coords = st.lists(
    st.tuples(st.sampled_from([[1, 0], [0, 1], [1, 1], [1, 2]]), st.sampled_from([[1, 0], [0, 1], [1, 1], [1, 3]])),
    min_size=1,
    max_size=8,
)


@settings(max_examples=80)
@given(small_coords)
def test_star_symmetric_under_transpose(coords):
    X = Configuration.from_coords((1, 1), [list(c) for c in coords], PrimeField())
    assert has_star(X) == has_star(X.transpose())


def test_not_star_when_two_levels_cross():
    X = two_level(SIX_POINTS)
    assert not has_star(X)
    assert ab_partition(X).n1 == 2
