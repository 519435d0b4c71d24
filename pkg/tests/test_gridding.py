import pytest
from hypothesis import given, settings

from gridperms import (
    GriddedPermutation,
    Gridding,
    GridMatrix,
    Permutation,
    check_gridding,
    find_gridding,
    in_grid_class,
    pattern_of,
)

from .oracles import brute_griddings
from .strategies import matrices, permutations


# Gridding construction and serialization

def test_divisions_validated():
    Gridding((1, 3, 5, 10), (1, 6, 10))
    Gridding((1, 1, 4), (1, 4))  # empty first column is fine
    with pytest.raises(ValueError):
        Gridding((2, 5), (1, 5))  # must start at 1
    with pytest.raises(ValueError):
        Gridding((1, 3, 2, 5), (1, 5))  # not weakly increasing
    with pytest.raises(ValueError):
        Gridding((1, 5), (1, 4))  # endpoints disagree
    with pytest.raises(ValueError):
        Gridding((1,), (1,))


def test_shape_properties():
    g = Gridding((1, 3, 5, 10), (1, 6, 10))
    assert (g.t, g.u, g.n) == (3, 2, 9)


def test_cell_of_points():
    g = Gridding((1, 3, 5, 10), (1, 6, 10))
    assert g.cell_of(1, 1) == (1, 1)
    assert g.cell_of(3, 6) == (2, 2)
    assert g.cell_of(9, 2) == (3, 1)
    assert g.cell_of(5, 5) == (3, 1)
    with pytest.raises(ValueError):
        g.cell_of(10, 1)
    with pytest.raises(ValueError):
        g.cell_of(0, 1)


def test_cell_of_skips_empty_bands():
    g = Gridding((1, 1, 4), (1, 4, 4))
    assert g.cell_of(1, 1) == (2, 1)
    assert g.cell_of(3, 3) == (2, 1)


def test_gridding_parse_format_round_trip():
    text = "cols=1,3,5,10 rows=1,6,10"
    g = Gridding.parse(text)
    assert g == Gridding((1, 3, 5, 10), (1, 6, 10))
    assert g.format() == text
    assert Gridding.parse("rows=1,6,10 cols=1,3,5,10") == g


def test_gridding_parse_rejects_garbage():
    for text in ["", "cols=1,4", "cols=1,4 rows=1,x", "cols=1,4 cols=1,4",
                 "cols=1,4 rows=1,4 rows=1,4", "1,4 1,4"]:
        with pytest.raises(ValueError):
            Gridding.parse(text)


# check_gridding

def test_check_gridding_accepts_known_gridding(demo_matrix, demo_perm, demo_gridding):
    assert check_gridding(demo_perm, demo_matrix, demo_gridding)


def test_check_gridding_rejects_shifted_division(demo_matrix, demo_perm):
    # moving c_2 to 2 pushes entries 3,5,4 into an empty cell
    assert not check_gridding(demo_perm, demo_matrix, Gridding((1, 2, 5, 10), (1, 6, 10)))


def test_check_gridding_empty_permutation(demo_matrix):
    assert check_gridding(Permutation(()), demo_matrix, Gridding((1, 1, 1, 1), (1, 1, 1)))


def test_check_gridding_rejects_malformed_divisions(demo_matrix, demo_perm):
    with pytest.raises(ValueError):
        check_gridding(demo_perm, demo_matrix, Gridding((1, 5, 10), (1, 6, 10)))
    with pytest.raises(ValueError):
        check_gridding(demo_perm, demo_matrix, Gridding((1, 3, 5, 9), (1, 6, 9)))


def test_check_gridding_monotonicity_per_cell():
    m = GridMatrix.parse("+ -")
    g = Gridding((1, 3, 5), (1, 5))
    assert check_gridding(Permutation.parse("1243"), m, g)
    assert not check_gridding(Permutation.parse("2143"), m, g)
    assert not check_gridding(Permutation.parse("1234"), m, g)


# GriddedPermutation

def test_gridded_permutation_validates(demo_matrix, demo_perm, demo_gridding):
    gp = GriddedPermutation(demo_perm, demo_matrix, demo_gridding)
    assert gp.cell_of(1) == (1, 1)
    assert gp.cell_of(4) == (2, 2)
    assert gp.cell_of(9) == (3, 1)
    assert str(gp) == "136854792 (cols=1,3,5,10 rows=1,6,10)"
    with pytest.raises(ValueError):
        GriddedPermutation(demo_perm, demo_matrix, Gridding((1, 2, 5, 10), (1, 6, 10)))


# find_gridding / in_grid_class

def test_find_gridding_returns_lex_least(demo_matrix, demo_perm):
    assert find_gridding(demo_perm, demo_matrix) == Gridding((1, 3, 5, 10), (1, 5, 10))


def test_demo_perm_has_three_griddings(demo_matrix, demo_perm):
    all_griddings = brute_griddings(demo_perm, demo_matrix)
    assert len(all_griddings) == 3
    assert all_griddings[0] == ((1, 3, 5, 10), (1, 5, 10))
    assert ((1, 3, 5, 10), (1, 6, 10)) in all_griddings


def test_find_gridding_monotone_singletons():
    assert find_gridding(Permutation.parse("321"), GridMatrix.parse("+")) is None
    assert find_gridding(Permutation.parse("321"), GridMatrix.parse("-")) == Gridding(
        (1, 4), (1, 4)
    )


def test_membership(demo_matrix, demo_perm):
    assert in_grid_class(demo_perm, demo_matrix)
    assert in_grid_class(Permutation(()), GridMatrix.parse(". .\n. ."))
    assert not in_grid_class(Permutation.parse("321"), GridMatrix.parse("+ +"))


def test_single_increasing_cell_class_is_identities():
    m = GridMatrix.parse("+")
    for n in range(8):
        assert in_grid_class(Permutation(tuple(range(1, n + 1))), m)
    assert not in_grid_class(Permutation.parse("132"), m)


@given(permutations(max_n=5), matrices(max_t=2, max_u=2))
@settings(max_examples=200, deadline=None)
def test_find_gridding_matches_brute_force(pi, m):
    found = find_gridding(pi, m)
    expected = brute_griddings(pi.entries, m)
    if found is None:
        assert expected == []
    else:
        assert (found.cols, found.rows) == expected[0]
        assert check_gridding(pi, m, found)


@given(permutations(max_n=5, min_n=1), matrices(max_t=2, max_u=2))
@settings(max_examples=150, deadline=None)
def test_membership_closed_under_point_deletion(pi, m):
    if not in_grid_class(pi, m):
        return
    for drop in range(len(pi)):
        child = pattern_of(pi.entries[:drop] + pi.entries[drop + 1 :])
        assert in_grid_class(child, m)
