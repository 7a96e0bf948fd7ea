import random
from collections import Counter

import pytest

from gforest.genfun import GFKind, build_tree_gf, extract_counts
from gforest.oracle import (
    BudgetExceeded,
    contract_move,
    contractible_edges,
    decorate_grassmannian,
    enumerate_forests,
    enumerate_trees,
    helicity,
    mom_dimension,
)
from gforest.perms import (
    DecoratedPermutation,
    SizeTooSmall,
    amalgamation,
    antiexcedances,
    cyclic_rotation,
    descents,
    direct_sum,
    enumerate_grass_tree_permutations,
    enumerate_separable,
    grass_forest_permutation_sets,
    grass_tree_permutation_sets,
    is_separable,
    pi_perm,
    trip_permutation,
)

WHITE_STAR3 = ((tuple(range(1, 4)), (1, None, None)),)
BLACK_STAR3 = ((tuple(range(1, 4)), (2, None, None)),)

LARGE_SCHROEDER = [1, 2, 6, 22, 90, 394, 1806]


def test_decorated_permutation_validation():
    with pytest.raises(ValueError):
        DecoratedPermutation((1, 1))
    with pytest.raises(ValueError):
        DecoratedPermutation((1, 2))  # undecorated fixed points
    with pytest.raises(ValueError):
        DecoratedPermutation((2, 1), ((1, "white"),))
    w = DecoratedPermutation((1, 3, 2), ((1, "white"),))
    assert w.decoration(1) == "white"


def test_rendering_markers():
    w = DecoratedPermutation((1, 3, 2), ((1, "black"),))
    assert w.to_text() == "(_1,3,2)"
    v = DecoratedPermutation((2, 1, 3), ((3, "white"),))
    assert v.to_text() == "(2,1,^3)"
    assert v.to_json() == {"images": [2, 1, 3], "decorations": {"3": "white"}}


def test_trip_permutations_of_trivalent_stars():
    assert trip_permutation(WHITE_STAR3).images == (2, 3, 1)
    assert trip_permutation(BLACK_STAR3).images == (3, 1, 2)


def test_trip_permutation_of_single_vertex_stars():
    for n in range(3, 8):
        for k in range(1, n):
            star = ((tuple(range(1, n + 1)), (k,) + (None,) * (n - 1)),)
            assert trip_permutation(star) == pi_perm(k, n), (k, n)


def test_trip_permutation_decorates_leaves():
    G = (((1,), 0), ((2,), 1), ((3, 4), None))
    w = trip_permutation(G)
    assert w.images == (1, 2, 4, 3)
    assert w.decoration(1) == "black" and w.decoration(2) == "white"


def test_antiexcedance_examples():
    assert antiexcedances(DecoratedPermutation((2, 3, 1))) == 1
    assert antiexcedances(DecoratedPermutation((3, 1, 2))) == 2
    all_white = DecoratedPermutation((1, 2, 3), tuple((i, "white") for i in (1, 2, 3)))
    assert antiexcedances(all_white) == 3


def test_direct_sum_examples():
    one = pi_perm(1, 1)
    assert direct_sum(one, one).images == (1, 2)
    swap = DecoratedPermutation((2, 1))
    assert direct_sum(swap, one).images == (2, 1, 3)
    assert direct_sum(swap, swap).images == (2, 1, 4, 3)
    shifted = direct_sum(one, pi_perm(0, 1))
    assert shifted.decorations == ((1, "white"), (2, "black"))


def test_amalgamation_examples():
    swap = DecoratedPermutation((2, 1))
    assert amalgamation(swap, swap) == swap
    assert amalgamation(pi_perm(1, 3), pi_perm(1, 3)) == pi_perm(1, 4)
    wb_tree = ((tuple(range(1, 5)), (1, None, (2, None, None))),)
    assert amalgamation(pi_perm(1, 3), pi_perm(2, 3)) == trip_permutation(wb_tree)


def test_amalgamation_rejects_small_operands():
    with pytest.raises(SizeTooSmall):
        amalgamation(pi_perm(1, 1), DecoratedPermutation((2, 1)))


def test_cyclic_rotation_examples():
    assert cyclic_rotation(DecoratedPermutation((2, 3, 1))).images == (2, 3, 1)
    w = DecoratedPermutation((2, 1, 3), ((3, "black"),))
    rotated = cyclic_rotation(w)
    assert rotated.images == (1, 3, 2)
    assert rotated.decorations == ((1, "black"),)
    v = pi_perm(2, 5)
    out = v
    for _ in range(5):
        out = cyclic_rotation(out)
    assert out == v


def test_trip_permutation_invariant_under_contraction():
    rng = random.Random(23)
    pool = [
        G
        for F in enumerate_forests(6)
        for G in decorate_grassmannian(F, contracted_only=False)
        if contractible_edges(G)
    ]
    for _ in range(300):
        G = rng.choice(pool)
        H = contract_move(G, rng.choice(contractible_edges(G)))
        assert trip_permutation(H) == trip_permutation(G)


@pytest.mark.parametrize("n", range(1, 7))
def test_antiexcedances_equal_helicity(n):
    for F in enumerate_forests(n):
        for G in decorate_grassmannian(F, contracted_only=False):
            assert antiexcedances(trip_permutation(G)) == helicity(G)


# -- separable permutations ------------------------------------------------------


def test_separable_histogram_n3():
    assert enumerate_separable(3) == {0: 1, 1: 4, 2: 1}


def test_separable_totals_follow_large_schroeder():
    for n in range(1, 8):
        assert sum(enumerate_separable(n).values()) == LARGE_SCHROEDER[n - 1]


def test_separable_pattern_examples():
    assert not is_separable((2, 4, 1, 3))
    assert not is_separable((3, 1, 4, 2))
    assert not is_separable((1, 3, 5, 2, 4))  # contains 2413 at positions 2..5
    assert is_separable((5, 4, 3, 2, 1))


def test_separable_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_separable(11)


@pytest.mark.parametrize("n", range(2, 8))
def test_separable_descents_match_plabic_tree_series(n):
    hist = enumerate_separable(n - 1)
    series = build_tree_gf(GFKind.PLABIC_TREE, n).eval_q(1)
    for k in range(1, n):
        assert hist.get(k - 1, 0) == series[n].coefficient(k, 0), (n, k)


# -- closures ---------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_permutation_closure_equals_trip_permutations(n):
    closure = set(enumerate_grass_tree_permutations(n))
    trips = {
        trip_permutation(G)
        for T in enumerate_trees(n)
        for G in decorate_grassmannian(T, contracted_only=True)
    }
    assert closure == trips


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_permutation_counts_match_series(n):
    hist = Counter()
    for T in enumerate_trees(n):
        for G in decorate_grassmannian(T, contracted_only=True):
            hist[(antiexcedances(trip_permutation(G)), mom_dimension(G))] += 1
    assert dict(hist) == extract_counts(build_tree_gf(GFKind.GRASS_TREE, n), n)


@pytest.mark.parametrize("n", range(1, 7))
def test_forest_permutation_closure_equals_trip_permutations(n):
    closure = grass_forest_permutation_sets(n)[n]
    trips = {
        trip_permutation(G)
        for F in enumerate_forests(n)
        for G in decorate_grassmannian(F, contracted_only=True)
    }
    assert closure == trips


def test_closure_budget():
    with pytest.raises(BudgetExceeded):
        grass_tree_permutation_sets(7, budget=5)
