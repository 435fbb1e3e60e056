"""Tensor realizations of diagrams and exact rank computations.

Rank oracle: over (C^N)^{\\otimes n} the span of the maps of all set
partitions of n points equals the space of vectors invariant under the
diagonal symmetric group S_N, whose dimension is the number of index
orbits, i.e. the sum of Stirling numbers S(n, j) for j <= N.
"""

from qcomb import linreal
from qcomb.categories import NAMED, enumerate_members
from qcomb.linreal import check_laws, fixed_points_dim, gram_rank, law_pairs, realize
from qcomb.partitions import duality, enumerate_partitions, identity


def stirling2(n, j):
    if n == j == 0:
        return 1
    if n == 0 or j == 0:
        return 0
    return j * stirling2(n - 1, j) + stirling2(n - 1, j - 1)


def all_parts(n):
    return list(enumerate_partitions("", "o" * n))


def test_rank_of_all_partitions_matches_diagonal_invariants():
    for n in (2, 3, 4):
        for N in (2, 3):
            expected = sum(stirling2(n, j) for j in range(1, N + 1))
            assert gram_rank(all_parts(n), N) == expected


def test_rank_collapses_to_one_on_a_single_point_space():
    # every diagram realizes to the same all-ones vector at N = 1, this
    # also exercises the exact fallback path for rank-deficient families
    assert gram_rank(all_parts(4), 1) == 1


def test_noncrossing_families_have_full_rank_for_large_N():
    nc = enumerate_members(NAMED["NCall"], "", "o" * 4)
    assert gram_rank(nc, 4) == len(nc) == 14
    assert gram_rank(nc, 5) == 14


def test_rank_agrees_between_gram_and_explicit_vectors():
    parts = all_parts(3)
    maps = [realize(p, 2) for p in parts]
    assert linreal.rank(maps) == gram_rank(parts, 2)


def test_fixed_point_dimensions_count_unitary_pairings():
    for N in (2, 3, 4):
        assert fixed_points_dim("ox", N) == 1
    assert fixed_points_dim("oxox", 4) == 2
    assert fixed_points_dim("oo", 4) == 0


def test_realized_identity_has_diagonal_entries():
    m = realize(identity("o"), 3)
    assert (m.k, m.l) == (1, 1)
    assert m.entries == {((i,), (i,)): 1 for i in range(3)}


def test_realized_cup_pairs_equal_indices():
    d = duality("o", "x").adjoint()  # no upper points, two lower points
    m = realize(d, 2)
    assert (m.k, m.l) == (0, 2)
    assert m.entries == {((0, 0), ()): 1, ((1, 1), ()): 1}


def test_laws_hold_exactly_on_small_diagrams():
    for N in (2, 3):
        report = check_laws(law_pairs(4), N)
        assert report["orientation"] == "maps_scale_composite"
        assert report["pairs_checked"] > 0


def test_law_pairs_stay_within_the_point_bound():
    for p, q in law_pairs(4):
        assert len(p.upper) + len(p.lower) <= 4
        assert len(q.upper) + len(q.lower) <= 4
