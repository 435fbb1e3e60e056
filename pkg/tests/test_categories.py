"""Diagram categories: membership predicates and enumeration oracles.

Oracles on one-row all-white frames:
  * noncrossing pairings of 2n points: Catalan(n);
  * noncrossing blocks of size at most two: Motzkin numbers;
  * all noncrossing partitions: Catalan numbers;
  * all pairings of 2n points: double factorial (2n-1)!!.
On a frame with an even number of points the parity-restricted variants
coincide with their parents when the restriction is automatic: blocks of
size at most two on an even frame always leave an even number of
singletons, and every noncrossing partition of an even frame has an even
number of odd blocks.
"""

from qcomb.categories import CU, NAMED, all_members, contains, enumerate_members
from qcomb.partitions import Partition, crossing, duality, identity, singleton

CATALAN = [1, 1, 2, 5, 14, 42]
MOTZKIN = [1, 1, 2, 4, 9, 21, 51]
DOUBLE_FACTORIAL = [1, 1, 3, 15]


def count(name, lower):
    return len(enumerate_members(NAMED[name], "", lower))


def test_noncrossing_pairing_counts():
    for n in range(4):
        assert count("NC2", "o" * (2 * n)) == CATALAN[n]
        assert count("NC2", "o" * (2 * n + 1)) == 0


def test_small_block_counts_are_motzkin():
    for n in range(7):
        assert count("NC12", "o" * n) == MOTZKIN[n]


def test_noncrossing_counts_are_catalan():
    for n in range(6):
        assert count("NCall", "o" * n) == CATALAN[n]


def test_all_pairing_counts_are_double_factorials():
    for n in range(4):
        assert count("P2", "o" * (2 * n)) == DOUBLE_FACTORIAL[n]


def test_parity_restrictions_are_automatic_on_even_frames():
    for n in range(0, 7, 2):
        lower = "o" * n
        a = {p for p in enumerate_members(NAMED["NC12prime"], "", lower)}
        b = {p for p in enumerate_members(NAMED["NC12"], "", lower)}
        assert a == b
        c = {p for p in enumerate_members(NAMED["NCprime"], "", lower)}
        d = {p for p in enumerate_members(NAMED["NCall"], "", lower)}
        assert c == d


def test_parity_restricted_categories_have_no_odd_frames():
    for name in ("NC12prime", "NCprime", "NCeven", "NC12sharp"):
        assert count(name, "ooo") == 0


def test_even_block_counts():
    assert [count("NCeven", "o" * n) for n in (0, 2, 4, 6)] == [1, 1, 3, 12]


def test_unitary_pairing_counts_follow_the_color_pattern():
    for k in range(5):
        assert len(enumerate_members(CU, "", "ox" * k)) == CATALAN[k]
    assert count("CU", "oo") == 0


def test_unitary_pairings_are_noncrossing():
    for p in enumerate_members(CU, "", "ox" * 3):
        assert p.is_noncrossing()
        assert all(len(b) == 2 for b in p.blocks)


def test_membership_predicates_on_distinguished_diagrams():
    fork = Partition("o", "oo", (0, 0, 1))
    assert contains(NAMED["NC12"], fork)
    assert not contains(NAMED["NC12prime"], fork)
    assert not contains(NAMED["NC2"], singleton())
    assert contains(NAMED["NC12"], singleton())
    assert contains(NAMED["P2"], crossing("o", "x"))
    assert not contains(NAMED["NC2"], crossing("o", "x"))
    assert contains(CU, duality("o", "x"))
    assert contains(CU, identity("ox"))


def test_all_members_respects_the_point_bound():
    got = all_members(NAMED["NC2"], 4)
    assert all(len(p.upper) + len(p.lower) <= 4 for p in got)
    assert identity("o") in got


def test_enumeration_is_deterministic():
    a = enumerate_members(NAMED["NCall"], "ox", "xo")
    b = enumerate_members(NAMED["NCall"], "ox", "xo")
    assert a == b
