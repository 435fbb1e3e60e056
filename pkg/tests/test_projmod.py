"""Projective diagrams, equivalence, domination and module closures."""

import pytest

from qcomb import projmod, words
from qcomb.categories import CU, NAMED
from qcomb.partitions import Partition, duality, identity
from qcomb.projmod import (
    PartitionUniverse,
    catalog,
    classify_module,
    closure,
    dominated,
    equivalent,
    through_word,
    through_word_module,
    word_module,
)

EMPTY = Partition("", "", ())
BAR = identity("o")
TWO = identity("oo")
CUPCAP = duality("o", "x").adjoint().compose(duality("o", "x"))[0]


def universe(name, bound=6):
    return PartitionUniverse(NAMED[name], bound)


def test_domination_is_two_sided_absorption():
    assert dominated(CUPCAP, identity("ox"))
    assert not dominated(identity("ox"), CUPCAP)
    assert dominated(CUPCAP, CUPCAP)
    # different frames never dominate
    assert not dominated(EMPTY, BAR)


def test_equivalence_witness_links_the_empty_diagram_to_the_nested_pair():
    u = universe("NC2")
    r = equivalent(u, EMPTY, CUPCAP)
    assert r is not None
    # the witness conjugates one projective into the other
    assert r.adjoint().compose(r)[0] == EMPTY
    assert r.compose(r.adjoint())[0] == CUPCAP


def test_no_equivalence_across_row_parity_in_the_odd_block_parity_category():
    u = universe("NCprime")
    ss = Partition("o", "o", (0, 1))
    assert equivalent(u, ss, EMPTY) is None


def test_closures_contain_their_generators_and_only_projectives():
    # members are stored in the all-white color normalization
    nested = Partition("oo", "oo", (0, 0, 1, 1))
    u = universe("NC2")
    m = closure(u, [nested])
    assert nested in m.members
    for p in m.members:
        assert p.upper == p.lower
        assert p.adjoint() == p
        assert p.compose(p)[0] == p


def test_catalog_names_and_sizes_at_bound_six():
    assert {k: len(v.members) for k, v in catalog(universe("NC2")).items()} == {
        "proj0": 2,
        "proj2": 3,
        "proj": 7,
    }
    assert {k: len(v.members) for k, v in catalog(universe("NCall")).items()} == {
        "proj0": 9,
        "proj": 29,
    }
    assert set(catalog(universe("NCeven"))) == {"proj0", "proj_half", "proj2", "proj"}
    assert set(catalog(universe("NCprime"))) == {"cap", "proj0", "proj2", "proj"}


def test_fork_witness_collapses_the_two_strand_module_onto_the_full_one():
    # with singletons allowed, the strand-plus-singleton diagram conjugates
    # the single strand into a projective dominated by the doubled strand,
    # so the closure of the doubled strand absorbs the full module
    u = universe("NC12")
    fork = Partition("o", "oo", (0, 0, 1))
    rr = fork.compose(fork.adjoint())[0]
    assert fork.adjoint().compose(fork)[0] == BAR
    assert dominated(rr, TWO)
    proj2 = closure(u, [TWO])
    proj = closure(u, [BAR])
    assert proj2.members == proj.members


def test_row_parity_separates_modules_when_singletons_come_in_pairs():
    u = universe("NCprime")
    proj2 = closure(u, [TWO])
    assert all(len(p.upper) % 2 == 0 for p in proj2.members)
    assert BAR not in proj2.members
    assert BAR in closure(u, [BAR]).members


@pytest.mark.parametrize("name", ["NC2", "NCall", "NCprime"])
def test_catalog_modules_are_stable_under_sandwiching(name):
    u = universe(name)
    for mod in catalog(u).values():
        for p in mod.members:
            for q in mod.members:
                if p.upper != q.upper:
                    continue
                s = q.compose(p.compose(q)[0])[0]
                assert s.adjoint() == s
                assert s.compose(s)[0] == s
                assert s in mod.members


def test_classify_module_recovers_catalog_names():
    u = universe("NC2")
    # the nested pair is equivalent to the empty diagram, both land in the
    # module generated by the unit
    assert classify_module(u, [CUPCAP]) == "proj0"
    assert classify_module(u, [EMPTY]) == "proj0"
    assert classify_module(u, [TWO]) == "proj2"
    assert classify_module(u, [BAR]) == "proj"


def test_through_words_read_off_the_propagating_strands():
    assert through_word(identity("ox")) == "ox"
    assert through_word(CUPCAP) == ""
    assert through_word(EMPTY) == ""


def test_word_modules_in_the_unitary_category_recover_generated_word_sets():
    u = PartitionUniverse(CU, 6)
    for w in ("", "ox"):
        mod = word_module(u, w)
        assert through_word_module(mod) == words.generate([w], 3).members
