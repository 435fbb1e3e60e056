"""Quantum spaces, quantum trees and their symmetry invariants.

Oracles: a rooted tree of depth k over a base of N points has
(N^(k+1) - 1) / (N - 1) vertices, N of them adjacent to the root; the
per-level Schur constants of the weighted tree state are delta_k * delta^i
where delta is the square root of the base dimension and delta_k is the
truncated geometric sum 1 + delta + ... + delta^k.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qcomb import qgraph
from qcomb.qgraph import (
    ONE,
    Quad,
    QuantumTree,
    action_commutes,
    check_delta_form,
    classical,
    classical_graph,
    embedding_scalars,
    haar_unitary,
    matrix_trace,
    schur_constants,
    tree_counts,
)

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def quad(a, b, d=2):
    return Quad(Fraction(a), Fraction(b), d)


@given(rationals, rationals, rationals, rationals)
def test_quadratic_field_arithmetic(a, b, c, d):
    x = Quad(a, b, 2)
    y = Quad(c, d, 2)
    assert x + y == Quad(a + c, b + d, 2)
    assert x * y == y * x
    assert x * (y + ONE) == x * y + x
    if not x.is_zero():
        assert x * x.inverse() == ONE


def test_square_roots_of_integers():
    s2 = Quad.sqrt(2)
    assert s2 * s2 == Quad.of(2)
    assert Quad.sqrt(4) == Quad.of(2)
    assert Quad.of(3) + s2 == quad(3, 1)


def test_delta_form_axiom_holds_for_both_base_kinds():
    for base in (classical(2), classical(3), matrix_trace(2), matrix_trace(3)):
        assert check_delta_form(base)


def test_weighted_constants_are_a_geometric_ladder():
    r = schur_constants(QuantumTree(classical(2), 2), weighted=True)
    assert r.id_constants == [quad(3, 1), quad(2, 3), quad(6, 2)]
    assert r.delta_k_squared == quad(11, 6)
    r3 = schur_constants(QuantumTree(classical(3), 3), weighted=True)
    assert r3.id_constants == [
        Quad(Fraction(4), Fraction(4), 3),
        Quad(Fraction(12), Fraction(4), 3),
        Quad(Fraction(12), Fraction(12), 3),
        Quad(Fraction(36), Fraction(12), 3),
    ]
    rm = schur_constants(QuantumTree(matrix_trace(2), 2), weighted=True)
    assert rm.id_constants == [Quad.of(7), Quad.of(14), Quad.of(28)]
    assert rm.delta_k_squared == Quad.of(49)


def test_per_level_constants_are_powers_of_the_base_dimension():
    r = schur_constants(QuantumTree(classical(2), 2), weighted=False)
    assert r.id_constants == [ONE, Quad.of(2), Quad.of(4)]
    rm = schur_constants(QuantumTree(matrix_trace(2), 2), weighted=False)
    assert rm.id_constants == [ONE, Quad.of(4), Quad.of(16)]


def test_constants_match_the_single_global_value_only_at_depth_zero():
    assert schur_constants(QuantumTree(classical(2), 0)).matches_global_constant
    assert not schur_constants(QuantumTree(classical(2), 2)).matches_global_constant


def test_embedding_scalars_are_the_square_root_of_the_dimension():
    t = QuantumTree(classical(2), 2)
    assert embedding_scalars(t) == [Quad.sqrt(2), Quad.sqrt(2)]


def test_tree_counts_match_the_geometric_series():
    for N in (2, 3):
        for k in (0, 1, 2, 3):
            total, non_root = tree_counts(N, k)
            assert total == (N ** (k + 1) - 1) // (N - 1)
            assert non_root == total - 1


def test_classical_graph_is_a_rooted_regular_tree():
    g = classical_graph(2, 2)
    assert len(g) == 7
    assert g[()] == [(0,), (1,)]
    # each non-leaf vertex has exactly N children, leaves have none
    child_counts = sorted(len(v) for v in g.values())
    assert child_counts == [0, 0, 0, 0, 2, 2, 2]
    children = [w for nbrs in g.values() for w in nbrs]
    assert len(children) == len(set(children)) == 6
    assert set(children) | {()} == set(g)


def test_haar_unitaries_are_unitary_and_commute_with_the_action():
    rng = np.random.default_rng(7)
    for _ in range(3):
        V = haar_unitary(3, rng)
        assert np.allclose(V @ V.conj().T, np.eye(3), atol=1e-12)
        assert action_commutes(3, 1, V, 1e-9)


def test_action_rejects_non_unitaries():
    with pytest.raises(qgraph.NotUnitary):
        action_commutes(2, 1, np.diag([1.0, 2.0]), 1e-9)
