import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from groverwalk.graphs import arc_space, named_graph, unitary_cayley
from groverwalk.walk import build_operators, evolution_entries, evolve, matrix_power, vertex_state

from conftest import regular_corpus


def test_k2_evolution_is_swap():
    ops = build_operators(named_graph("complete", [2]))
    assert np.array_equal(ops.evolution, [[0.0, 1.0], [1.0, 0.0]])


def test_c4_discriminant_spectrum():
    ops = build_operators(named_graph("cycle", [4]))
    assert np.allclose(np.sort(np.linalg.eigvalsh(ops.discriminant)), [-1, 0, 0, 1], atol=1e-12)


def test_operator_invariants(corpus):
    for name, g in corpus.items():
        ops = build_operators(g)
        d, s, u, p = ops.boundary, ops.shift, ops.evolution, ops.discriminant
        assert np.max(np.abs(d @ d.T - np.eye(g.n))) < 1e-12, name
        assert np.array_equal(s @ s, np.eye(len(s))), name
        assert set(np.unique(s)) <= {0.0, 1.0} and np.all(s.sum(axis=0) == 1), name
        assert np.max(np.abs(u @ u.conj().T - np.eye(len(u)))) < 1e-9, name
        assert np.array_equal(p, p.T), name
        w = np.linalg.eigvalsh(p)
        assert w.min() >= -1 - 1e-12 and w.max() <= 1 + 1e-12, name


def test_regular_discriminant_is_a_over_k():
    for name, g in regular_corpus().items():
        k = g.regular_degree()
        p = build_operators(g).discriminant
        assert np.array_equal(p, g.adjacency / float(k)), name


def test_entry_formula(corpus):
    # the product S(2 d^T d - I) and the entry formula differ only by rounding of (1/sqrt k)^2 vs 1/k
    for name, g in corpus.items():
        ops = build_operators(g)
        assert np.max(np.abs(ops.evolution - evolution_entries(g, ops.arcs))) <= 4e-16, name


def test_general_discriminant_entries(file_graphs):
    g = file_graphs["barbell"]
    p = build_operators(g).discriminant
    deg = g.degrees
    expected = g.adjacency / np.sqrt(np.outer(deg, deg))
    assert np.allclose(p, expected, atol=1e-15)


def test_vertex_states():
    ops = build_operators(named_graph("complete", [2]))
    assert np.allclose(vertex_state(ops, 0), [0, 1])  # arc (1, 0) has index 1

    ops = build_operators(named_graph("cycle", [4]))
    st0 = vertex_state(ops, 0)
    idx = {ops.arcs.index(1, 0), ops.arcs.index(3, 0)}
    assert np.allclose(st0[list(idx)], 1 / np.sqrt(2))
    assert np.count_nonzero(st0) == 2

    ops = build_operators(unitary_cayley(12))
    st0 = vertex_state(ops, 0)
    nz = {tuple(ops.arcs.arcs[i]) for i in np.flatnonzero(st0)}
    assert nz == {(1, 0), (5, 0), (7, 0), (11, 0)}
    assert np.allclose(st0[np.flatnonzero(st0)], 0.5)
    with pytest.raises(ValueError):
        vertex_state(ops, 12)


def test_evolve_examples():
    k2 = build_operators(named_graph("complete", [2]))
    s0 = vertex_state(k2, 0)
    assert np.array_equal(evolve(k2, s0, 0), s0)
    assert np.allclose(evolve(k2, s0, 1), vertex_state(k2, 1))

    c6 = build_operators(named_graph("cycle", [6]))
    out = evolve(c6, vertex_state(c6, 0), 3)
    target = vertex_state(c6, 3)
    gamma = np.vdot(target, out)
    assert abs(abs(gamma) - 1) < 1e-12
    assert np.linalg.norm(out - gamma * target) < 1e-12


def test_matrix_power_examples():
    k2 = build_operators(named_graph("complete", [2]))
    assert np.array_equal(matrix_power(k2, 0), np.eye(2))
    assert np.array_equal(matrix_power(k2, 2), np.eye(2))
    c4 = build_operators(named_graph("cycle", [4]))
    assert np.max(np.abs(matrix_power(c4, 4) - np.eye(8))) < 1e-9
    assert np.max(np.abs(matrix_power(c4, 2) - np.eye(8))) > 0.5


def test_matrix_power_matches_repeated_product():
    ops = build_operators(unitary_cayley(9))
    acc = np.eye(ops.n_arcs)
    for tau in range(1, 14):
        acc = acc @ ops.evolution
        assert np.allclose(matrix_power(ops, tau), acc, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(regular_corpus())), st.integers(0, 60), st.integers(0, 2**32 - 1))
def test_norm_preserved(name, tau, seed):
    ops = build_operators(regular_corpus()[name])
    rng = np.random.default_rng(seed)
    psi = rng.normal(size=ops.n_arcs) + 1j * rng.normal(size=ops.n_arcs)
    psi /= np.linalg.norm(psi)
    assert abs(np.linalg.norm(evolve(ops, psi, tau)) - 1) < 1e-9


def test_operators_are_read_only():
    ops = build_operators(named_graph("cycle", [5]))
    with pytest.raises(ValueError):
        ops.evolution[0, 0] = 3.0
    assert len(arc_space(ops.graph)) == ops.n_arcs
