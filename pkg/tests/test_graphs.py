import random
from fractions import Fraction
from itertools import combinations

import pytest

from detcircuits import (
    Graph,
    TooLarge,
    ValidationError,
    compose,
    contract_circuit,
    count_rooted_forests,
    count_spanning_trees,
    dagger,
    enumerate_forests,
    enumerate_multicycles,
    enumerate_trees,
    evaluate,
    forest_histogram,
    forest_polynomial,
    graph_to_circuit,
    incidence_matrix,
    laplacian,
    laplacian_cofactor,
    principal_minor_sum,
    reorient,
)

K3 = Graph(3, ((1, 2), (2, 3), (3, 1)))
K4 = Graph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))
EDGE = Graph(2, ((1, 2),))
VERTEX = Graph(1, ())
PATH3 = Graph(3, ((1, 2), (2, 3)))


def test_graph_validation():
    with pytest.raises(ValidationError):
        Graph(2, ((1, 1),))  # self-loop
    with pytest.raises(ValidationError):
        Graph(2, ((1, 3),))  # endpoint out of range
    Graph(2, ((1, 2), (1, 2)))  # multi-edges are allowed


def test_incidence_matrix_single_edge():
    b = incidence_matrix(EDGE)
    assert b.shape == (1, 2)
    assert list(b.entries[0]) == [Fraction(1), Fraction(-1)]


def test_incidence_rows_have_norm_two():
    bbt = compose(incidence_matrix(K4), dagger(incidence_matrix(K4)))
    for i in range(6):
        assert bbt.entries[i][i] == 2


def test_count_rooted_forests_small():
    assert count_rooted_forests(VERTEX) == 1
    assert count_rooted_forests(EDGE) == 3
    assert count_rooted_forests(K3) == 16


def test_enumeration_matches_determinant_small():
    for g in (VERTEX, EDGE, PATH3, K3, K4):
        assert count_rooted_forests(g) == len(enumerate_forests(g))
        assert count_spanning_trees(g) == len(enumerate_trees(g))


def test_k3_forest_histogram():
    assert forest_histogram(K3) == [0, 9, 6, 1]


def test_forest_polynomial_values():
    assert forest_polynomial(K3).coefficients == (0, 9, 6, 1)
    assert forest_polynomial(VERTEX).coefficients == (0, 1)
    assert forest_polynomial(EDGE).coefficients == (0, 2, 1)


def test_forest_polynomial_matches_histogram():
    rng = random.Random(0)
    for _ in range(15):
        n = rng.randint(1, 5)
        m = rng.randint(0, min(8, n * 3))
        edges = []
        for _ in range(m):
            u = rng.randint(1, n)
            v = rng.randint(1, n)
            if u != v:
                edges.append((u, v))
        g = Graph(n, tuple(edges))
        poly = forest_polynomial(g)
        hist = forest_histogram(g)
        assert list(poly.coefficients) == hist
        assert sum(poly.coefficients) == count_rooted_forests(g)
        assert poly(1) == count_rooted_forests(g)


def test_spanning_trees_small():
    assert count_spanning_trees(K3) == 3
    assert count_spanning_trees(K4) == 16
    assert count_spanning_trees(PATH3) == 1  # trees have one spanning tree
    assert count_spanning_trees(Graph(4, ((1, 2), (3, 4)))) == 0  # disconnected


def test_all_cofactors_agree():
    rng = random.Random(1)
    for g in (K3, K4, PATH3, Graph(4, ((1, 2), (3, 4)))):
        vals = {abs(laplacian_cofactor(g, i)) for i in range(g.vertex_count)}
        assert len(vals) == 1
    for _ in range(10):
        n = rng.randint(2, 5)
        edges = tuple((rng.randint(1, n - 1), n) for _ in range(rng.randint(1, 4)))
        edges = tuple((u, v) for u, v in edges if u != v)
        g = Graph(n, edges)
        vals = {abs(laplacian_cofactor(g, i)) for i in range(n)}
        assert len(vals) == 1


def test_orientation_invariance():
    for g in (K3, K4, PATH3):
        base = (count_rooted_forests(g), count_spanning_trees(g),
                forest_polynomial(g).coefficients)
        for seed in range(10):
            h = reorient(g, seed)
            assert (count_rooted_forests(h), count_spanning_trees(h),
                    forest_polynomial(h).coefficients) == base


def test_circuit_value_is_forest_count():
    for g in (VERTEX, EDGE, PATH3, K3):
        c = graph_to_circuit(g)
        assert evaluate(c) == count_rooted_forests(g)


def test_circuit_matches_oracle_on_tiny_graphs():
    for g in (EDGE, PATH3):
        c = graph_to_circuit(g)
        assert contract_circuit(c) == count_rooted_forests(g)


def test_circuit_collapse_is_gram_matrix():
    # the loop composite of the three-stack construction is B B^T
    for g in (EDGE, PATH3, K3):
        b = incidence_matrix(g)
        bbt = compose(b, dagger(b))
        c = graph_to_circuit(g)
        from detcircuits import collapse
        col = collapse(c)
        assert [list(r) for r in col.entries] == [list(r) for r in bbt.entries]
        assert evaluate(c) == principal_minor_sum(bbt)


def test_laplacian_census_trace_identity():
    # det(I + B B^T) = det(I + B^T B): edge-indexed and vertex-indexed agree
    rng = random.Random(2)
    for _ in range(10):
        n = rng.randint(1, 5)
        edges = []
        for _ in range(rng.randint(0, 7)):
            u, v = rng.randint(1, n), rng.randint(1, n)
            if u != v:
                edges.append((u, v))
        g = Graph(n, tuple(edges))
        b = incidence_matrix(g)
        lhs = principal_minor_sum(compose(b, dagger(b)))
        rhs = principal_minor_sum(compose(dagger(b), b))
        assert lhs == rhs == count_rooted_forests(g)


def test_enumerate_forests_cap():
    big = Graph(7, tuple((1 + i % 6, 7) for i in range(21)))
    with pytest.raises(TooLarge):
        enumerate_forests(big)


def _decode_multicycle(g, support):
    """Recover (edges, in-endpoint map, out-endpoint map) from wire labels."""
    m = len(g.edges)
    edges = set()
    t_map = {}
    u_map = {}
    for k, lab in support:
        if k == 0:
            edges.add(lab - 1)
        elif k == 1:
            idx = lab - m - 1
            e, s = divmod(idx, 2)
            t_map[e] = g.edges[e][s]
        else:
            idx = lab - 3 * m - 1
            e, s = divmod(idx, 2)
            u_map[e] = g.edges[e][s]
    return edges, t_map, u_map


def _cycle_count(perm):
    seen = set()
    cycles = 0
    for start in perm:
        if start in seen:
            continue
        length = 0
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length >= 2:
            cycles += 1
    return cycles


@pytest.mark.parametrize("g", [EDGE, PATH3, K3, Graph(2, ((1, 2), (1, 2)))])
def test_multicycle_classifier(g):
    # every multicycle of a graph circuit has weight +1 or -1; the sign is
    # determined by the permutation the endpoint maps induce on the chosen
    # edges: straight-through entries give +1, each closed cycle of length
    # >= 2 contributes a -1
    report = enumerate_multicycles(graph_to_circuit(g))
    total = Fraction(0)
    for mc in report:
        edges, t_map, u_map = _decode_multicycle(g, mc.support)
        assert set(t_map) == set(u_map) == edges
        assert sorted(t_map.values()) == sorted(u_map.values())
        # sigma sends e to the edge whose out-vertex is e's in-vertex
        by_out = {v: e for e, v in u_map.items()}
        sigma = {e: by_out[t_map[e]] for e in edges}
        want = Fraction(-1) ** _cycle_count(sigma)
        assert mc.weight == want
        total += mc.weight
    assert total == count_rooted_forests(g)
