"""Spanning-forest and spanning-tree counting.

The bridge to circuits: an oriented incidence matrix B gives det(I+BBᵀ)
as the number of rooted spanning forests, det(Ix+BᵀB) as the generating
polynomial in the number of roots, and any Laplacian cofactor as the
spanning-tree count.  A three-stack closed circuit built from edge and
vertex nodes collapses to BBᵀ, tying the counts to circuit evaluation.
Brute-force enumerators double as oracles for all of it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .circuit import Circuit, Stack
from .errors import TooLarge, ValidationError
from .labeled import LabeledMatrix, compose, dagger, labeled, principal_minor_sum
from .scalars import det_grid

ENUM_EDGE_CAP = 20


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]  # 1-based endpoints, (tail, head)

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValidationError(f"edge ({u},{v}) endpoint out of range")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")


def reorient(g: Graph, seed: int) -> Graph:
    """Flip each edge direction with probability 1/2 (counts must not move)."""
    rng = random.Random(seed)
    flipped = tuple((v, u) if rng.random() < 0.5 else (u, v) for u, v in g.edges)
    return Graph(g.vertex_count, flipped)


def incidence_matrix(g: Graph) -> LabeledMatrix:
    """|E| x |V| signed incidence: +1 at the tail, -1 at the head.

    Vertex labels are 1..n; edge labels continue at n+1 so the two label
    spaces never collide.
    """
    n, m = g.vertex_count, len(g.edges)
    ent = [[Fraction(0)] * n for _ in range(m)]
    for i, (u, v) in enumerate(g.edges):
        ent[i][u - 1] = Fraction(1)
        ent[i][v - 1] = Fraction(-1)
    return labeled(tuple(range(n + 1, n + m + 1)), tuple(range(1, n + 1)), ent)


def laplacian(g: Graph) -> list[list[Fraction]]:
    """BᵀB as a plain grid: degrees on the diagonal, -multiplicity off it."""
    n = g.vertex_count
    grid = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges:
        grid[u - 1][u - 1] += 1
        grid[v - 1][v - 1] += 1
        grid[u - 1][v - 1] -= 1
        grid[v - 1][u - 1] -= 1
    return grid


def graph_to_circuit(g: Graph) -> Circuit:
    """Closed three-stack circuit whose value is the rooted forest count.

    Stack 0 splits each edge wire into its two incidences with incidence
    signs, stack 1 is an all-ones gate per vertex joining its incidences,
    stack 2 recombines incidences into edge wires; the loop closes edge
    wires onto themselves, and the collapsed matrix is exactly BBᵀ.
    """
    n, m = g.vertex_count, len(g.edges)

    def inc(i: int, s: int) -> int:  # boundary-1 incidence wire
        return m + 2 * i + s + 1

    def out_inc(i: int, s: int) -> int:  # boundary-2 incidence wire
        return 3 * m + 2 * i + s + 1

    split_gates = []
    join_gates = []
    for i, (u, v) in enumerate(g.edges):
        split_gates.append(labeled(
            (inc(i, 0), inc(i, 1)), (i + 1,),
            [[Fraction(1)], [Fraction(-1)]]))
        join_gates.append(labeled(
            (i + 1,), (out_inc(i, 0), out_inc(i, 1)),
            [[Fraction(1), Fraction(-1)]]))

    at_vertex: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, (u, v) in enumerate(g.edges):
        at_vertex[u].append(2 * i)      # incidence index of (i, tail)
        at_vertex[v].append(2 * i + 1)  # incidence index of (i, head)
    vertex_gates = []
    for v in range(1, n + 1):
        slots = at_vertex[v]
        cols = tuple(m + s + 1 for s in slots)
        rows = tuple(3 * m + s + 1 for s in slots)
        d = len(slots)
        vertex_gates.append(labeled(rows, cols,
                                    [[Fraction(1)] * d for _ in range(d)]))

    stacks = (Stack(tuple(split_gates)),
              Stack(tuple(vertex_gates)),
              Stack(tuple(join_gates)))
    wirings = tuple(
        tuple((lab, lab) for lab in stacks[k].out_labels)
        for k in range(3)
    )
    # the loop-closing wiring maps edge-out wires back to edge-in wires
    return Circuit(stacks, wirings)


def count_rooted_forests(g: Graph) -> int:
    b = incidence_matrix(g)
    d = principal_minor_sum(compose(b, dagger(b)))
    assert isinstance(d, Fraction) and d.denominator == 1
    return int(d)


@dataclass(frozen=True)
class ForestPolynomial:
    coefficients: tuple[int, ...]  # index k = number of roots

    def __call__(self, x: int) -> int:
        return sum(c * x ** k for k, c in enumerate(self.coefficients))


def forest_polynomial(g: Graph) -> ForestPolynomial:
    """det(Ix + BᵀB) with exact integer coefficients (Faddeev-LeVerrier)."""
    n = g.vertex_count
    a = [[-x for x in row] for row in laplacian(g)]  # char poly of -L
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    c = Fraction(1)
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) + (c if i == j else 0)
               for j in range(n)] for i in range(n)]
        trace = sum(sum(a[i][t] * am[t][i] for t in range(n)) for i in range(n))
        c = Fraction(-trace) / k
        mk = am
        coeffs[n - k] = c
    ints = tuple(int(x) for x in coeffs)
    assert all(Fraction(i) == x for i, x in zip(ints, coeffs))
    return ForestPolynomial(ints)


def laplacian_cofactor(g: Graph, i: int) -> int:
    """det of the Laplacian with row and column i removed (0-based)."""
    lap = laplacian(g)
    n = g.vertex_count
    keep = [j for j in range(n) if j != i]
    grid = [[lap[r][s] for s in keep] for r in keep]
    d = det_grid(grid) if keep else Fraction(1)
    return int(d)


def count_spanning_trees(g: Graph) -> int:
    if g.vertex_count == 0:
        return 0
    return abs(laplacian_cofactor(g, 0))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def _acyclic_subsets(g: Graph) -> Iterator[tuple[frozenset[int], list[list[int]]]]:
    m = len(g.edges)
    if m > ENUM_EDGE_CAP:
        raise TooLarge(f"{m} edges > enumeration cap {ENUM_EDGE_CAP}")
    for size in range(min(m, g.vertex_count - 1) + 1 if g.vertex_count else 1):
        for subset in combinations(range(m), size):
            uf = _UnionFind(g.vertex_count)
            ok = True
            for i in subset:
                u, v = g.edges[i]
                if not uf.union(u - 1, v - 1):
                    ok = False
                    break
            if not ok:
                continue
            comps: dict[int, list[int]] = {}
            for v in range(g.vertex_count):
                comps.setdefault(uf.find(v), []).append(v + 1)
            yield frozenset(subset), list(comps.values())


def enumerate_forests(g: Graph) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All (edge index set, root set) pairs: acyclic subgraph, one root per tree."""
    out: list[tuple[frozenset[int], frozenset[int]]] = []
    for subset, comps in _acyclic_subsets(g):
        for roots in _root_choices(comps):
            out.append((subset, frozenset(roots)))
    out.sort(key=lambda fr: (sorted(fr[0]), sorted(fr[1])))
    return out


def _root_choices(comps: list[list[int]]) -> Iterator[tuple[int, ...]]:
    if not comps:
        yield ()
        return
    head, rest = comps[0], comps[1:]
    for tail in _root_choices(rest):
        for r in head:
            yield (r,) + tail


def enumerate_trees(g: Graph) -> list[frozenset[int]]:
    """All spanning trees as edge index sets."""
    n = g.vertex_count
    out = [subset for subset, comps in _acyclic_subsets(g)
           if n > 0 and len(subset) == n - 1 and len(comps) == 1]
    out.sort(key=sorted)
    return out


def forest_histogram(g: Graph) -> list[int]:
    """Count of rooted forests by number of roots; index k = k roots."""
    hist = [0] * (g.vertex_count + 1)
    for _, roots in enumerate_forests(g):
        hist[len(roots)] += 1
    return hist
