"""Pfaffians, skew matrices, and Pfaffian circuits.

A Pfaffian circuit assigns each edge id to exactly one state gate and
exactly one costate gate; both carry skew matrices over their edge
lists.  Its value is the full contraction of the sub-Pfaffian tensors,
and the fast path computes it as a single Pfaffian of an edge-indexed
matrix: the states assemble into one skew matrix, the costates into a
second one whose entries get a checkerboard sign twist, and the value
is the Pfaffian of their sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    DanglingWire,
    EdgeMultiplicity,
    NotSkew,
    TooLarge,
)
from .scalars import Scalar, is_exact, normalize_grid, scalars_equal
from .tensor import Bits, Tensor, oracle_cap, tensor_compose, tensor_product

PF_ORACLE_MAX = 12


def pfaffian(grid: Sequence[Sequence[Scalar]]) -> Scalar:
    """Pfaffian of a skew-symmetric matrix, by blocked elimination.

    Exact over Fraction entries; partial pivoting over complex.  Small
    sizes use the closed forms.
    """
    n = len(grid)
    if n == 0:
        return Fraction(1)
    if n % 2 == 1:
        return Fraction(0) if all(is_exact(x) for row in grid for x in row) else 0j
    if n == 2:
        return grid[0][1]
    if n == 4:
        a = grid
        return a[0][1] * a[2][3] - a[0][2] * a[1][3] + a[0][3] * a[1][2]
    A = [list(row) for row in grid]
    exact = all(is_exact(x) for row in A for x in row)
    pf: Scalar = Fraction(1) if exact else complex(1)
    for k in range(0, n - 1, 2):
        if exact:
            piv = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
        else:
            piv = max(range(k + 1, n), key=lambda i: abs(A[i][k]), default=None)
            if piv is not None and A[piv][k] == 0:
                piv = None
        if piv is None:
            return Fraction(0) if exact else 0j
        if piv != k + 1:
            A[piv], A[k + 1] = A[k + 1], A[piv]
            for row in A:
                row[piv], row[k + 1] = row[k + 1], row[piv]
            pf = -pf
        b = A[k][k + 1]
        pf = pf * b
        # Schur complement of the leading 2x2 block onto the rest.
        for i in range(k + 2, n):
            ci, di = A[k][i], A[k + 1][i]
            if ci == 0 and di == 0:
                continue
            for j in range(k + 2, n):
                A[i][j] = A[i][j] + (di * A[k][j] - ci * A[k + 1][j]) / b
    return pf


def _matchings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for i, p in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield ((first, p),) + tail


def pfaffian_oracle(grid: Sequence[Sequence[Scalar]]) -> Scalar:
    """Pfaffian as a signed sum over perfect matchings.

    The sign of a matching is (-1)**crossings when its chords are drawn
    over points 0..n-1 in a line.  Exponential; refuses n > 12.
    """
    n = len(grid)
    if n > PF_ORACLE_MAX:
        raise TooLarge(f"matching-sum pfaffian of size {n} > {PF_ORACLE_MAX}")
    if n == 0:
        return Fraction(1)
    if n % 2 == 1:
        return Fraction(0) if all(is_exact(x) for row in grid for x in row) else 0j
    total: Scalar = Fraction(0)
    for pairs in _matchings(tuple(range(n))):
        term: Scalar = Fraction(1)
        for i, j in pairs:
            term = term * grid[i][j]
        crossings = sum(1 for (a, b), (c, d) in combinations(pairs, 2)
                        if a < c < b < d or c < a < d < b)
        total = total + (term if crossings % 2 == 0 else -term)
    return total


@dataclass(frozen=True)
class SkewMatrix:
    labels: tuple[int, ...]
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise EdgeMultiplicity(f"repeated label in {self.labels}")
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError("skew matrix grid is not square on its labels")
        for i in range(n):
            if not scalars_equal(self.entries[i][i], Fraction(0)):
                raise NotSkew(f"nonzero diagonal at {self.labels[i]}")
            for j in range(i + 1, n):
                if not scalars_equal(self.entries[i][j], -self.entries[j][i]):
                    raise NotSkew(
                        f"entry ({self.labels[i]},{self.labels[j]}) not "
                        "antisymmetric"
                    )

    @property
    def size(self) -> int:
        return len(self.labels)


def skew(labels: Sequence[int], entries: Sequence[Sequence]) -> SkewMatrix:
    return SkewMatrix(tuple(labels), normalize_grid(entries))


def zero_skew(labels: Sequence[int]) -> SkewMatrix:
    n = len(labels)
    return skew(labels, [[Fraction(0)] * n for _ in range(n)])


def skew_restrict(sk: SkewMatrix, keep: Sequence[int]) -> SkewMatrix:
    """Principal submatrix on a label subset, in sk's own order."""
    kset = set(keep)
    pos = [i for i, lab in enumerate(sk.labels) if lab in kset]
    ent = [[sk.entries[i][j] for j in pos] for i in pos]
    return SkewMatrix(tuple(sk.labels[i] for i in pos), tuple(tuple(r) for r in ent))


def anti_transpose(sk: SkewMatrix) -> SkewMatrix:
    """Flip across the anti-diagonal, keeping the label list."""
    n = sk.size
    ent = tuple(tuple(sk.entries[n - 1 - j][n - 1 - i] for j in range(n))
                for i in range(n))
    return SkewMatrix(sk.labels, ent)


def _bits_for(labels: tuple[int, ...], subset: frozenset[int]) -> Bits:
    return tuple(1 if lab in subset else 0 for lab in labels)


def spf(sk: SkewMatrix) -> Tensor:
    """State tensor of all sub-Pfaffians: subset I carries Pf on I."""
    n = sk.size
    if n > oracle_cap():
        raise TooLarge(f"sub-pfaffian expansion over {n} wires")
    data: dict[tuple[Bits, Bits], Scalar] = {}
    for s in range(0, n + 1, 2):
        for pos in combinations(range(n), s):
            grid = [[sk.entries[i][j] for j in pos] for i in pos]
            v = pfaffian(grid)
            if v != 0:
                subset = frozenset(sk.labels[i] for i in pos)
                data[(_bits_for(sk.labels, subset), ())] = v
    return Tensor(sk.labels, (), data)


def spf_dual(sk: SkewMatrix) -> Tensor:
    """Costate tensor: subset I carries Pf on the complement of I."""
    n = sk.size
    if n > oracle_cap():
        raise TooLarge(f"sub-pfaffian expansion over {n} wires")
    data: dict[tuple[Bits, Bits], Scalar] = {}
    for s in range(0, n + 1):
        for pos in combinations(range(n), s):
            others = [i for i in range(n) if i not in set(pos)]
            grid = [[sk.entries[i][j] for j in others] for i in others]
            v = pfaffian(grid)
            if v != 0:
                subset = frozenset(sk.labels[i] for i in pos)
                data[((), _bits_for(sk.labels, subset))] = v
    return Tensor((), sk.labels, data)


@dataclass(frozen=True)
class PfGate:
    kind: str  # "state" or "costate"
    matrix: SkewMatrix

    def __post_init__(self):
        if self.kind not in ("state", "costate"):
            raise ValueError(f"unknown gate kind {self.kind!r}")

    @property
    def edges(self) -> tuple[int, ...]:
        return self.matrix.labels


@dataclass(frozen=True)
class PfaffianCircuit:
    gates: tuple[PfGate, ...]
    edge_count: int


def validate_pfaffian(pc: PfaffianCircuit) -> None:
    """Every edge id 1..edge_count once in a state and once in a costate."""
    for side in ("state", "costate"):
        seen: set[int] = set()
        for g in pc.gates:
            if g.kind != side:
                continue
            for e in g.edges:
                if not 1 <= e <= pc.edge_count:
                    raise DanglingWire(f"edge id {e} outside 1..{pc.edge_count}")
                if e in seen:
                    raise EdgeMultiplicity(f"edge {e} used twice on the {side} side")
                seen.add(e)
        if len(seen) != pc.edge_count:
            missing = set(range(1, pc.edge_count + 1)) - seen
            raise DanglingWire(f"edges {sorted(missing)} have no {side} gate")


def _assemble(pc: PfaffianCircuit, side: str) -> list[list[Scalar]]:
    n = pc.edge_count
    grid: list[list[Scalar]] = [[Fraction(0)] * n for _ in range(n)]
    for g in pc.gates:
        if g.kind != side:
            continue
        for a, ea in enumerate(g.edges):
            for b, eb in enumerate(g.edges):
                grid[ea - 1][eb - 1] = g.matrix.entries[a][b]
    return grid


def eval_pfaffian_circuit(pc: PfaffianCircuit) -> Scalar:
    """Fast evaluation: one Pfaffian of the assembled edge matrix.

    The costate block enters with the sign twist (-1)**(i+j+1) on entry
    (i, j) in 1-based edge ids; that twist is what turns the sum over
    edge subsets of products of sub-Pfaffians into a single Pfaffian.
    """
    validate_pfaffian(pc)
    xi = _assemble(pc, "state")
    theta = _assemble(pc, "costate")
    n = pc.edge_count
    total = [[xi[i][j] + (theta[i][j] if (i + j) % 2 else -theta[i][j])
              for j in range(n)] for i in range(n)]
    return pfaffian(total)


def eval_pfaffian_oracle(pc: PfaffianCircuit) -> Scalar:
    """Oracle evaluation by contracting sub-Pfaffian tensors edge by edge."""
    validate_pfaffian(pc)
    if pc.edge_count > oracle_cap():
        raise TooLarge(f"oracle contraction over {pc.edge_count} edges")
    ket = Tensor((), (), {((), ()): Fraction(1)})
    bra = Tensor((), (), {((), ()): Fraction(1)})
    for g in pc.gates:
        if g.kind == "state":
            ket = tensor_product(ket, spf(g.matrix))
        else:
            bra = tensor_product(bra, spf_dual(g.matrix))
    return tensor_compose(bra, ket).component((), ())
