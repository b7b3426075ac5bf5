"""Minor-expansion tensors.

Every labeled matrix M expands into a tensor holding all of its minors:
the component at (row subset I, column subset J) is det(M_IJ), zero when
the subsets have different sizes, and 1 at the empty pair.  Tensor legs
follow the wire lists, one bit per wire, leftmost wire first.  Composing
and tracing these tensors is exponentially slow, which is the point:
contract_circuit() is the independent oracle the fast determinant path
is checked against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Mapping

from .circuit import Circuit, validate, wiring_matrix
from .errors import LabelCollision, LabelMismatch, TooLarge
from .labeled import LabeledMatrix, Scalar, compose, submatrix
from .scalars import det_grid, scalars_equal

Bits = tuple[int, ...]

DEFAULT_ORACLE_CAP = 20


def oracle_cap() -> int:
    return int(os.environ.get("DETCIRC_ORACLE_CAP", DEFAULT_ORACLE_CAP))


@dataclass(frozen=True, eq=False)
class Tensor:
    out_wires: tuple[int, ...]
    in_wires: tuple[int, ...]
    data: Mapping[tuple[Bits, Bits], Scalar] = field(default_factory=dict)

    def component(self, ket: Bits, bra: Bits) -> Scalar:
        return self.data.get((ket, bra), Fraction(0))

    def support(self) -> Iterator[tuple[Bits, Bits]]:
        return iter(sorted(self.data))


def tensors_equal(a: Tensor, b: Tensor, tol: float = 1e-9) -> bool:
    if a.out_wires != b.out_wires or a.in_wires != b.in_wires:
        return False
    for key in set(a.data) | set(b.data):
        if not scalars_equal(a.component(*key), b.component(*key), tol):
            return False
    return True


def _subset_bits(n: int, positions: tuple[int, ...]) -> Bits:
    bits = [0] * n
    for p in positions:
        bits[p] = 1
    return tuple(bits)


def sdet_expand(m: LabeledMatrix, cap: int | None = None) -> Tensor:
    """Tensor of all minors of m.  Cost grows as 4^wires; capped."""
    r, c = m.shape
    limit = oracle_cap() if cap is None else cap
    if r + c > limit:
        raise TooLarge(f"minor expansion of a {m.shape} matrix ({r + c} wires > {limit})")
    data: dict[tuple[Bits, Bits], Scalar] = {}
    for s in range(min(r, c) + 1):
        for ipos in combinations(range(r), s):
            for jpos in combinations(range(c), s):
                grid = [[m.entries[i][j] for j in jpos] for i in ipos]
                d = det_grid(grid)
                if d != 0:
                    data[(_subset_bits(r, ipos), _subset_bits(c, jpos))] = d
    return Tensor(m.rows, m.cols, data)


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    """Disjoint union of legs, products of components."""
    if set(a.out_wires) & set(b.out_wires) or set(a.in_wires) & set(b.in_wires):
        raise LabelCollision("tensor_product requires disjoint wires")
    data: dict[tuple[Bits, Bits], Scalar] = {}
    for (ka, ba), va in a.data.items():
        for (kb, bb), vb in b.data.items():
            data[(ka + kb, ba + bb)] = va * vb
    return Tensor(a.out_wires + b.out_wires, a.in_wires + b.in_wires, data)


def tensor_compose(a: Tensor, b: Tensor) -> Tensor:
    """Contract a's input legs with b's output legs, matching by label."""
    if set(a.in_wires) != set(b.out_wires):
        raise LabelMismatch(f"cannot contract {a.in_wires} with {b.out_wires}")
    b_pos = {lab: i for i, lab in enumerate(b.out_wires)}
    reorder = [b_pos[lab] for lab in a.in_wires]  # b-ket position for each a-input slot

    by_mid: dict[Bits, list[tuple[Bits, Scalar]]] = {}
    for (kb, bb), vb in b.data.items():
        mid = tuple(kb[p] for p in reorder)  # kb re-read in a.in_wires order
        by_mid.setdefault(mid, []).append((bb, vb))

    data: dict[tuple[Bits, Bits], Scalar] = {}
    for (ka, mid), va in a.data.items():
        for bb, vb in by_mid.get(mid, ()):
            key = (ka, bb)
            acc = data.get(key)
            term = va * vb
            data[key] = term if acc is None else acc + term
    data = {k: v for k, v in data.items() if v != 0}
    return Tensor(a.out_wires, b.in_wires, data)


def tensor_trace(t: Tensor) -> Scalar:
    """Close output legs onto input legs with the same label."""
    if set(t.out_wires) != set(t.in_wires):
        raise LabelMismatch(f"cannot trace {t.out_wires} against {t.in_wires}")
    in_pos = {lab: i for i, lab in enumerate(t.in_wires)}
    reorder = [in_pos[lab] for lab in t.out_wires]
    total: Scalar = Fraction(0)
    for (ket, bra), v in t.data.items():
        if all(ket[i] == bra[reorder[i]] for i in range(len(ket))):
            total = total + v
    return total


def _stack_tensor(gates: tuple[LabeledMatrix, ...]) -> Tensor:
    t = Tensor((), (), {((), ()): Fraction(1)})
    for g in gates:
        t = tensor_product(t, sdet_expand(g))
    return t


def contract_circuit(circuit: Circuit) -> Scalar:
    """Oracle evaluation by brute tensor contraction.

    Expands every gate and every wiring into its minor tensor, chains
    them around the loop, and traces.  Agrees with circuit.evaluate()
    but takes time exponential in the boundary widths.
    """
    validate(circuit)
    m = len(circuit.stacks)
    if m == 0:
        return Fraction(1)
    acc: Tensor | None = None
    for k in range(m):
        step = tensor_compose(sdet_expand(wiring_matrix(circuit, k)),
                              _stack_tensor(circuit.stacks[k].gates))
        acc = step if acc is None else tensor_compose(step, acc)
    assert acc is not None
    return tensor_trace(acc)


@dataclass(frozen=True)
class Multicycle:
    """One choice of wire subsets, keyed by (boundary index, label)."""
    support: frozenset[tuple[int, int]]
    weight: Scalar


def enumerate_multicycles(circuit: Circuit) -> tuple[Multicycle, ...]:
    """All nonzero multicycles with their weights.

    A multicycle picks a subset of wires at every stack boundary, all of
    the same size; its weight is the product around the loop of the
    corresponding minors of the boundary-to-boundary transfer matrices.
    The weights sum to the circuit value.
    """
    validate(circuit)
    m = len(circuit.stacks)
    if m == 0:
        return (Multicycle(frozenset(), Fraction(1)),)
    # transfer[k] maps the wires entering stack k to the wires entering stack k+1
    transfer = [compose(wiring_matrix(circuit, k), circuit.stacks[k].matrix())
                for k in range(m)]
    boundary = [circuit.stacks[k].in_labels for k in range(m)]

    def weight_for(subsets: tuple[tuple[int, ...], ...]) -> Scalar:
        w: Scalar = Fraction(1)
        for k in range(m):
            block = submatrix(transfer[k], subsets[(k + 1) % m], subsets[k])
            d = det_grid([list(row) for row in block.entries])
            if d == 0:
                return Fraction(0)
            w = w * d
        return w

    found: list[Multicycle] = []
    max_size = min(len(b) for b in boundary)
    for s in range(max_size + 1):
        per_gap = [combinations(boundary[k], s) for k in range(m)]
        for subsets in product(*per_gap):
            w = weight_for(subsets)
            if w != 0:
                sup = frozenset((k, lab) for k in range(m) for lab in subsets[k])
                found.append(Multicycle(sup, w))
    found.sort(key=lambda mc: (len(mc.support), sorted(mc.support)))
    return tuple(found)


def multicycle_total(circuit: Circuit) -> Scalar:
    total: Scalar = Fraction(0)
    for mc in enumerate_multicycles(circuit):
        total = total + mc.weight
    return total
