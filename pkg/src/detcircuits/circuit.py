"""Closed wire circuits of labeled-matrix gates.

A circuit is a cyclic sequence of stacks.  Each stack is a column of
gates acting in parallel (their direct sum); between stack k and stack
k+1 (indices mod the stack count, so the last stack feeds the first) a
wiring says which output wire continues as which input wire.  Closing
the loop makes the circuit a scalar, computed in evaluate() as the sum
of principal minors of the collapsed endomorphism.

Wire labels are local to a stack boundary: the same int may appear in
several stacks and means nothing across a wiring except what the wiring
itself says.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DanglingWire, DuplicateLabel, SizeMismatch
from .labeled import (
    LabeledMatrix,
    Scalar,
    compose,
    direct_sum,
    labeled,
    permutation_matrix,
    principal_minor_sum,
)

Wiring = tuple[tuple[int, int], ...]  # (source output label, target input label)


@dataclass(frozen=True)
class Stack:
    gates: tuple[LabeledMatrix, ...]

    @property
    def in_labels(self) -> tuple[int, ...]:
        return tuple(lab for g in self.gates for lab in g.cols)

    @property
    def out_labels(self) -> tuple[int, ...]:
        return tuple(lab for g in self.gates for lab in g.rows)

    def matrix(self) -> LabeledMatrix:
        m = labeled((), (), ())
        for g in self.gates:
            m = direct_sum(m, g)
        return m


@dataclass(frozen=True)
class Circuit:
    stacks: tuple[Stack, ...]
    wirings: tuple[Wiring, ...]  # wirings[k] crosses the gap after stack k

    def __post_init__(self):
        if len(self.wirings) != len(self.stacks):
            raise SizeMismatch(
                f"{len(self.stacks)} stacks need {len(self.stacks)} wirings, "
                f"got {len(self.wirings)}"
            )


def validate(circuit: Circuit) -> None:
    """Check every wiring is a bijection between adjacent stack boundaries."""
    m = len(circuit.stacks)
    for k in range(m):
        src = circuit.stacks[k].out_labels
        dst = circuit.stacks[(k + 1) % m].in_labels
        wiring = circuit.wirings[k]
        seen_src: set[int] = set()
        seen_dst: set[int] = set()
        for a, b in wiring:
            if a in seen_src:
                raise DuplicateLabel(f"wiring {k} reuses output {a}")
            if b in seen_dst:
                raise DuplicateLabel(f"wiring {k} reuses input {b}")
            seen_src.add(a)
            seen_dst.add(b)
        if seen_src != set(src):
            missing = set(src) - seen_src
            extra = seen_src - set(src)
            raise DanglingWire(f"wiring {k}: unmatched outputs {missing or extra}")
        if seen_dst != set(dst):
            missing = set(dst) - seen_dst
            extra = seen_dst - set(dst)
            raise DanglingWire(f"wiring {k}: unmatched inputs {missing or extra}")


def wiring_matrix(circuit: Circuit, k: int) -> LabeledMatrix:
    """Permutation matrix of wiring k: columns stack k outputs, rows stack k+1 inputs."""
    m = len(circuit.stacks)
    src = circuit.stacks[k].out_labels
    dst = circuit.stacks[(k + 1) % m].in_labels
    return permutation_matrix(dict(circuit.wirings[k]), src, dst)


def collapse(circuit: Circuit) -> LabeledMatrix:
    """Multiply out one full turn of the loop.

    Returns the endomorphism P_{m-1} M_{m-1} ... P_0 M_0 on stack 0's
    input wires.  The empty circuit collapses to the 0x0 matrix.
    """
    validate(circuit)
    m = len(circuit.stacks)
    if m == 0:
        return labeled((), (), ())
    acc: LabeledMatrix | None = None
    for k in range(m):
        step = compose(wiring_matrix(circuit, k), circuit.stacks[k].matrix())
        acc = step if acc is None else compose(step, acc)
    assert acc is not None
    return acc


def evaluate(circuit: Circuit) -> Scalar:
    """Scalar value of the closed circuit: det(I + collapse)."""
    return principal_minor_sum(collapse(circuit))


def width_depth(circuit: Circuit) -> tuple[int, int]:
    """(max wires crossing any stack boundary, number of stacks)."""
    width = max((len(s.in_labels) for s in circuit.stacks), default=0)
    return width, len(circuit.stacks)


def identity_wiring(src: tuple[int, ...], dst: tuple[int, ...]) -> Wiring:
    """Pair off sorted source labels with sorted target labels."""
    if len(src) != len(dst):
        raise SizeMismatch(f"cannot wire {len(src)} outputs to {len(dst)} inputs")
    return tuple(zip(sorted(src), sorted(dst)))
