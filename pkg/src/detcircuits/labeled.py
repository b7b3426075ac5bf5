"""Matrices with labeled rows and columns.

A LabeledMatrix is a morphism in the wire category: its column labels
name the incoming wires and its row labels the outgoing wires.  Labels
are plain ints, each distinct within one side of one matrix, and the
order of a label list is meaningful (it fixes the tensor-leg layout
everywhere else in the package).  Degenerate shapes (0xk, kx0, 0x0) are
ordinary values here; the empty determinant is 1.

Composition matches the interface by label set, not by position: the
right factor's rows are permuted into the left factor's column order
before the ordinary matrix product is taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateLabel,
    LabelCollision,
    LabelMismatch,
    NotEndomorphism,
    NotSquare,
)
from .scalars import Scalar, det_grid, normalize_grid

WireLabel = int


def _check_labels(labels: tuple[int, ...], side: str) -> None:
    if len(set(labels)) != len(labels):
        raise DuplicateLabel(f"repeated {side} label in {labels}")


@dataclass(frozen=True)
class LabeledMatrix:
    rows: tuple[WireLabel, ...]
    cols: tuple[WireLabel, ...]
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        _check_labels(self.rows, "row")
        _check_labels(self.cols, "column")
        if len(self.entries) != len(self.rows):
            raise ValueError("entry grid has wrong row count")
        for row in self.entries:
            if len(row) != len(self.cols):
                raise ValueError("entry grid has wrong column count")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, row_label: WireLabel, col_label: WireLabel) -> Scalar:
        return self.entries[self.rows.index(row_label)][self.cols.index(col_label)]


def labeled(rows: Sequence[int], cols: Sequence[int], entries: Sequence[Sequence]) -> LabeledMatrix:
    """Build a LabeledMatrix, normalizing entry types."""
    return LabeledMatrix(tuple(rows), tuple(cols), normalize_grid(entries))


def identity(labels: Sequence[int]) -> LabeledMatrix:
    n = len(labels)
    ent = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return labeled(labels, labels, ent)


def compose(n: LabeledMatrix, m: LabeledMatrix) -> LabeledMatrix:
    """Matrix product n*m along matching label sets (cols of n = rows of m)."""
    if set(n.cols) != set(m.rows):
        raise LabelMismatch(f"cannot compose: columns {n.cols} vs rows {m.rows}")
    # Align the contraction axis: fetch m's rows in n's column-label order.
    pos = {lab: i for i, lab in enumerate(m.rows)}
    mid = [m.entries[pos[lab]] for lab in n.cols]
    out = []
    for i in range(len(n.rows)):
        out_row = []
        for j in range(len(m.cols)):
            acc = None
            for k in range(len(n.cols)):
                term = n.entries[i][k] * mid[k][j]
                acc = term if acc is None else acc + term
            out_row.append(acc if acc is not None else Fraction(0))
        out.append(out_row)
    return labeled(n.rows, m.cols, out)


def direct_sum(a: LabeledMatrix, b: LabeledMatrix) -> LabeledMatrix:
    """Block diagonal sum; label lists concatenate and must stay disjoint."""
    if set(a.rows) & set(b.rows) or set(a.cols) & set(b.cols):
        raise LabelCollision("direct_sum requires disjoint labels")
    ra, ca = a.shape
    rb, cb = b.shape
    ent = []
    for i in range(ra):
        ent.append(list(a.entries[i]) + [Fraction(0)] * cb)
    for i in range(rb):
        ent.append([Fraction(0)] * ca + list(b.entries[i]))
    return labeled(a.rows + b.rows, a.cols + b.cols, ent)


def dagger(m: LabeledMatrix) -> LabeledMatrix:
    """Transpose with the label lists swapped."""
    ent = [[m.entries[i][j] for i in range(len(m.rows))] for j in range(len(m.cols))]
    return labeled(m.cols, m.rows, ent)


def braiding(a: Sequence[int], b: Sequence[int]) -> LabeledMatrix:
    """Crossing of wire bundles a and b.

    As a labeled matrix this is just the block anti-diagonal 0/1
    permutation (rows b++a, columns a++b, ones where labels agree); the
    sign that distinguishes it from a plain swap only appears in its
    minor expansion.
    """
    a = tuple(a)
    b = tuple(b)
    if set(a) & set(b):
        raise LabelCollision("braiding requires disjoint bundles")
    rows = b + a
    cols = a + b
    ent = [[Fraction(1) if r == c else Fraction(0) for c in cols] for r in rows]
    return labeled(rows, cols, ent)


def permutation_matrix(mapping: Mapping[int, int],
                       cols: Sequence[int],
                       rows: Sequence[int]) -> LabeledMatrix:
    """0/1 matrix of a label bijection: entry (mapping[c], c) is 1."""
    rows = tuple(rows)
    cols = tuple(cols)
    ent = [[Fraction(1) if mapping[c] == r else Fraction(0) for c in cols] for r in rows]
    return labeled(rows, cols, ent)


def determinant(m: LabeledMatrix) -> Scalar:
    if len(m.rows) != len(m.cols):
        raise NotSquare(f"determinant of a {m.shape} matrix")
    return det_grid([list(row) for row in m.entries])


def principal_minor_sum(m: LabeledMatrix) -> Scalar:
    """det(I + m) for an endomorphism; equals the sum of all principal minors."""
    if set(m.rows) != set(m.cols):
        raise NotEndomorphism(f"rows {m.rows} and cols {m.cols} differ as sets")
    pos = {lab: j for j, lab in enumerate(m.cols)}
    n = len(m.rows)
    grid = []
    for i, lab in enumerate(m.rows):
        row = [m.entries[i][pos[other]] for other in m.rows]
        row[i] = row[i] + 1
        grid.append(row)
    if n == 0:
        return Fraction(1)
    return det_grid(grid)


def submatrix(m: LabeledMatrix, row_labels: Iterable[int], col_labels: Iterable[int]) -> LabeledMatrix:
    """Submatrix on the given labels, kept in m's own row/column order."""
    rset = set(row_labels)
    cset = set(col_labels)
    rs = [i for i, lab in enumerate(m.rows) if lab in rset]
    cs = [j for j, lab in enumerate(m.cols) if lab in cset]
    ent = [[m.entries[i][j] for j in cs] for i in rs]
    return labeled([m.rows[i] for i in rs], [m.cols[j] for j in cs], ent)
