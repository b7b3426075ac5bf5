"""Scalar arithmetic for the two supported ground fields.

Every value in the package is either an exact rational (stored as
fractions.Fraction, which keeps lowest terms and a positive denominator)
or a complex float.  A matrix is "exact" when all of its entries are
rational; mixing a float or complex entry into a grid demotes the whole
grid to complex.  Comparisons are exact on the rational side and use an
absolute tolerance of 1e-9 on the complex side.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence, Union

Scalar = Union[Fraction, complex]

COMPLEX_TOL = 1e-9

ZERO = Fraction(0)
ONE = Fraction(1)


def normalize_scalar(x) -> Scalar:
    """Coerce ints to Fraction and floats to complex; reject everything else."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return complex(x)
    if isinstance(x, complex):
        return x
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def is_exact(x: Scalar) -> bool:
    return isinstance(x, Fraction)


def normalize_grid(rows: Sequence[Sequence]) -> tuple[tuple[Scalar, ...], ...]:
    """Normalize a rectangular grid; demote all entries to complex if any is."""
    grid = [[normalize_scalar(x) for x in row] for row in rows]
    if any(not is_exact(x) for row in grid for x in row):
        grid = [[complex(x) if isinstance(x, Fraction) else x for x in row] for row in grid]
    return tuple(tuple(row) for row in grid)


def grid_is_exact(grid) -> bool:
    return all(is_exact(x) for row in grid for x in row)


def scalars_equal(a: Scalar, b: Scalar, tol: float = COMPLEX_TOL) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(complex(a) - complex(b)) <= tol


def zero_like(exact: bool) -> Scalar:
    return Fraction(0) if exact else 0j


def one_like(exact: bool) -> Scalar:
    return Fraction(1) if exact else 1 + 0j


# --- determinants -----------------------------------------------------------

def det_grid(grid: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant of a square grid; det of the 0x0 grid is 1.

    Rational grids go through fraction-free Bareiss elimination on a
    denominator-cleared integer copy, so the arithmetic stays in plain
    ints.  Complex grids use LU with partial pivoting.
    """
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("det_grid requires a square grid")
    if n == 0:
        return Fraction(1)
    if grid_is_exact(grid):
        return _det_exact(grid)
    return _det_complex([[complex(x) for x in row] for row in grid])


def _det_exact(grid) -> Fraction:
    # Clear denominators row by row; det scales by the product of the factors.
    scale = 1
    a = []
    for row in grid:
        d = lcm(*(x.denominator for x in row)) if row else 1
        scale *= d
        a.append([int(x * d) for x in row])
    return Fraction(_det_bareiss_int(a), scale)


def _det_bareiss_int(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: division by the previous pivot is exact.
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _det_complex(a: list[list[complex]]) -> complex:
    n = len(a)
    det = 1 + 0j
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(a[i][k]))
        if abs(a[piv][k]) == 0.0:
            return 0j
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
    return det


def det_cofactor(grid: Sequence[Sequence[Scalar]]) -> Scalar:
    """Cofactor-expansion determinant; the slow cross-check for det_grid."""
    n = len(grid)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return grid[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in [list(r) for r in grid[1:]]]
        term = grid[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


# --- text round-trip --------------------------------------------------------

def format_scalar(x: Scalar) -> str:
    """Rationals print as p/q (bare integers without /1); complex as a+bi."""
    if is_exact(x):
        return str(x)
    z = complex(x)
    re = f"{z.real:.12g}"
    im = f"{abs(z.imag):.12g}"
    sign = "-" if z.imag < 0 else "+"
    return f"{re}{sign}{im}i"


def parse_scalar(token: str, field: str = "rational") -> Scalar:
    """Parse one scalar token in the given field ("rational" or "complex")."""
    token = token.strip()
    if field == "rational":
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational {token!r}: {exc}") from exc
    if field == "complex":
        return _parse_complex(token)
    raise ValueError(f"unknown field {field!r}")


def _parse_complex(token: str) -> complex:
    t = token.replace(" ", "")
    if not t:
        raise ValueError("empty complex token")
    if t.endswith("i"):
        t = t[:-1] + "j"
    try:
        return complex(t)
    except ValueError as exc:
        raise ValueError(f"bad complex {token!r}") from exc
