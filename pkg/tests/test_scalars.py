import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detcircuits.scalars import (
    det_cofactor,
    det_grid,
    format_scalar,
    normalize_grid,
    normalize_scalar,
    parse_scalar,
    scalars_equal,
)

rationals = st.fractions(max_denominator=20).map(
    lambda f: Fraction(f.numerator, f.denominator))


def test_normalize_scalar_types():
    assert normalize_scalar(3) == Fraction(3)
    assert isinstance(normalize_scalar(3), Fraction)
    assert normalize_scalar(0.5) == 0.5 + 0j
    assert isinstance(normalize_scalar(0.5), complex)
    with pytest.raises(TypeError):
        normalize_scalar(True)
    with pytest.raises(TypeError):
        normalize_scalar("1")


def test_normalize_grid_demotes_to_complex():
    grid = normalize_grid([[1, Fraction(1, 2)], [0.25, 2]])
    assert all(isinstance(x, complex) for row in grid for x in row)
    grid = normalize_grid([[1, 2], [3, 4]])
    assert all(isinstance(x, Fraction) for row in grid for x in row)


def test_det_small_cases():
    assert det_grid([]) == Fraction(1)
    assert det_grid([[Fraction(7)]]) == 7
    assert det_grid([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2


def test_det_exact_with_fractions():
    g = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
    assert det_grid(g) == Fraction(1, 10) - Fraction(1, 12)


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n),
                       min_size=n, max_size=n)))
@settings(max_examples=60, deadline=None)
def test_bareiss_matches_cofactor_expansion(grid):
    assert det_grid(grid) == det_cofactor(grid)


def test_det_complex_matches_cofactor():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 5)
        g = [[complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n)]
             for _ in range(n)]
        assert abs(det_grid(g) - det_cofactor(g)) < 1e-8


def test_singular_rational_matrix():
    g = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert det_grid(g) == 0


def test_format_rational():
    assert format_scalar(Fraction(3)) == "3"
    assert format_scalar(Fraction(-7, 2)) == "-7/2"


def test_format_complex():
    assert format_scalar(1 + 2j) == "1+2i"
    assert format_scalar(1.5 - 0.25j) == "1.5-0.25i"


def test_parse_round_trip_rational():
    for x in (Fraction(0), Fraction(5), Fraction(-3, 7), Fraction(22, 51)):
        assert parse_scalar(format_scalar(x), "rational") == x


def test_parse_round_trip_complex():
    rng = random.Random(5)
    for _ in range(20):
        z = complex(rng.uniform(-9, 9), rng.uniform(-9, 9))
        back = parse_scalar(format_scalar(z), "complex")
        assert abs(back - z) < 1e-9


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_scalar("zap", "rational")
    with pytest.raises(ValueError):
        parse_scalar("1+2x", "complex")
    with pytest.raises(ValueError):
        parse_scalar("1", "octonion")


def test_scalars_equal_mixed():
    assert scalars_equal(Fraction(1, 2), 0.5 + 0j)
    assert not scalars_equal(Fraction(1, 2), 0.5 + 1e-6j)
    assert scalars_equal(Fraction(1, 3), Fraction(1, 3))
    assert not scalars_equal(Fraction(1, 3), Fraction(1, 4))
