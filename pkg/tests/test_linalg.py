from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from ptmsums.algebra import PolyRing, as_matrix, char_det, charpoly, diag, identity, parse_number

Y = PolyRing(("y",))
y = Y.gen("y")

square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


def test_char_det_examples():
    assert char_det([[2]]) == 1 - y * 2
    assert char_det(diag(1, 2)) == 1 - y * 3 + y**2 * 2
    assert char_det(identity(2)) == (1 - y) ** 2


@given(square)
def test_charpoly_matches_sympy(m):
    t = sympy.Symbol("t")
    want = sympy.Matrix(m).charpoly(t).all_coeffs()[::-1]
    assert list(charpoly(m)) == [Fraction(int(c)) for c in want]


@given(square)
def test_char_det_is_reversed_charpoly(m):
    c = charpoly(m)
    n = len(m)
    assert char_det(m) == sum((y**j * c[n - j] for j in range(n + 1)), Y.zero())


def test_parse_number():
    assert parse_number("3/4") == Fraction(3, 4)
    assert parse_number("0.25") == Fraction(1, 4)
    assert parse_number(5) == 5
    with pytest.raises(TypeError):
        parse_number(0.5)
    assert as_matrix([["1", "0"], ["1/2", "2"]])[1][0] == Fraction(1, 2)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        charpoly([[1, 2]])
