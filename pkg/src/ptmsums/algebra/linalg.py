"""Small exact rational matrices, stored as tuples of row tuples."""

from fractions import Fraction

from .cyclotomic import normalize
from .poly import PolyRing, rational_poly


def parse_number(value):
    """Exact number from an int, Fraction, or decimal/fraction string ("-3/2", "0.25")."""
    if isinstance(value, str):
        return normalize(Fraction(value.strip()))
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an exact string such as '0.5'")
    return normalize(value)


def as_matrix(rows):
    mat = tuple(tuple(parse_number(x) for x in row) for row in rows)
    if mat and any(len(row) != len(mat[0]) for row in mat):
        raise ValueError("ragged matrix")
    return mat


def as_vector(values):
    return tuple(parse_number(x) for x in values)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def diag(*entries):
    n = len(entries)
    return tuple(
        tuple(parse_number(entries[i]) if i == j else 0 for j in range(n)) for i in range(n)
    )


def block_diag(a, b):
    na, nb = len(a), len(b)
    rows = [tuple(row) + (0,) * nb for row in a]
    rows += [(0,) * na + tuple(row) for row in b]
    return tuple(rows)


def matmul(a, b):
    cols = list(zip(*b))
    return tuple(
        tuple(normalize(sum(x * y for x, y in zip(row, col))) for col in cols) for row in a
    )


def matvec(a, v):
    return tuple(normalize(sum(x * y for x, y in zip(row, v))) for row in a)


def is_square(m):
    return all(len(row) == len(m) for row in m)


def charpoly(m):
    """Coefficients c_0..c_n of det(t*I - m), lowest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    if not is_square(m):
        raise ValueError("charpoly needs a square matrix")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = identity(n)  # M_k
    for k in range(1, n + 1):
        am = matmul(m, aux)
        c = normalize(-Fraction(sum(am[i][i] for i in range(n))) / k)
        coeffs[n - k] = c
        aux = tuple(
            tuple(normalize(am[i][j] + (c if i == j else 0)) for j in range(n))
            for i in range(n)
        )
    return coeffs


_Y = PolyRing(("y",), 1)


def char_det(m, ring=None):
    """det(I - y*m) as a polynomial in ``y`` with rational coefficients."""
    ring = ring or _Y
    c = charpoly(m)
    n = len(c) - 1
    # det(I - y m) = y^n * det(y^-1 I - m)
    return rational_poly(ring, {(n - i,): ci for i, ci in enumerate(c)})
