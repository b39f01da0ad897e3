"""Exact arithmetic in the cyclotomic field Q(zeta_d).

An element is stored as its coefficient vector in the power basis
1, z, ..., z^(phi(d)-1) of Q[z]/(Phi_d(z)).  Coefficients are Python ints
whenever integral and :class:`fractions.Fraction` otherwise, so equal
elements always have equal (and equally hashed) coefficient tuples.
"""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from ..errors import OrderMismatch


def normalize(value):
    """Return ``value`` as an int if it is integral, else as a Fraction."""
    if isinstance(value, int):
        return value
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


def _divide_monic(num, den):
    """Exact quotient of integer polynomials (lowest degree first), ``den`` monic."""
    num = list(num)
    dq = len(den) - 1
    quot = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            quot[i - dq] = c
            for j, dc in enumerate(den):
                num[i - dq + j] -= c * dc
    if any(num[:dq]):
        raise ArithmeticError("inexact cyclotomic division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d):
    """Integer coefficients of Phi_d(z), lowest degree first."""
    if d < 1:
        raise ValueError(f"cyclotomic order must be positive, got {d}")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _divide_monic(poly, cyclotomic_polynomial(e))
    return tuple(poly)


def totient(d):
    return len(cyclotomic_polynomial(d)) - 1


@lru_cache(maxsize=None)
def _reduction_table(d):
    # rows j = phi .. 2*phi - 2: z^j reduced to the power basis
    phi_poly = cyclotomic_polynomial(d)
    phi = len(phi_poly) - 1
    rows = []
    cur = [0] * (phi - 1) + [1]  # z^(phi-1)
    for _ in range(max(phi - 1, 0)):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi_poly)]
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce(coeffs, d):
    """Reduce an arbitrary-length coefficient list modulo Phi_d."""
    phi_poly = cyclotomic_polynomial(d)
    phi = len(phi_poly) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, phi - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(phi + 1):
                coeffs[i - phi + j] -= c * phi_poly[j]
    coeffs = coeffs[:phi]
    coeffs.extend([0] * (phi - len(coeffs)))
    return coeffs


# Fraction-coefficient univariate helpers used for inversion.


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = Fraction(a[i + len(b) - 1]) / lead
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_sub_mul(a, q, b):
    """a - q*b."""
    out = list(a) + [0] * max(0, len(q) + len(b) - 1 - len(a))
    for i, qc in enumerate(q):
        if qc:
            for j, bc in enumerate(b):
                out[i + j] -= qc * bc
    return _trim(out)


class Cyclotomic:
    """Element of Q(zeta_d), immutable.

    >>> z = Cyclotomic.root(4)
    >>> z * z == -1
    True
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        cs = [normalize(c) for c in coeffs]
        phi = totient(order)
        if len(cs) > phi:
            cs = _reduce(cs, order)
        else:
            cs.extend([0] * (phi - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(normalize(c) for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def from_rational(cls, order, value):
        return cls(order, [value])

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def one(cls, order):
        return cls(order, [1])

    @classmethod
    def root(cls, order):
        """The primitive root zeta_d, i.e. the class of z."""
        return cls(order, [0, 1])

    @classmethod
    def root_power(cls, order, e):
        """zeta_d ** e for any integer e."""
        e %= order
        return cls(order, [0] * e + [1])

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatch(f"orders {self.order} and {other.order} differ")
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic(self.order, [other])
        return NotImplemented

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic._raw(
            self.order, tuple(normalize(a + b) for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic._raw(
            self.order, tuple(normalize(a - b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyclotomic):
            return Cyclotomic._raw(self.order, tuple(normalize(a * other) for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        phi = len(a)
        if phi == 1:
            return Cyclotomic._raw(self.order, (normalize(a[0] * b[0]),))
        conv = [0] * (2 * phi - 1)
        for i, ac in enumerate(a):
            if ac:
                for j, bc in enumerate(b):
                    if bc:
                        conv[i + j] += ac * bc
        out = conv[:phi]
        for row, c in zip(_reduction_table(self.order), conv[phi:]):
            if c:
                for i, rc in enumerate(row):
                    if rc:
                        out[i] += c * rc
        return Cyclotomic._raw(self.order, tuple(normalize(c) for c in out))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic(self.order, [Fraction(1) / Fraction(self.coeffs[0])])
        # extended Euclid: s*a + t*Phi = g, g a nonzero constant since Phi is irreducible
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r1 = _trim([Fraction(c) for c in self.coeffs])
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub_mul(s0, quot, s1)
        g = r1[0]
        return Cyclotomic(self.order, [c / g for c in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = Cyclotomic.one(self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def text(self, annotate=True):
        """Lossless rendering: a rational, or ``(num)/den mod Phi_d``."""
        if self.is_rational():
            return str(self.coeffs[0])
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // _gcd(den, c.denominator)
        parts = []
        for i, c in enumerate(self.coeffs):
            c = normalize(c * den)
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = "".join(
            (("-" if sign == "-" else "") if k == 0 else sign) + body
            for k, (sign, body) in enumerate(parts)
        )
        s = f"({s})" + (f"/{den}" if den != 1 else "")
        if annotate:
            s += f" mod Phi_{self.order}"
        return s

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Cyclotomic({self.order}, {list(self.coeffs)!r})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def cyclo_root(d):
    """The primitive d-th root of unity zeta_d."""
    return Cyclotomic.root(d)


def cyclo_arith(a, b, op):
    """Field operation ``op`` (add, sub, mul, div) on two elements of the same order."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
