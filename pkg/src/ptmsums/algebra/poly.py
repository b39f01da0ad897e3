"""Sparse multivariate polynomials with cyclotomic coefficients.

A :class:`PolyRing` fixes the variable names (in a declared order) and the
order ``d`` of the scalar field Q(zeta_d).  A :class:`MultiPoly` maps exponent
tuples, aligned with the ring's variables, to nonzero :class:`Cyclotomic`
coefficients.
"""

from fractions import Fraction
from numbers import Rational

from ..errors import NotDivisible, OrderMismatch
from .cyclotomic import Cyclotomic, normalize


class PolyRing:
    """Q(zeta_d)[variables] with a fixed variable order."""

    __slots__ = ("variables", "order", "_index")

    def __init__(self, variables, order=1):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        self.variables = variables
        self.order = order
        self._index = {v: i for i, v in enumerate(variables)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.variables)!r}, order={self.order})"

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"variable {name!r} not in {self.variables}") from None

    def scalar(self, value):
        if isinstance(value, Cyclotomic):
            if value.order != self.order:
                raise OrderMismatch(f"scalar of order {value.order} in ring of order {self.order}")
            return value
        return Cyclotomic(self.order, [value])

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, value):
        c = self.scalar(value)
        return MultiPoly(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MultiPoly(self, {tuple(e): Cyclotomic.one(self.order)})

    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, exponents, coeff=1):
        """Build ``coeff * prod(var**e)`` from a mapping name -> exponent."""
        e = [0] * self.nvars
        for name, k in exponents.items():
            e[self.index(name)] += k
        c = self.scalar(coeff)
        return MultiPoly(self, {tuple(e): c} if c else {})

    def linear_form(self, coeffs, names):
        """sum(coeffs[j] * names[j])."""
        terms = {}
        for c, name in zip(coeffs, names):
            c = self.scalar(c)
            if c:
                e = [0] * self.nvars
                e[self.index(name)] = 1
                terms[tuple(e)] = c
        return MultiPoly(self, terms)

    def from_terms(self, terms):
        """Polynomial from ``{exponent tuple: scalar}``; zero coefficients dropped."""
        out = {}
        for e, c in terms.items():
            c = self.scalar(c)
            if c:
                out[tuple(e)] = c
        return MultiPoly(self, out)


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class MultiPoly:
    """Immutable sparse polynomial in canonical form (no zero coefficients)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                if other.ring.order != self.ring.order:
                    raise OrderMismatch(
                        f"orders {self.ring.order} and {other.ring.order} differ"
                    )
                raise ValueError(f"rings differ: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Rational, Cyclotomic)):
            return self.ring.const(other)
        return NotImplemented

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var):
        i = self.ring.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(v for v, k in zip(self.ring.variables, e) if k)
        return used

    def coefficient(self, exponents):
        """Coefficient of the monomial given as ``{name: exponent}``."""
        e = [0] * self.ring.nvars
        for name, k in exponents.items():
            e[self.ring.index(name)] = k
        return self.terms.get(tuple(e), Cyclotomic.zero(self.ring.order))

    def coefficient_in(self, var, power):
        """The polynomial multiplying ``var**power`` (free of ``var``)."""
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                out[e[:i] + (0,) + e[i + 1 :]] = c
        return MultiPoly(self.ring, out)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, Cyclotomic.zero(self.ring.order))

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def is_homogeneous(self, degree, variables=None):
        """True iff every term has degree ``degree`` in ``variables`` (default: all)."""
        idx = (
            range(self.ring.nvars)
            if variables is None
            else [self.ring.index(v) for v in variables]
        )
        return all(sum(e[i] for i in idx) == degree for e in self.terms)

    def is_rational(self):
        return all(c.is_rational() for c in self.terms.values())

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar):
        c = self.ring.scalar(scalar)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational, Cyclotomic)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                v = c1 * c2
                s = out.get(e)
                out[e] = v if s is None else s + v
        return MultiPoly(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, scalar):
        if isinstance(scalar, MultiPoly):
            return NotImplemented
        return self.scale(Cyclotomic.one(self.ring.order) / self.ring.scalar(scalar))

    # -- calculus in one variable -------------------------------------------

    def integrate(self, var="x"):
        """Antiderivative vanishing at ``var = 0``."""
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            j = e[i]
            out[e[:i] + (j + 1,) + e[i + 1 :]] = c * Fraction(1, j + 1)
        return MultiPoly(self.ring, out)

    def theta(self, var="x"):
        """The Euler operator ``var * d/dvar``."""
        i = self.ring.index(var)
        return MultiPoly(self.ring, {e: c * e[i] for e, c in self.terms.items() if e[i]})

    def derivative(self, var="x"):
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1 :]] = c * e[i]
        return MultiPoly(self.ring, out)

    # -- substitution -----------------------------------------------------

    def subs(self, assignment):
        """Substitute scalars for some variables; the others stay symbolic."""
        if not assignment:
            return self
        vals = {self.ring.index(v): self.ring.scalar(c) for v, c in assignment.items()}
        one = Cyclotomic.one(self.ring.order)
        powers = {i: [one] for i in vals}
        out = {}
        for e, c in self.terms.items():
            for i, val in vals.items():
                k = e[i]
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(pw[-1] * val)
                    c = c * pw[k]
            if not c:
                continue
            e = tuple(0 if i in vals else k for i, k in enumerate(e))
            s = out.get(e)
            out[e] = c if s is None else s + c
        return MultiPoly(self.ring, {e: c for e, c in out.items() if c})

    def substitute(self, images):
        """Ring homomorphism sending each variable in ``images`` to a polynomial."""
        idx = {self.ring.index(v): p for v, p in images.items()}
        cache = {i: [self.ring.one()] for i in idx}
        result = self.ring.zero()
        for e, c in self.terms.items():
            rest = tuple(0 if i in idx else k for i, k in enumerate(e))
            term = MultiPoly(self.ring, {rest: c})
            for i, img in idx.items():
                k = e[i]
                if k:
                    pw = cache[i]
                    while len(pw) <= k:
                        pw.append(pw[-1] * img)
                    term = term * pw[k]
            result = result + term
        return result

    def apply_linear(self, matrix, variables):
        """Apply the algebra endomorphism induced by a linear map on ``variables``.

        Column ``i`` of ``matrix`` holds the image of ``variables[i]``:
        ``v_i -> sum_j matrix[j][i] * v_j``.
        """
        n = len(variables)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"matrix must be {n}x{n}")
        allowed = set(variables)
        stray = self.variables_used() - allowed
        if stray:
            raise ValueError(f"polynomial uses variables outside {variables}: {sorted(stray)}")
        images = {
            v: self.ring.linear_form([matrix[j][i] for j in range(n)], variables)
            for i, v in enumerate(variables)
        }
        return self.substitute(images)

    # -- division ---------------------------------------------------------

    def divide_linear(self, divisor):
        """Exact quotient by a nonzero homogeneous linear polynomial.

        Long division in the lowest-indexed variable that occurs in the divisor.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not divisor.is_homogeneous(1):
            raise ValueError("divisor must be homogeneous of degree 1")
        nv = self.ring.nvars
        w = min(i for e in divisor.terms for i in range(nv) if e[i])
        unit = tuple(1 if i == w else 0 for i in range(nv))
        lead = divisor.terms[unit]
        tail = MultiPoly(self.ring, {e: c for e, c in divisor.terms.items() if e != unit})

        def strip(e):
            return e[:w] + (0,) + e[w + 1 :]

        layers = {}
        for e, c in self.terms.items():
            layers.setdefault(e[w], {})[strip(e)] = c
        top = max(layers, default=0)
        rem = {j: MultiPoly(self.ring, t) for j, t in layers.items()}
        quotient = {}
        inv_lead = lead.inverse()
        for j in range(top, 0, -1):
            r = rem.pop(j, None)
            if r is None or r.is_zero():
                continue
            q = r.scale(inv_lead)
            for e, c in q.terms.items():
                quotient[e[:w] + (j - 1,) + e[w + 1 :]] = c
            below = rem.get(j - 1, self.ring.zero())
            rem[j - 1] = below - q * tail
        leftover = rem.get(0, self.ring.zero())
        if not leftover.is_zero():
            raise NotDivisible("nonzero remainder in linear division", leftover)
        return MultiPoly(self.ring, quotient)

    # -- ring changes -----------------------------------------------------

    def to_ring(self, ring):
        """Re-express in a ring with the same order whose variables include ours."""
        if ring.order != self.ring.order:
            raise OrderMismatch(f"orders {self.ring.order} and {ring.order} differ")
        pos = []
        for v in self.ring.variables:
            pos.append(ring.index(v) if v in ring._index else None)
        out = {}
        for e, c in self.terms.items():
            new = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    if pos[i] is None:
                        raise ValueError(f"variable {self.ring.variables[i]!r} missing from {ring}")
                    new[pos[i]] = k
            out[tuple(new)] = c
        return MultiPoly(ring, out)

    def map_coefficients(self, fn):
        out = {}
        for e, c in self.terms.items():
            c = self.ring.scalar(fn(c))
            if c:
                out[e] = c
        return MultiPoly(self.ring, out)

    # -- rendering -----------------------------------------------------------

    def sorted_terms(self):
        """Terms in graded lexicographic order (highest first)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def text(self, max_terms=None):
        """Canonical text, e.g. ``3/2*v1^2*x - v2 + 6``.

        Non-rational coefficients print as ``(num)/den`` polynomials in ``z``
        and the whole expression gets a trailing ``mod Phi_d``.
        """
        if not self.terms:
            return "0"
        items = self.sorted_terms()
        truncated = max_terms is not None and len(items) > max_terms
        if truncated:
            items = items[:max_terms]
        pieces = []
        cyclotomic = False
        for e, c in items:
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.ring.variables, e) if k
            )
            if c.is_rational():
                r = c.coeffs[0]
                neg = r < 0
                r = abs(r)
                if mono:
                    body = mono if r == 1 else f"{r}*{mono}"
                else:
                    body = str(r)
            else:
                cyclotomic = True
                neg = False
                scalar = c.text(annotate=False)
                body = f"{scalar}*{mono}" if mono else scalar
            pieces.append((neg, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        if truncated:
            out += f" + ... ({len(self.terms) - max_terms} more terms)"
        if cyclotomic:
            out += f" mod Phi_{self.ring.order}"
        return out

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"MultiPoly({self.text()!r}, vars={list(self.ring.variables)})"


def poly_arith(p, q, op):
    """Ring operation ``op`` (add, sub, mul) on two polynomials over the same ring."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def poly_pow(p, e):
    return p**e


def apply_linear(matrix, p, variables):
    return p.apply_linear(matrix, variables)


def integrate_x(p, var="x"):
    return p.integrate(var)


def theta(p, var="x"):
    return p.theta(var)


def exact_divide_linear(p, divisor):
    return p.divide_linear(divisor)


def eval_subst(p, assignment):
    return p.subs(assignment)


def rational_poly(ring, terms):
    """Polynomial from ``{exponent tuple: int | Fraction}`` without per-entry checks."""
    order = ring.order
    return MultiPoly(
        ring, {e: Cyclotomic(order, [normalize(c)]) for e, c in terms.items() if c}
    )
