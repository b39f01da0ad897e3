"""Digit-sum twisted power sums and their normalized constant terms.

For a recurrence sequence ``u`` (see :class:`~ptmsums.digitseq.SeqSpec`) and a
root of unity ``zeta != 1`` with ``zeta**k == 1`` this module computes

    f[m, n](x) = sum_{i < k^n} zeta^{s_k(i)} (x + u(i))^m
    F[m, n]    = f[m, n](0)
    H[m, n]    = (zeta - 1)^n / (k^n (m+n)! prod_{i<n} P^i q) * F[m+n, n]

as polynomials in ``x`` and the coordinates ``v1..v_dim`` of ``u``, each by
several independent routes so that they can be checked against each other.
"""

from fractions import Fraction
from math import comb, factorial

from .algebra import Cyclotomic, MultiPoly, PolyRing, char_det, rational_poly
from .digitseq import SeqSpec, digit_sum, ptm_sign, sequence_table
from .kernels import accumulate_powers, check_budget, combine_residues
from .report import VerificationReport, timed


class PtmContext:
    """A sequence spec together with a choice of root of unity.

    ``order`` is the multiplicative order ``d`` of the chosen ``zeta``; it must
    divide ``spec.k`` and exceed 1.  Defaults to ``spec.k`` (primitive root).
    """

    def __init__(self, spec, order=None, budget=None):
        if not isinstance(spec, SeqSpec):
            raise TypeError("spec must be a SeqSpec")
        k = spec.k
        d = k if order is None else int(order)
        if d <= 1 or k % d:
            raise ValueError(f"root order must divide k={k} and exceed 1, got {d}")
        self.spec = spec
        self.k = k
        self.order = d
        self.budget = budget
        self.zeta = Cyclotomic.root(d)
        self.vars = spec.variables
        self.ring = PolyRing(("x",) + self.vars, d)
        self._a = {}
        self._pq = []
        self._power_sums = {}
        self._F = {}
        self._H = {}

    def __repr__(self):
        return f"PtmContext(k={self.k}, order={self.order}, P={self.spec.P}, q={self.spec.q})"

    # -- building blocks ----------------------------------------------------

    def q_poly(self):
        return self.Pq(0)

    def Pq(self, i):
        """P^i(q) as a linear form in v1..v_dim."""
        while len(self._pq) <= i:
            j = len(self._pq)
            self._pq.append(self.ring.linear_form(self.spec.Pjq(j), self.vars))
        return self._pq[i]

    def apply_P(self, poly):
        return poly.apply_linear(self.spec.P, self.vars)

    def a_seq(self, r):
        """a_r = sum_{j<k} j^r zeta^j."""
        val = self._a.get(r)
        if val is None:
            val = Cyclotomic.zero(self.order)
            for j in range(self.k):
                val = val + Cyclotomic.root_power(self.order, j) * (j**r)
            self._a[r] = val
        return val

    # -- brute force ----------------------------------------------------------

    def power_sums(self, n, pmax):
        """[F[0,n], ..., F[pmax,n]] by direct enumeration of all k^n indices."""
        cached = self._power_sums.get(n)
        if cached is not None and len(cached) > pmax:
            return cached[: pmax + 1]
        check_budget(self.k**n, self.budget)
        us, ss = sequence_table(self.spec, n)
        d = self.order
        nv = len(self.vars)
        items = ((s % d, (0,) + u) for u, s in zip(us, ss))
        per_residue = accumulate_powers(items, pmax, nv + 1)
        sums = []
        for p in range(pmax + 1):
            sums.append(combine_residues(self.ring, {c: lst[p] for c, lst in per_residue.items()}))
        self._power_sums[n] = sums
        return sums

    def f_bruteforce(self, m, n):
        """f[m,n](x) summed term by term over all k^n indices."""
        sums = self.power_sums(n, m)
        x = self.ring.gen("x")
        out = self.ring.zero()
        for p in range(m + 1):
            if sums[p]:
                out = out + sums[p] * (x ** (m - p)) * comb(m, p)
        return out

    def F_bruteforce(self, m, n):
        return self.power_sums(n, m)[m]

    # -- recurrences ----------------------------------------------------------

    def F_recurrence(self, m, n):
        """F[m,n] = sum_{r=1}^{m-n+1} a_r C(m,r) q^r P(F[m-r, n-1])."""
        key = (m, n)
        val = self._F.get(key)
        if val is not None:
            return val
        if n == 0:
            val = self.ring.one() if m == 0 else self.ring.zero()
        else:
            val = self.ring.zero()
            q = self.q_poly()
            for r in range(1, m - n + 2):
                prev = self.F_recurrence(m - r, n - 1)
                if prev:
                    val = val + self.apply_P(prev) * (q**r) * (self.a_seq(r) * comb(m, r))
        self._F[key] = val
        return val

    def _normalizer(self, m, n):
        """(zeta-1)^n / (k^n (m+n)!)."""
        return (self.zeta - 1) ** n * Fraction(1, self.k**n * factorial(m + n))

    def H_from_F(self, m, n, source="recurrence"):
        """H[m,n] by dividing F[m+n,n] by each P^i(q), i < n."""
        if source == "recurrence":
            F = self.F_recurrence(m + n, n)
        elif source == "bruteforce":
            F = self.F_bruteforce(m + n, n)
        else:
            raise ValueError(f"unknown F source {source!r}")
        for i in range(n):
            L = self.Pq(i)
            if L.is_zero():
                raise ZeroDivisionError(f"P^{i}(q) vanishes; H[{m},{n}] is undefined")
            F = F.divide_linear(L)
        return F * self._normalizer(m, n)

    def H_step_recurrence(self, m, n):
        """H[m,n] = P(H[m,n-1]) + sum_{r=2}^{m+1} a_r (zeta-1)/(k r!) q^{r-1} P(H[m+1-r,n-1])."""
        key = (m, n)
        val = self._H.get(key)
        if val is not None:
            return val
        if n == 0:
            val = self.ring.one() if m == 0 else self.ring.zero()
        else:
            val = self.apply_P(self.H_step_recurrence(m, n - 1))
            q = self.q_poly()
            for r in range(2, m + 2):
                prev = self.H_step_recurrence(m + 1 - r, n - 1)
                if prev:
                    w = self.a_seq(r) * (self.zeta - 1) * Fraction(1, self.k * factorial(r))
                    val = val + self.apply_P(prev) * (q ** (r - 1)) * w
        self._H[key] = val
        return val

    def H(self, m, n):
        return self.H_step_recurrence(m, n)

    def composition_weight(self, part):
        """a_{part+1} (zeta-1) / (k (part+1)!)."""
        return self.a_seq(part + 1) * (self.zeta - 1) * Fraction(1, self.k * factorial(part + 1))

    def H_closed_form(self, m, n):
        """Sum over compositions of m and increasing index tuples below n."""
        if m == 0:
            return self.ring.one()
        total = self.ring.zero()
        powers = {}

        def pw(l, e):
            key = (l, e)
            val = powers.get(key)
            if val is None:
                val = self.Pq(l) ** e
                powers[key] = val
            return val

        one = self.ring.one()
        for nu in compositions(m):
            inner = increasing_index_sum(nu, n, pw, one)
            if inner.is_zero():
                continue
            w = Cyclotomic.one(self.order)
            for part in nu:
                w = w * self.composition_weight(part)
            total = total + inner * w
        return total

    def F_from_H(self, m, n):
        """F[m,n] recovered from the closed form of H[m-n, n]."""
        if m < n:
            return self.ring.zero()
        prod = self.ring.one()
        for i in range(n):
            prod = prod * self.Pq(i)
        return self.H_closed_form(m - n, n) * prod * self._normalizer(m - n, n).inverse()

    def integrate_from_constants(self, m, n):
        """f[m,n](x) rebuilt from f[0,n] and F[1..m, n] by repeated integration."""
        f = self.F_recurrence(0, n)
        for j in range(m):
            f = f.integrate("x") * (j + 1) + self.F_recurrence(j + 1, n)
        return f

    def cor1_values(self, n):
        """Closed forms of (F[n,n], F[n+1,n])."""
        prod = self.ring.one()
        total = self.ring.zero()
        for i in range(n):
            prod = prod * self.Pq(i)
            total = total + self.Pq(i)
        k, z = self.k, self.zeta
        d_k = (z - 1) ** (-n) * (k**n)
        e_k = ((z * (k - 2)) - k) * (k**n) / ((z - 1) ** (n + 1) * 2)
        return prod * d_k * factorial(n), prod * total * e_k * factorial(n + 1)

    def c_k(self):
        """Coefficient in H[1,n] = c_k * sum_{i<n} P^i(q)."""
        z = self.zeta
        return ((z * (self.k - 2)) - self.k) / ((z - 1) * 2)


def compositions(m):
    """Compositions of ``m`` (tuples of positive parts) in lexicographic order.

    ``compositions(0)`` yields only the empty composition.
    """
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in compositions(m - first):
            yield (first,) + rest


def increasing_index_sum(parts, n, power, one):
    """sum over 0 <= l_1 < ... < l_t <= n-1 of prod_i power(l_i, parts[i])."""
    t = len(parts)
    memo = {}

    def rec(idx, start):
        if idx == t:
            return one
        key = (idx, start)
        if key in memo:
            return memo[key]
        acc = one * 0
        # leave room for the remaining t - idx - 1 indices
        for l in range(start, n - (t - idx - 1)):
            acc = acc + power(l, parts[idx]) * rec(idx + 1, l + 1)
        memo[key] = acc
        return acc

    return rec(0, 0)


def stirling2(m, n):
    """Stirling number of the second kind via S(m,n) = n S(m-1,n) + S(m-1,n-1)."""
    if m < 0 or n < 0:
        raise ValueError("Stirling numbers need nonnegative arguments")
    row = [1] + [0] * n  # S(0, .)
    for i in range(1, m + 1):
        new = [0] * (n + 1)
        for j in range(1, min(i, n) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[n]


def closedF_value(m, n):
    """F[m+n, n] for k = 2 and u(i) = i, from the composition expansion."""
    total = Fraction(0)
    for nu in compositions(m):
        inner = increasing_index_sum(nu, n, lambda l, e: 2 ** (l * e), 1)
        w = Fraction(1)
        for part in nu:
            w /= factorial(part + 1)
        total += w * inner
    value = (-1) ** n * factorial(n + m) * 2 ** (n * (n - 1) // 2) * total
    return value.numerator if value.denominator == 1 else value


def elem_sym(values, j):
    """Elementary symmetric polynomial sigma_j(values), from prod (1 + v t)."""
    if not 0 <= j <= len(values):
        raise ValueError(f"sigma_{j} undefined for {len(values)} values")
    coeffs = [1]
    for v in values:
        coeffs = [a + v * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs[j]


def cor2_lhs(n, r, m=None):
    """sum_{i<2^n} (-1)^{s_2(i)} s_2(i)^r i^(m-r) with m defaulting to n."""
    m = n if m is None else m
    return sum(ptm_sign(i) * digit_sum(i, 2) ** r * i ** (m - r) for i in range(2**n))


def cor2_rhs(n, r):
    return (-1) ** n * factorial(r) * factorial(n - r) * elem_sym([2**i for i in range(n)], n - r)


def cor2_check(n, r):
    """Digit-sum / index mixed moment at total degree n against sigma_{n-r}(1, 2, ..., 2^(n-1)).

    Besides the brute-force sum, the coefficient of v1^r v2^(n-r) in F[n,n] of
    the direct-sum sequence (s_2, identity) is compared too.
    """
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    from .digitseq import preset

    report = VerificationReport("cor2", {"n": n, "r": r})
    with timed(report):
        rhs = cor2_rhs(n, r)
        report.check(cor2_lhs(n, r) == rhs, {"n": n, "r": r}, rhs, cor2_lhs(n, r))
        ctx = PtmContext(preset("s2+n", 2))
        # the multinomial expansion of (s v1 + i v2)^n puts C(n, r) on this coefficient
        coeff = ctx.F_recurrence(n, n).coefficient({"v1": r, "v2": n - r})
        expected = rhs * comb(n, r)
        report.check(coeff == expected, {"n": n, "r": r, "via": "F_recurrence"}, expected, coeff)
    return report


def cor2_vanishing_check(n):
    """sum (-1)^{s_2(i)} s_2(i)^r i^(m-r) == 0 for all 0 <= r <= m < n."""
    report = VerificationReport("cor2-vanishing", {"n": n})
    with timed(report):
        for m in range(n):
            for r in range(m + 1):
                lhs = cor2_lhs(n, r, m)
                report.check(lhs == 0, {"n": n, "m": m, "r": r}, 0, lhs)
    return report


def cor3_sum(n, m, r):
    return sum(
        ptm_sign(i) * (2**r * digit_sum(i, 2) - i) ** m for i in range(2**n)
    )


def cor3_check(n, m, r):
    """sum_{i<2^n} (-1)^{s_2(i)} (2^r s_2(i) - i)^m == 0 for 0 <= r < n."""
    if not 0 <= r <= n - 1:
        raise ValueError("need 0 <= r <= n-1")
    report = VerificationReport("cor3", {"n": n, "m": m, "r": r})
    with timed(report):
        value = cor3_sum(n, m, r)
        report.check(value == 0, {"n": n, "m": m, "r": r}, 0, value)
    return report


def _monomial_basis(nvars, degree):
    """Exponent tuples of total degree ``degree``, graded-lex (v1^d first)."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for k in range(left, -1, -1):
            rec(prefix + (k,), left - k, slots - 1)

    rec((), degree, nvars)
    return out


def sym_power_matrix(P, degree):
    """Matrix of the action of P on degree-``degree`` monomials in v1..v_dim.

    Column b is the image of basis monomial b, expanded in the same basis.
    """
    n = len(P)
    names = tuple(f"v{i + 1}" for i in range(n))
    ring = PolyRing(names, 1)
    basis = _monomial_basis(n, degree)
    index = {e: i for i, e in enumerate(basis)}
    cols = []
    for e in basis:
        image = MultiPoly(ring, {e: ring.scalar(1)}).apply_linear(P, names)
        col = [0] * len(basis)
        for f, c in image.terms.items():
            col[index[f]] = c.to_rational()
        cols.append(col)
    return tuple(tuple(cols[b][a] for b in range(len(basis))) for a in range(len(basis)))


def chi_poly(P, m):
    """det(I - y P | S_m), S_m the sum of symmetric powers of degree <= m."""
    result = None
    for d in range(m + 1):
        factor = char_det(sym_power_matrix(P, d))
        result = factor if result is None else result * factor
    return result


def verify_H_linear_recurrence(ctx, m, n_max, method="step"):
    """Check H[m,n] = -sum_{j=1}^{M} b_j H[m,n-j] for M <= n <= n_max."""
    M = comb(m + ctx.spec.dim, m)
    if n_max < M:
        raise ValueError(f"n_max={n_max} is below the recurrence length M={M}")
    getter = {
        "step": ctx.H_step_recurrence,
        "closed": ctx.H_closed_form,
        "from_f": ctx.H_from_F,
    }[method]
    chi = chi_poly(ctx.spec.P, m)
    b = [chi.coefficient({"y": j}).to_rational() for j in range(M + 1)]
    report = VerificationReport(
        "h-linear-recurrence",
        {"m": m, "n_max": n_max, "M": M, "P": [[str(x) for x in row] for row in ctx.spec.P]},
    )
    with timed(report):
        for n in range(M, n_max + 1):
            lhs = getter(m, n)
            rhs = ctx.ring.zero()
            for j in range(1, M + 1):
                if b[j]:
                    rhs = rhs - getter(m, n - j) * b[j]
            report.check(lhs == rhs, {"m": m, "n": n}, rhs, lhs)
    return report


def divisors_above_one(k):
    return [d for d in range(2, k + 1) if k % d == 0]
