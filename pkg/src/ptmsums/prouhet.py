"""Digit-count signs in even bases and the equal-power-sum partitions they give.

For ``k = 2b`` and a set ``v`` of ``b`` distinct digits from ``1..k-1``, the
sign ``(-1)^{N_{k,v}(i)}`` (parity of the number of digits of ``i`` lying in
``v``) splits ``{0, ..., k^n - 1}`` into two halves whose m-th power sums agree
for every ``m < n``.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from .algebra import PolyRing, rational_poly
from .digitseq import digits
from .errors import InvalidDigitTuple
from .kernels import check_budget
from .report import VerificationReport, timed


@dataclass(frozen=True)
class DigitTuple:
    """``b`` pairwise distinct digits from ``1..2b-1``; the base is ``k = 2b``."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        b = len(entries)
        if b < 1:
            raise InvalidDigitTuple("digit tuple must be nonempty")
        if len(set(entries)) != b:
            raise InvalidDigitTuple(f"digits must be pairwise distinct: {entries}")
        bad = [e for e in entries if not 1 <= e <= 2 * b - 1]
        if bad:
            raise InvalidDigitTuple(f"digits {bad} outside 1..{2 * b - 1} for b={b}")

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(t) for t in str(text).split(",") if t.strip()))

    @property
    def b(self):
        return len(self.entries)

    @property
    def k(self):
        return 2 * self.b

    @property
    def digit_set(self):
        return frozenset(self.entries)

    def normalized(self):
        return DigitTuple(tuple(sorted(self.entries)))

    def __str__(self):
        return ",".join(map(str, self.entries))


def admissible_sets(b):
    """Every admissible digit set for ``k = 2b``, as sorted tuples."""
    return [DigitTuple(c) for c in combinations(range(1, 2 * b), b)]


def admissible_count(b, ordered=False):
    """Number of admissible choices; ``ordered`` counts tuples rather than sets."""
    n = comb(2 * b - 1, b)
    return n * factorial(b) if ordered else n


def _check_tuple(k, v):
    if not isinstance(v, DigitTuple):
        v = DigitTuple(tuple(v))
    if k % 2:
        raise InvalidDigitTuple(f"base must be even, got {k}")
    if v.k != k:
        raise InvalidDigitTuple(f"base {k} needs {k // 2} digits, got {v.b}")
    return v


def padded_digits(i, k, n):
    ds = digits(i, k)
    return ds + [0] * (n - len(ds))


def signs(k, n, v):
    """(-1)^{N_{k,v}(i)} for all ``i < k^n``."""
    v = _check_tuple(k, v)
    ds = v.digit_set
    flip = [1 if j in ds else 0 for j in range(k)]
    out = [1]
    for _ in range(n):
        # index k*i + j appends digit j
        out = [s * (-1 if flip[j] else 1) for s in out for j in range(k)]
    return out


def ptm_like_sum(k, n, v, m):
    """sum_{i<k^n} (-1)^{N_{k,v}(i)} i^m."""
    return sum(s * i**m for i, s in enumerate(signs(k, n, v)))


def product_identity_check(k, n, symbolic=True, budget=None):
    """Expand prod_{i<n} (sum_j t_j x^{j k^i}) and compare with the digit-count side.

    The right side is sum_{i<k^n} (prod_l t_l^{N_k(l,i)}) x^i, where digit counts
    are taken over the n-digit expansion of i (leading zeros included), as the
    product on the left forces.  With ``symbolic=False`` the t_j are replaced
    by the integers j + 2 before comparing.
    """
    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    check_budget(k**n, budget)
    report = VerificationReport("product-identity", {"k": k, "n": n, "symbolic": symbolic})
    with timed(report):
        names = ("x",) + tuple(f"t{j}" for j in range(k))
        ring = PolyRing(names, 1)
        lhs = ring.one()
        for i in range(n):
            factor = ring.zero()
            for j in range(k):
                factor = factor + ring.monomial({"x": j * k**i, f"t{j}": 1})
            lhs = lhs * factor
        rhs_terms = {}
        for i in range(k**n):
            e = [i] + [0] * k
            for d in padded_digits(i, k, n):
                e[1 + d] += 1
            rhs_terms[tuple(e)] = 1
        rhs = rational_poly(ring, rhs_terms)
        if not symbolic:
            values = {f"t{j}": j + 2 for j in range(k)}
            lhs, rhs = lhs.subs(values), rhs.subs(values)
        for i in range(k**n):
            a = lhs.coefficient_in("x", i)
            b = rhs.coefficient_in("x", i)
            report.check(a == b, {"x_power": i}, b, a)
        report.check(lhs == rhs, {"whole": True}, rhs, lhs)
    return report


@dataclass(frozen=True)
class Partition:
    k: int
    n: int
    P: tuple
    Q: tuple

    def to_dict(self):
        return {"P": list(self.P), "Q": list(self.Q), "verified_up_to_m": self.n - 1}


def prouhet_partition(k, n, v, budget=None):
    """Split 0..k^n-1 by the parity of the number of digits lying in ``v``."""
    v = _check_tuple(k, v)
    check_budget(k**n, budget)
    P, Q = [], []
    for i, s in enumerate(signs(k, n, v)):
        (P if s == 1 else Q).append(i)
    return Partition(k, n, tuple(P), tuple(Q))


def power_sum_equal(part, m):
    return sum(i**m for i in part.P) == sum(i**m for i in part.Q)


def f_v(m, n, v, budget=None):
    """sum_{i<k^n} (-1)^{N_{k,v}(i)} (x + i)^m as a polynomial in x."""
    v = v if isinstance(v, DigitTuple) else DigitTuple(tuple(v))
    k = v.k
    check_budget(k**n, budget)
    sg = signs(k, n, v)
    sums = [0] * (m + 1)
    for i, s in enumerate(sg):
        pw = s
        for p in range(m + 1):
            sums[p] += pw
            pw *= i
    ring = PolyRing(("x",), 1)
    return rational_poly(ring, {(m - p,): comb(m, p) * sums[p] for p in range(m + 1)})


def Fnn_v_closed(n, v):
    """n! k^C(n,2) (sum of digits outside v minus sum of digits in v)^n."""
    v = v if isinstance(v, DigitTuple) else DigitTuple(tuple(v))
    k = v.k
    ds = v.digit_set
    diff = sum(j for j in range(k) if j not in ds) - sum(ds)
    return factorial(n) * k ** comb(n, 2) * diff**n


def theta_chain_check(k, n, v):
    """Apply (x d/dx)^m to prod_i h_i(x) and evaluate at x = 1 for every m < n.

    Also confirms that the m-th iterate has coefficients sign(i) * i^m.
    """
    v = _check_tuple(k, v)
    report = VerificationReport("theta-chain", {"k": k, "n": n, "v": str(v)})
    with timed(report):
        ring = PolyRing(("x",), 1)
        ds = v.digit_set
        t = [-1 if j in ds else 1 for j in range(k)]
        prod = ring.one()
        for i in range(n):
            h = rational_poly(ring, {(j * k**i,): t[j] for j in range(k)})
            report.check(h.subs({"x": 1}) == 0, {"h_index": i}, 0, h.subs({"x": 1}))
            prod = prod * h
        sg = signs(k, n, v)
        cur = prod
        for m in range(n):
            expected = rational_poly(ring, {(i,): s * i**m for i, s in enumerate(sg)})
            report.check(cur == expected, {"m": m, "part": "coefficients"}, expected, cur)
            at_one = cur.subs({"x": 1}).constant_term()
            report.check(at_one == 0, {"m": m, "part": "value at 1"}, 0, at_one)
            cur = cur.theta("x")
    return report
