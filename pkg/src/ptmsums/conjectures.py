"""Bounded checks of three multivariable generalizations of the digit-sum identities.

* Conjecture 1: a product of Thue-Morse sums in independent variables.
* Conjecture 2: the (digit sum, index) pair in base k, with a closed form for
  k = 2 and a divisibility claim for k > 2.
* Conjecture 3: a Thue-Morse sign of a *sum* of indices, whose t-degree is
  claimed to be m - 1, with closed forms for m = 1 and m = 2.

Summation indices for Conjecture 2 are read as i_1..i_m with exponents
a_1..a_m and total exponent sum(a_j); the divisor in part (2) is
prod_j prod_{i < a_j} (x_j + k^i y_j).
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb, factorial

from .algebra import Cyclotomic, PolyRing
from .core import compositions
from .digitseq import digit_sum
from .errors import BudgetExceeded, NotDivisible
from .kernels import accumulate_power, accumulate_powers, check_budget, combine_residues

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
SKIPPED = "skipped-budget"

WITNESS_TERMS = 20

CONJ2_READING = (
    "indices i_1..i_m, exponents a_1..a_m, total exponent sum(a_j); "
    "divisor prod_j prod_{i<a_j} (x_j + k^i y_j)"
)


@dataclass
class ConjReport:
    conjecture: int
    params: dict
    status: str
    witness: object = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.status == COUNTEREXAMPLE) != (self.witness is not None and bool(self.witness)):
            raise ValueError("witness must be a nonzero polynomial exactly for counterexamples")

    @property
    def ok(self):
        return self.status == VERIFIED

    def sort_key(self):
        return (self.conjecture, sorted(self.params.items()))

    def to_dict(self):
        return {
            "conjecture": self.conjecture,
            "params": self.params,
            "status": self.status,
            "witness": None if self.witness is None else self.witness.text(WITNESS_TERMS),
            "note": self.note,
            **self.extra,
        }


def _thue_morse_moment(a, e, _cache={}):
    """sum_{i<2^a} (-1)^{s_2(i)} i^e."""
    key = (a, e)
    if key not in _cache:
        _cache[key] = sum((-1) ** digit_sum(i, 2) * i**e for i in range(2**a))
    return _cache[key]


def _splits(total, parts):
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _splits(total - first, parts - 1):
            yield (first,) + rest


# -- Conjecture 1 -------------------------------------------------------------


def conj1_ring(K):
    return PolyRing(("x",) + tuple(f"x{j + 1}" for j in range(K)), 2)


def conj1_lhs(A, method="factored"):
    """G_A(X) = sum over i_j < 2^{a_j} of (-1)^{sum s_2(i_j)} (x + sum i_j x_j)^{sum a_j}.

    ``factored`` expands the power multinomially and sums each block over its
    own index (the sign is multiplicative across blocks); ``direct`` enumerates
    the full index product.
    """
    K = len(A)
    N = sum(A)
    ring = conj1_ring(K)
    if method == "direct":
        items = (
            (sum(digit_sum(i, 2) for i in idx) % 2, (1,) + idx)
            for idx in product(*(range(2**a) for a in A))
        )
        return combine_residues(ring, accumulate_power(items, N, K + 1))
    if method != "factored":
        raise ValueError(f"unknown method {method!r}")
    terms = {}
    for e in _splits(N, K + 1):
        coeff = factorial(N)
        for k in e:
            coeff //= factorial(k)
        for a, ej in zip(A, e[1:]):
            coeff *= _thue_morse_moment(a, ej)
            if not coeff:
                break
        if coeff:
            terms[e] = coeff
    return ring.from_terms(terms)


def conj1_rhs(A):
    K = len(A)
    N = sum(A)
    ring = conj1_ring(K)
    c = (-1) ** N * 2 ** sum(a * (a - 1) // 2 for a in A) * factorial(N)
    return ring.monomial({f"x{j + 1}": a for j, a in enumerate(A)}, c)


def conj1_check(A, method="factored", budget=None):
    A = tuple(int(a) for a in A)
    if any(a < 0 for a in A) or not A:
        raise ValueError("A must be a nonempty tuple of nonnegative integers")
    params = {"A": list(A)}
    try:
        check_budget(2 ** sum(A), budget)
    except BudgetExceeded as exc:
        return ConjReport(1, params, SKIPPED, note=str(exc))
    diff = conj1_lhs(A, method) - conj1_rhs(A)
    if diff:
        return ConjReport(1, params, COUNTEREXAMPLE, diff, "G_A(X) minus the conjectured monomial")
    return ConjReport(1, params, VERIFIED)


# -- Conjecture 2 -------------------------------------------------------------


def conj2_ring(m, d):
    names = tuple(f"x{j + 1}" for j in range(m)) + tuple(f"y{j + 1}" for j in range(m))
    return PolyRing(names, d)


def conj2_lhs(k, d, A, method="factored"):
    """G_A(X,Y) = sum zeta^{sum s_k(i_j)} (sum_j s_k(i_j) x_j + i_j y_j)^{sum a_j}."""
    m = len(A)
    N = sum(A)
    ring = conj2_ring(m, d)
    if method == "direct":
        items = []
        for idx in product(*(range(k**a) for a in A)):
            ss = tuple(digit_sum(i, k) for i in idx)
            items.append((sum(ss) % d, ss + idx))
        return combine_residues(ring, accumulate_power(items, N, 2 * m))
    if method != "factored":
        raise ValueError(f"unknown method {method!r}")
    # per-block sums B_j(e) = sum_i zeta^{s(i)} (s(i) x_j + i y_j)^e
    blocks = []
    for j, a in enumerate(A):
        items = ((digit_sum(i, k) % d, (digit_sum(i, k), i)) for i in range(k**a))
        per = accumulate_powers(items, N, 2)
        sums = []
        for e in range(N + 1):
            lifted = {}
            for c, lst in per.items():
                lifted[c] = {
                    tuple(ex[0] if t == j else ex[1] if t == m + j else 0 for t in range(2 * m)): v
                    for ex, v in lst[e].items()
                }
            sums.append(combine_residues(ring, lifted))
        blocks.append(sums)
    total = ring.zero()
    for e in _splits(N, m):
        coeff = factorial(N)
        for x in e:
            coeff //= factorial(x)
        term = ring.const(coeff)
        for j, ej in enumerate(e):
            term = term * blocks[j][ej]
            if not term:
                break
        total = total + term
    return total


def conj2_divisors(k, A, ring):
    m = len(A)
    out = []
    for j, a in enumerate(A):
        x, y = ring.gen(f"x{j + 1}"), ring.gen(f"y{j + 1}")
        out.extend(x + y * k**i for i in range(a))
    return out


def conj2_check(k, d, A, method="factored", budget=None):
    A = tuple(int(a) for a in A)
    d = k if d is None else int(d)
    if k < 2 or d < 2 or k % d:
        raise ValueError(f"root order d must divide k and exceed 1 (k={k}, d={d})")
    if not A or any(a < 0 for a in A):
        raise ValueError("A must be a nonempty tuple of nonnegative integers")
    params = {"k": k, "d": d, "A": list(A)}
    try:
        check_budget(k ** sum(A), budget)
    except BudgetExceeded as exc:
        return ConjReport(2, params, SKIPPED, note=str(exc))
    G = conj2_lhs(k, d, A, method)
    ring = G.ring
    divisors = conj2_divisors(k, A, ring)
    if k == 2:
        N = sum(A)
        expected = ring.const((-1) ** N * factorial(N))
        for L in divisors:
            expected = expected * L
        diff = G - expected
        if diff:
            return ConjReport(2, params, COUNTEREXAMPLE, diff, CONJ2_READING)
        return ConjReport(2, params, VERIFIED, note=CONJ2_READING)
    quotient = G
    for L in divisors:
        try:
            quotient = quotient.divide_linear(L)
        except NotDivisible as exc:
            return ConjReport(
                2,
                params,
                COUNTEREXAMPLE,
                exc.remainder,
                f"not divisible by {L.text()}; witness is the remainder. {CONJ2_READING}",
            )
    return ConjReport(
        2, params, VERIFIED, note=CONJ2_READING, extra={"quotient": quotient.text(WITNESS_TERMS)}
    )


# -- Conjecture 3 -------------------------------------------------------------


def conj3_ring(m):
    return PolyRing(("t",) + tuple(f"x{j + 1}" for j in range(m)), 2)


def conj3_poly(m, n):
    """sum over i_1..i_m < 2^n of (-1)^{s_2(i_1+...+i_m)} (t + sum i_j x_j)^n."""
    ring = conj3_ring(m)
    items = (
        (digit_sum(sum(idx), 2) % 2, (1,) + idx) for idx in product(range(2**n), repeat=m)
    )
    return combine_residues(ring, accumulate_power(items, n, m + 1))


def _divided_power(ring, j):
    """(x1^j - x2^j)/(x1 - x2) as sum_{a+b=j-1} x1^a x2^b (zero for j = 0)."""
    out = ring.zero()
    for a in range(j):
        out = out + ring.monomial({"x1": a, "x2": j - 1 - a})
    return out


def conj3_closed(m, n):
    """The stated closed forms for m = 1 and m = 2 (None otherwise)."""
    ring = conj3_ring(m)
    c = (-1) ** n * factorial(n) * 2 ** (n * (n - 1) // 2)
    if m == 1:
        return ring.monomial({"x1": n}, c)
    if m == 2:
        t = ring.gen("t")
        x1x2 = ring.monomial({"x1": 1, "x2": 1})
        inner = (
            _divided_power(ring, n) * t * 2
            + _divided_power(ring, n + 1) * 2**n
            + x1x2 * _divided_power(ring, n - 1) * (2**n - 1)
        )
        return inner * c
    return None


def conj3_check(m, n, budget=None):
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    params = {"m": m, "n": n}
    try:
        check_budget(2 ** (n * m), budget)
    except BudgetExceeded as exc:
        return ConjReport(3, params, SKIPPED, note=str(exc))
    H = conj3_poly(m, n)
    deg = H.degree("t")
    extra = {"deg_t": deg}
    if deg != m - 1:
        note = f"t-degree is {deg}, claimed {m - 1}"
        if m - 1 > n:
            note += " (the polynomial has total degree n, so the claim cannot hold for m > n + 1)"
        witness = H if H else H.ring.one()
        return ConjReport(3, params, COUNTEREXAMPLE, witness, note, extra)
    closed = conj3_closed(m, n)
    if closed is not None:
        diff = H - closed
        if diff:
            return ConjReport(
                3, params, COUNTEREXAMPLE, diff, "difference from the stated closed form", extra
            )
    return ConjReport(3, params, VERIFIED, extra=extra)


# -- sweeps -----------------------------------------------------------------------


def _tuples(max_total, base, max_parts):
    """Positive-part tuples A with at most ``max_parts`` parts and base^sum(A) <= max_total."""
    out = []
    s = 1
    while base**s <= max_total:
        for A in compositions(s):
            if len(A) <= max_parts:
                out.append(A)
        s += 1
    return out


def sweep_points(conjecture, max_total, max_parts=3, k=2, d=None):
    """Parameter points of one conjecture within the term budget ``max_total``."""
    if conjecture == 1:
        return [(1, A) for A in _tuples(max_total, 2, max_parts)]
    if conjecture == 2:
        d = k if d is None else d
        return [(2, (k, d, A)) for A in _tuples(max_total, k, max_parts)]
    if conjecture == 3:
        points = []
        for m in range(1, max_parts + 1):
            n = 1
            while 2 ** (n * m) <= max_total:
                points.append((3, (m, n)))
                n += 1
        return points
    raise ValueError(f"unknown conjecture {conjecture!r}")


def run_point(point):
    conjecture, args = point
    if conjecture == 1:
        return conj1_check(args)
    if conjecture == 2:
        return conj2_check(*args)
    return conj3_check(*args)


def sweep(conjecture, max_total, max_parts=3, k=2, d=None, jobs=1):
    """Run every parameter point; reports come back sorted by parameters."""
    points = sweep_points(conjecture, max_total, max_parts, k, d)
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_point, points))
    else:
        reports = [run_point(p) for p in points]
    return sorted(reports, key=ConjReport.sort_key)
