"""Brute-force accumulation of weighted powers of linear forms.

Every item is ``(residue, coeffs)``: it contributes ``zeta**residue * L**p``
where ``L = sum_j coeffs[j] * var_j``.  Sums are kept per residue with plain
int/Fraction coefficients; the cyclotomic weights are applied once at the
end, which keeps the inner loops free of field arithmetic.
"""

import os
from collections import defaultdict
from functools import lru_cache
from math import factorial

from .algebra import Cyclotomic, MultiPoly
from .errors import BudgetExceeded

DEFAULT_BUDGET = 1 << 20
BUDGET_WARNING = 1 << 24
BUDGET_ENV = "PTMSUMS_BUDGET"


def default_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def check_budget(needed, budget=None):
    budget = default_budget() if budget is None else budget
    if needed > budget:
        raise BudgetExceeded(needed, budget)


def accumulate_powers(items, pmax, nvars):
    """Per-residue power sums ``{residue: [S_0, ..., S_pmax]}``.

    ``S_p`` is a dict ``{exponent tuple: coefficient}`` of ``sum L**p`` over
    the items with that residue.
    """
    units = [tuple(1 if i == j else 0 for i in range(nvars)) for j in range(nvars)]
    zero = (0,) * nvars
    sums = defaultdict(lambda: [defaultdict(int) for _ in range(pmax + 1)])
    for residue, coeffs in items:
        acc = sums[residue]
        acc[0][zero] += 1
        support = [(units[j], a) for j, a in enumerate(coeffs) if a]
        cur = {zero: 1}
        for p in range(1, pmax + 1):
            if not support:
                break
            nxt = defaultdict(int)
            for e, c in cur.items():
                for u, a in support:
                    nxt[tuple(x + y for x, y in zip(e, u))] += c * a
            cur = nxt
            target = acc[p]
            for e, c in cur.items():
                target[e] += c
    return sums


@lru_cache(maxsize=None)
def multinomial_terms(nvars, degree):
    """All ``(exponents, multinomial coefficient)`` with ``sum(exponents) == degree``."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            e = prefix + (left,)
            coeff = factorial(degree)
            for k in e:
                coeff //= factorial(k)
            out.append((e, coeff))
            return
        for k in range(left, -1, -1):
            rec(prefix + (k,), left - k, slots - 1)

    if nvars == 0:
        return ((), 1) if degree == 0 else ()
    rec((), degree, nvars)
    return tuple(out)


def accumulate_power(items, degree, nvars):
    """Per-residue ``sum L**degree`` via the multinomial expansion of each item."""
    terms = multinomial_terms(nvars, degree)
    sums = defaultdict(lambda: defaultdict(int))
    for residue, coeffs in items:
        pw = []
        for a in coeffs:
            row = [1]
            for _ in range(degree):
                row.append(row[-1] * a)
            pw.append(row)
        acc = sums[residue]
        for e, m in terms:
            v = m
            for j, k in enumerate(e):
                if k:
                    v *= pw[j][k]
                    if not v:
                        break
            if v:
                acc[e] += v
    return sums


def combine_residues(ring, per_residue):
    """``sum_c zeta**c * S_c`` as a :class:`MultiPoly` over ``ring``."""
    order = ring.order
    out = {}
    for residue, terms in per_residue.items():
        w = Cyclotomic.root_power(order, residue)
        for e, c in terms.items():
            if not c:
                continue
            v = w * c
            s = out.get(e)
            out[e] = v if s is None else s + v
    return MultiPoly(ring, {e: c for e, c in out.items() if c})
