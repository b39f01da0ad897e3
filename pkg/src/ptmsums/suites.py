"""Named verification suites, each returning a :class:`VerificationReport`.

Suites are registered in declaration order; the name ``all`` expands to
every one of them in that order (see :func:`suite_names`).
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .algebra import Cyclotomic, matvec
from .core import (
    PtmContext,
    closedF_value,
    cor2_check,
    cor2_vanishing_check,
    cor3_check,
    divisors_above_one,
    stirling2,
    verify_H_linear_recurrence,
)
from .digitseq import SeqSpec, count_digit, digit_sum, digits, eval_u, nkv, preset
from .prouhet import (
    DigitTuple,
    Fnn_v_closed,
    admissible_sets,
    f_v,
    power_sum_equal,
    product_identity_check,
    prouhet_partition,
    signs,
    theta_chain_check,
)
from .report import VerificationReport


@dataclass
class SuiteConfig:
    max_n: int = 4
    seed: int = 7
    samples: int = 25
    k: int | None = None
    d: int | None = None
    n: int | None = None
    m: int | None = None
    r: int | None = None
    v: str | None = None
    budget: int | None = None
    spec: SeqSpec | None = None


def random_family(seed, count, ks=(2, 3, 4), max_dim=2, entry_range=(-2, 2)):
    """Deterministic list of ``(spec, root order)`` pairs.

    Bases cycle through ``ks``; for bases with several admissible root orders
    the order alternates between them, so non-primitive roots are covered.
    """
    rng = random.Random(seed)
    lo, hi = entry_range
    out = []
    seen = {}
    for idx in range(count):
        k = ks[idx % len(ks)]
        orders = list(reversed(divisors_above_one(k)))
        d = orders[seen.get(k, 0) % len(orders)]
        seen[k] = seen.get(k, 0) + 1
        dim = rng.randint(1, max_dim)
        P = [[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)]
        q = [0] * dim
        while not any(q):
            q = [rng.randint(lo, hi) for _ in range(dim)]
        out.append((SeqSpec(k, P, q), d))
    return out


def nonvanishing(spec, n):
    """True when P^i(q) != 0 for every i < n (so dividing F by them makes sense)."""
    return all(any(spec.Pjq(i)) for i in range(n))


def _ctx(spec, d, cfg):
    return PtmContext(spec, d, budget=cfg.budget)


def _spec_params(spec, d):
    return {"k": spec.k, "d": d, "P": [[str(x) for x in row] for row in spec.P], "q": [str(x) for x in spec.q]}


def _n_range(cfg, lo=1):
    if cfg.n is not None:
        return [cfg.n]
    return list(range(lo, cfg.max_n + 1))


# -- expected values ------------------------------------------------------------


def nieto_value(n):
    return (-1) ** n * factorial(n) * 2 ** (n * (n - 1) // 2)


def bateman_bradley(ring, n):
    """(-1)^n (n+1)! 2^C(n,2) (x + (2^n - 1)/2), scaled to the ring variable v1 = 1."""
    x = ring.gen("x")
    v = ring.gen("v1")
    c = (-1) ** n * factorial(n + 1) * 2 ** (n * (n - 1) // 2)
    return (x * v**n + v ** (n + 1) * Fraction(2**n - 1, 2)) * c


def fn2_display(ring, n, linear=None):
    """(-1)^n 2^C(n,2) (n+2)! (x^2/2 + linear*x + (5*4^n - 9*2^n + 4)/36), homogenized in v1."""
    x = ring.gen("x")
    v = ring.gen("v1")
    if linear is None:
        linear = Fraction(2**n - 1, 2)
    c = (-1) ** n * 2 ** (n * (n - 1) // 2) * factorial(n + 2)
    const = Fraction(5 * 4**n - 9 * 2**n + 4, 36)
    return (x**2 * v**n * Fraction(1, 2) + x * v ** (n + 1) * linear + v ** (n + 2) * const) * c


# -- suites ---------------------------------------------------------------------


def suite_a_seq(cfg):
    rep = VerificationReport("a-seq", {"k_max": 6, "r_max": 6})
    for k in range(2, 7):
        for d in divisors_above_one(k):
            ctx = PtmContext(preset("n", k), d)
            z = ctx.zeta
            for r in range(7):
                direct = Cyclotomic.zero(d)
                zj = Cyclotomic.one(d)
                for j in range(k):
                    direct = direct + zj * j**r
                    zj = zj * z
                rep.check(ctx.a_seq(r) == direct, {"k": k, "d": d, "r": r}, direct, ctx.a_seq(r))
            rep.check(ctx.a_seq(0) == 0, {"k": k, "d": d, "r": 0}, 0, ctx.a_seq(0))
            a1 = Cyclotomic.from_rational(d, k) / (z - 1)
            rep.check(ctx.a_seq(1) == a1, {"k": k, "d": d, "r": 1, "closed": True}, a1, ctx.a_seq(1))
            a2 = (z * (k - 2) - k) * k / (z - 1) ** 2
            rep.check(ctx.a_seq(2) == a2, {"k": k, "d": d, "r": 2, "closed": True}, a2, ctx.a_seq(2))
    return rep


def suite_nieto(cfg):
    rep = VerificationReport("nieto", {"n_max": cfg.max_n})
    ctx = _ctx(preset("n", 2), 2, cfg)
    for n in _n_range(cfg):
        got = ctx.f_bruteforce(n, n)
        want = ctx.ring.monomial({"v1": n}, nieto_value(n))
        rep.check(got == want, {"n": n}, want, got)
    return rep


def suite_bateman_bradley(cfg):
    rep = VerificationReport("bateman-bradley", {"n_max": cfg.max_n})
    ctx = _ctx(preset("n", 2), 2, cfg)
    for n in _n_range(cfg):
        got = ctx.f_bruteforce(n + 1, n)
        want = bateman_bradley(ctx.ring, n)
        rep.check(got == want, {"n": n}, want, got)
    return rep


def suite_fn2_display(cfg):
    rep = VerificationReport("fn2-display", {"n_max": cfg.max_n})
    ctx = _ctx(preset("n", 2), 2, cfg)
    for n in _n_range(cfg):
        got = ctx.f_bruteforce(n + 2, n)
        want = fn2_display(ctx.ring, n)
        const = ctx.ring.monomial({"v1": n + 2}, nieto_value(n) * (n + 2) * (n + 1) * Fraction(5 * 4**n - 9 * 2**n + 4, 36))
        rep.check(got.coefficient_in("x", 0) == const, {"n": n, "part": "constant"}, const, got.coefficient_in("x", 0))
        rep.check(got == want, {"n": n, "part": "polynomial"}, want, got)
    return rep


def suite_g_identities(cfg):
    rep = VerificationReport("g-identities", {"n_max": cfg.max_n})
    ctx = _ctx(preset("s2", 2), 2, cfg)
    x, v = ctx.ring.gen("x"), ctx.ring.gen("v1")
    for n in _n_range(cfg):
        got = ctx.f_bruteforce(n, n)
        want = v**n * ((-1) ** n * factorial(n))
        rep.check(got == want, {"n": n, "m": n}, want, got)
        got = ctx.f_bruteforce(n + 1, n)
        want = (x * v**n * 2 + v ** (n + 1) * n) * Fraction((-1) ** n * factorial(n + 1), 2)
        rep.check(got == want, {"n": n, "m": n + 1}, want, got)
    return rep


def suite_stirling(cfg):
    top = max(2 * cfg.max_n, 1)
    rep = VerificationReport("stirling", {"max": top})
    ctx = _ctx(preset("s2", 2), 2, cfg)
    for n in range(top + 1):
        for m in range(top + 1):
            got = ctx.F_bruteforce(m, n)
            want = ctx.ring.monomial({"v1": m}, (-1) ** n * factorial(n) * stirling2(m, n))
            rep.check(got == want, {"m": m, "n": n}, want, got)
    return rep


def suite_vanishing(cfg):
    top = cfg.max_n + 1
    rep = VerificationReport("vanishing", {"n_max": top, "seed": cfg.seed, "samples": cfg.samples})
    for spec, d in random_family(cfg.seed, cfg.samples):
        ctx = _ctx(spec, d, cfg)
        for n in range(1, top + 1):
            for m in range(n):
                got = ctx.f_bruteforce(m, n)
                rep.check(got.is_zero(), {**_spec_params(spec, d), "m": m, "n": n}, 0, got)
    return rep


def suite_three_path(cfg):
    rep = VerificationReport("three-path", {"n_max": cfg.max_n, "seed": cfg.seed, "samples": cfg.samples})
    for spec, d in random_family(cfg.seed, cfg.samples):
        ctx = _ctx(spec, d, cfg)
        for n in range(cfg.max_n + 1):
            for m in range(n + 4):
                brute = ctx.F_bruteforce(m, n)
                rec = ctx.F_recurrence(m, n)
                closed = ctx.F_from_H(m, n)
                p = {**_spec_params(spec, d), "m": m, "n": n}
                rep.check(brute == rec, {**p, "path": "recurrence"}, brute, rec)
                rep.check(brute == closed, {**p, "path": "closed form"}, brute, closed)
    return rep


def _h_family(cfg):
    fam = random_family(cfg.seed, cfg.samples)
    return [(s, d) for s, d in fam if nonvanishing(s, cfg.max_n)]


def suite_h_paths(cfg):
    rep = VerificationReport("h-paths", {"n_max": cfg.max_n, "seed": cfg.seed, "samples": cfg.samples})
    for spec, d in _h_family(cfg):
        ctx = _ctx(spec, d, cfg)
        for n in range(cfg.max_n + 1):
            for m in range(4):
                p = {**_spec_params(spec, d), "m": m, "n": n}
                from_f = ctx.H_from_F(m, n, source="bruteforce")
                closed = ctx.H_closed_form(m, n)
                step = ctx.H_step_recurrence(m, n)
                rep.check(from_f == closed, {**p, "path": "closed form"}, from_f, closed)
                rep.check(from_f == step, {**p, "path": "step recurrence"}, from_f, step)
    return rep


def suite_divisibility(cfg):
    rep = VerificationReport("divisibility", {"n_max": cfg.max_n, "seed": cfg.seed, "samples": cfg.samples})
    for spec, d in _h_family(cfg):
        ctx = _ctx(spec, d, cfg)
        for n in range(cfg.max_n + 1):
            prod = ctx.ring.one()
            for i in range(n):
                prod = prod * ctx.Pq(i)
            for m in range(n, n + 4):
                F = ctx.F_bruteforce(m, n)
                quotient = F
                for i in range(n):
                    quotient = quotient.divide_linear(ctx.Pq(i))
                back = quotient * prod
                rep.check(back == F, {**_spec_params(spec, d), "m": m, "n": n}, F, back)
    return rep


def suite_homogeneity(cfg):
    rep = VerificationReport("homogeneity", {"n_max": cfg.max_n, "seed": cfg.seed, "samples": cfg.samples})
    for spec, d in _h_family(cfg):
        ctx = _ctx(spec, d, cfg)
        for n in range(cfg.max_n + 1):
            for m in range(4):
                H = ctx.H_from_F(m, n)
                rep.check(
                    H.is_homogeneous(m, ctx.vars) and H.degree("x") <= 0,
                    {**_spec_params(spec, d), "m": m, "n": n},
                    f"degree {m} in v",
                    H,
                )
    return rep


def suite_integration(cfg):
    rep = VerificationReport("integration", {"n_max": cfg.max_n, "seed": cfg.seed, "samples": cfg.samples})
    family = [(preset("n", 2), 2), (preset("s2", 2), 2), (preset("s2+n", 2), 2)]
    family += random_family(cfg.seed, cfg.samples)
    for spec, d in family:
        ctx = _ctx(spec, d, cfg)
        for n in range(cfg.max_n + 1):
            for m in range(n + 3):
                brute = ctx.f_bruteforce(m, n)
                rebuilt = ctx.integrate_from_constants(m, n)
                rep.check(brute == rebuilt, {**_spec_params(spec, d), "m": m, "n": n}, brute, rebuilt)
    return rep


def suite_closed_f(cfg):
    rep = VerificationReport("closed-f", {"n_max": cfg.max_n})
    ctx = _ctx(preset("n", 2), 2, cfg)
    for n in range(cfg.max_n + 1):
        for m in range(4):
            brute = ctx.F_bruteforce(m + n, n).coefficient({"v1": m + n})
            closed = closedF_value(m, n)
            rep.check(brute == closed, {"m": m, "n": n}, closed, brute)
    return rep


def suite_cor1(cfg):
    rep = VerificationReport("cor1", {"n_max": cfg.max_n, "seed": cfg.seed, "samples": cfg.samples})
    family = [(preset("n", 2), 2), (preset("s2", 2), 2), (preset("s2+n", 2), 2), (preset("n", 3), 3)]
    family += random_family(cfg.seed, cfg.samples)
    for spec, d in family:
        ctx = _ctx(spec, d, cfg)
        for n in range(cfg.max_n + 1):
            Fnn, Fn1n = ctx.cor1_values(n)
            p = {**_spec_params(spec, d), "n": n}
            rep.check(Fnn == ctx.F_recurrence(n, n), {**p, "value": "F[n,n]"}, ctx.F_recurrence(n, n), Fnn)
            rep.check(Fn1n == ctx.F_recurrence(n + 1, n), {**p, "value": "F[n+1,n]"}, ctx.F_recurrence(n + 1, n), Fn1n)
            if n >= 1:
                H1 = ctx.H_step_recurrence(1, n)
                total = ctx.ring.zero()
                for i in range(n):
                    total = total + ctx.Pq(i)
                rep.check(H1 == total * ctx.c_k(), {**p, "value": "H[1,n]"}, total * ctx.c_k(), H1)
    ctx = PtmContext(preset("n", 2))
    z = ctx.zeta
    for n in range(cfg.max_n + 1):
        d_k = (z - 1) ** (-n) * 2**n
        e_k = Cyclotomic.from_rational(2, -(2 ** (n + 1))) / ((z - 1) ** (n + 1) * 2)
        rep.check(d_k == (-1) ** n, {"k": 2, "n": n, "value": "d_k"}, (-1) ** n, d_k)
        rep.check(e_k == Fraction((-1) ** n, 2), {"k": 2, "n": n, "value": "e_k"}, Fraction((-1) ** n, 2), e_k)
    rep.check(ctx.c_k() == Fraction(1, 2), {"k": 2, "value": "c_2"}, Fraction(1, 2), ctx.c_k())
    return rep


def suite_cor2(cfg):
    ns = [cfg.n] if cfg.n is not None else list(range(cfg.max_n + 3))
    rep = VerificationReport("cor2", {"n": ns})
    for n in ns:
        for r in range(n + 1):
            sub = cor2_check(n, r)
            rep.check(sub.ok, {"n": n, "r": r}, (sub.first_failure or {}).get("expected"), (sub.first_failure or {}).get("actual"))
    return rep


def suite_cor2_vanishing(cfg):
    ns = [cfg.n] if cfg.n is not None else list(range(cfg.max_n + 3))
    rep = VerificationReport("cor2-vanishing", {"n": ns})
    for n in ns:
        sub = cor2_vanishing_check(n)
        rep.cases_checked += sub.cases_checked - 1
        rep.check(sub.ok, {"n": n}, 0, sub.first_failure)
    return rep


def suite_cor3(cfg):
    ns = [cfg.n] if cfg.n is not None else list(range(cfg.max_n + 5))
    rep = VerificationReport("cor3", {"n": ns, "m_max": 6})
    for n in ns:
        for r in range(n):
            for m in range(7):
                sub = cor3_check(n, m, r)
                rep.check(sub.ok, {"n": n, "m": m, "r": r}, 0, (sub.first_failure or {}).get("actual"))
    return rep


def suite_h_linear_recurrence(cfg):
    rep = VerificationReport("h-linear-recurrence", {"extra": 5})
    cases = [(SeqSpec(2, [[p]], [1]), m) for p in (1, 2, 3) for m in range(4)]
    cases += [(preset("n", 3), m) for m in range(4)]
    cases += [(preset("s2+n", 2), m) for m in range(3)]
    for spec, m in cases:
        ctx = _ctx(spec, spec.k, cfg)
        M = comb(m + spec.dim, m)
        sub = verify_H_linear_recurrence(ctx, m, M + 5)
        rep.cases_checked += sub.cases_checked - 1
        rep.check(sub.ok, {**_spec_params(spec, spec.k), "m": m}, None, sub.first_failure)
    return rep


def suite_product_identity(cfg):
    if cfg.k is not None and cfg.n is not None:
        points = [(cfg.k, cfg.n)]
    else:
        points = [(k, n) for k in (2, 3, 4) for n in range(1, min(cfg.max_n, 4) + 1)]
    rep = VerificationReport("product-identity", {"points": [list(p) for p in points]})
    for k, n in points:
        sub = product_identity_check(k, n, budget=cfg.budget)
        rep.cases_checked += sub.cases_checked - 1
        rep.check(sub.ok, {"k": k, "n": n}, None, sub.first_failure)
    return rep


def _prouhet_points(cfg):
    if cfg.k is not None:
        ks = [cfg.k]
    else:
        ks = [2, 4, 6]
    pts = []
    for k in ks:
        vs = [DigitTuple.parse(cfg.v)] if cfg.v else admissible_sets(k // 2)
        for n in _n_range(cfg):
            if k**n <= 1296:
                pts.extend((k, n, v) for v in vs)
    return pts


def suite_prouhet_partition(cfg):
    rep = VerificationReport("prouhet-partition", {"n_max": cfg.max_n})
    for k, n, v in _prouhet_points(cfg):
        part = prouhet_partition(k, n, v, budget=cfg.budget)
        rep.check(
            len(part.P) + len(part.Q) == k**n and not set(part.P) & set(part.Q),
            {"k": k, "n": n, "v": str(v), "part": "cover"},
            k**n,
            len(part.P) + len(part.Q),
        )
        for m in range(n):
            rep.check(power_sum_equal(part, m), {"k": k, "n": n, "v": str(v), "m": m}, True, False)
    return rep


def suite_fv_closed(cfg):
    rep = VerificationReport("fv-closed", {"n_max": cfg.max_n})
    for k, n, v in _prouhet_points(cfg):
        got = f_v(n, n, v, budget=cfg.budget)
        want = Fnn_v_closed(n, v)
        p = {"k": k, "n": n, "v": str(v)}
        rep.check(got == want, p, want, got)
        for m in range(n):
            val = f_v(m, n, v, budget=cfg.budget)
            rep.check(val.is_zero(), {**p, "m": m}, 0, val)
        for m in range(n, n + 3):
            val = f_v(m, n, v, budget=cfg.budget)
            rep.check(val.degree("x") <= m - n, {**p, "m": m, "part": "degree"}, f"<= {m - n}", val.degree("x"))
    return rep


def suite_theta_chain(cfg):
    rep = VerificationReport("theta-chain", {"n_max": cfg.max_n})
    for k, n, v in _prouhet_points(cfg):
        if k**n > 1296:
            continue
        sub = theta_chain_check(k, n, v)
        rep.cases_checked += sub.cases_checked - 1
        rep.check(sub.ok, {"k": k, "n": n, "v": str(v)}, None, sub.first_failure)
    return rep


def suite_permutation_invariance(cfg):
    from itertools import permutations

    rep = VerificationReport("permutation-invariance", {"b_max": 3})
    for b in (1, 2, 3):
        k = 2 * b
        for v in admissible_sets(b):
            base = signs(k, 3, v)
            for perm in permutations(v.entries):
                pv = DigitTuple(perm)
                rep.check(signs(k, 3, pv) == base, {"k": k, "v": str(pv)}, "same signs", "differ")
                i = k**3 - 1 - b
                rep.check(nkv(k, pv, i) == nkv(k, v, i), {"k": k, "v": str(pv), "i": i}, nkv(k, v, i), nkv(k, pv, i))
    return rep


def suite_digits(cfg):
    rep = VerificationReport("digits", {"i_max": 2000})
    for k in (2, 3, 4, 5, 10):
        spec = preset("s2+n", k)
        for i in range(2000 // k):
            ds = digits(i, k)
            counts = [count_digit(k, l, i) for l in range(k)]
            rep.check(
                digit_sum(i, k) == sum(l * c for l, c in enumerate(counts)) and sum(counts) == len(ds),
                {"k": k, "i": i, "part": "counts"},
                True,
                False,
            )
            pu = matvec(spec.P, eval_u(spec, i))
            for j in range(k):
                want = tuple(a + j * b for a, b in zip(pu, spec.q))
                got = eval_u(spec, k * i + j)
                rep.check(got == want, {"k": k, "i": i, "j": j, "part": "recurrence"}, want, got)
    return rep


SUITES = {
    "digits": suite_digits,
    "a-seq": suite_a_seq,
    "nieto": suite_nieto,
    "bateman-bradley": suite_bateman_bradley,
    "fn2-display": suite_fn2_display,
    "g-identities": suite_g_identities,
    "stirling": suite_stirling,
    "vanishing": suite_vanishing,
    "three-path": suite_three_path,
    "h-paths": suite_h_paths,
    "divisibility": suite_divisibility,
    "homogeneity": suite_homogeneity,
    "integration": suite_integration,
    "closed-f": suite_closed_f,
    "cor1": suite_cor1,
    "cor2": suite_cor2,
    "cor2-vanishing": suite_cor2_vanishing,
    "cor3": suite_cor3,
    "h-linear-recurrence": suite_h_linear_recurrence,
    "product-identity": suite_product_identity,
    "prouhet-partition": suite_prouhet_partition,
    "fv-closed": suite_fv_closed,
    "theta-chain": suite_theta_chain,
    "permutation-invariance": suite_permutation_invariance,
}


def run_suite(name, cfg):
    """Run one named suite and time it."""
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}") from None
    start = time.perf_counter()
    report = fn(cfg)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def suite_names(name):
    return list(SUITES) if name == "all" else [name]
