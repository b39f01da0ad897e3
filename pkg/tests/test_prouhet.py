from itertools import permutations
from math import comb, factorial

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from ptmsums.digitseq import count_digit, nkv
from ptmsums.errors import BudgetExceeded, InvalidDigitTuple
from ptmsums.prouhet import (
    DigitTuple,
    Fnn_v_closed,
    admissible_count,
    admissible_sets,
    f_v,
    power_sum_equal,
    product_identity_check,
    prouhet_partition,
    ptm_like_sum,
    signs,
    theta_chain_check,
)


def digit_tuples():
    return st.integers(1, 3).flatmap(
        lambda b: st.permutations(range(1, 2 * b)).map(lambda p: DigitTuple(tuple(p[:b])))
    )


def test_digit_tuple_validation():
    assert DigitTuple.parse("1,3").k == 4
    assert str(DigitTuple.parse("3,1").normalized()) == "1,3"
    for bad in [(), (1, 1), (0, 1), (4, 1), (2,)]:
        with pytest.raises(InvalidDigitTuple):
            DigitTuple(bad)
    with pytest.raises(InvalidDigitTuple):
        prouhet_partition(3, 2, DigitTuple((1,)))
    with pytest.raises(InvalidDigitTuple):
        prouhet_partition(6, 2, DigitTuple((1,)))


@pytest.mark.parametrize("b", range(1, 6))
def test_admissible_counts(b):
    assert len(admissible_sets(b)) == comb(2 * b - 1, b) == admissible_count(b)
    assert admissible_count(b, ordered=True) == factorial(b) * comb(2 * b - 1, b)


def test_partition_examples():
    p = prouhet_partition(2, 2, (1,))
    assert (p.P, p.Q) == ((0, 3), (1, 2))
    p = prouhet_partition(2, 3, (1,))
    assert (p.P, p.Q) == ((0, 3, 5, 6), (1, 2, 4, 7))
    assert sum(i * i for i in p.P) == 70 == sum(i * i for i in p.Q)
    p = prouhet_partition(4, 1, (1, 2))
    assert (p.P, p.Q) == ((0, 3), (1, 2))
    assert not power_sum_equal(prouhet_partition(2, 2, (1,)), 2)
    assert p.to_dict() == {"P": [0, 3], "Q": [1, 2], "verified_up_to_m": 0}


def test_product_identity_examples():
    rep = product_identity_check(2, 4)
    assert rep.ok and rep.cases_checked == 17
    assert product_identity_check(3, 1).ok
    assert product_identity_check(3, 3, symbolic=False).ok
    with pytest.raises(BudgetExceeded):
        product_identity_check(4, 4, budget=100)


def test_product_identity_k2_n2_against_sympy():
    x, t0, t1 = sympy.symbols("x t0 t1")
    lhs = sympy.expand((t0 + t1 * x) * (t0 + t1 * x**2))
    assert lhs == t0**2 + t0 * t1 * x + t0 * t1 * x**2 + t1**2 * x**3
    rhs = sum(t0 ** count_digit(2, 0, i) * t1 ** count_digit(2, 1, i) * x**i for i in range(4))
    # i = 0 and 1 have fewer than two digits: the unpadded count misses leading zeros
    assert sympy.expand(lhs - rhs) != 0
    assert product_identity_check(2, 2).ok


@given(digit_tuples(), st.integers(1, 3))
def test_equal_power_sums(v, n):
    part = prouhet_partition(v.k, n, v)
    assert sorted(part.P + part.Q) == list(range(v.k**n))
    assert len(part.P) == len(part.Q)
    for m in range(n):
        assert power_sum_equal(part, m)
        assert ptm_like_sum(v.k, n, v, m) == 0


@given(digit_tuples(), st.integers(1, 3))
def test_fv(v, n):
    for m in range(n):
        assert f_v(m, n, v).is_zero()
    assert f_v(n, n, v) == Fnn_v_closed(n, v)
    for m in range(n, n + 3):
        assert f_v(m, n, v).degree("x") <= m - n


@given(digit_tuples(), st.integers(0, 10**4))
def test_permutation_invariance(v, i):
    for perm in permutations(v.entries):
        assert nkv(v.k, perm, i) == nkv(v.k, v, i)
    assert signs(v.k, 2, v) == signs(v.k, 2, v.normalized())


def test_fv_examples():
    assert f_v(1, 1, (1, 3)) == -2
    assert f_v(1, 1, (1, 2)) == 0
    assert Fnn_v_closed(1, (1, 3)) == -2
    assert all(Fnn_v_closed(n, (1, 2)) == 0 for n in range(1, 6))
    for n in range(1, 8):
        assert Fnn_v_closed(n, (1,)) == (-1) ** n * factorial(n) * 2 ** comb(n, 2)


@pytest.mark.parametrize("k,n", [(2, 4), (4, 3), (6, 2)])
def test_theta_chain(k, n):
    for v in admissible_sets(k // 2):
        assert theta_chain_check(k, n, v).ok


def test_budget():
    with pytest.raises(BudgetExceeded):
        prouhet_partition(2, 21, (1,))
    with pytest.raises(BudgetExceeded):
        f_v(3, 3, (1, 3), budget=10)
