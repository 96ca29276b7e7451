import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from oereo.errors import DomainError, NotCoprimeError
from oereo.euclid import (
    EATrace,
    bezout,
    bezout_backtrack,
    check_quotients,
    cofactors,
    construct_input,
    mod_inverse,
    remainder_backward,
    remainder_backward_h,
    remainder_forward,
    run_ea,
    worst_case_pair,
)
from oereo.fib_array import fib_number

from helpers import all_steps, brute_force_minima, ref_gcd

pairs = st.integers(1, 10**9).flatmap(lambda a: st.tuples(st.just(a), st.integers(1, a)))


def assert_trace_invariants(tr: EATrace):
    r, q, n = tr.rem_list, tr.quo_list, tr.num_steps
    assert len(r) == n + 2 and len(q) == n
    assert r[0] == tr.a and r[1] == tr.b and r[-1] == 0 and r[-2] == tr.gcd >= 1
    for i in range(1, n + 1):
        assert r[i - 1] == r[i] * q[i - 1] + r[i + 1]
        assert 0 <= r[i + 1] < r[i]
    assert all(x > y for x, y in zip(r[1:-1], r[2:-1]))
    assert all(x >= 1 for x in q)
    if n >= 2:
        assert q[-1] >= 2
    assert n <= tr.b


def test_example_trace():
    tr = run_ea(4449, 935)
    assert tr.gcd == 1
    assert tr.num_steps == 7
    assert tr.rem_list == (4449, 935, 709, 226, 31, 9, 4, 1, 0)
    assert tr.quo_list == (4, 1, 3, 7, 3, 2, 4)
    assert EATrace.from_dict(tr.to_dict()) == tr


def test_small_traces():
    tr = run_ea(5, 5)
    assert (tr.gcd, tr.num_steps, tr.quo_list) == (5, 1, (1,))
    tr = run_ea(34, 21)
    assert (tr.gcd, tr.num_steps) == (1, 7)


@pytest.mark.parametrize("a, b", [(3, 5), (0, 0), (5, 0), (-3, -5), (2.0, 1)])
def test_run_ea_domain(a, b):
    with pytest.raises(DomainError):
        run_ea(a, b)


def test_bezout_examples():
    assert bezout(4449, 935) == bezout_backtrack(4449, 935)
    res = bezout(4449, 935)
    assert (res.s, res.t, res.gcd) == (-211, 1004, 1)
    res = bezout(8, 4)
    assert (res.s, res.t, res.gcd) == (0, 1, 4)
    res = bezout(21, 13)
    assert 21 * res.s + 13 * res.t == 1 and abs(res.t) <= 21
    assert res == bezout_backtrack(21, 13)
    bt = bezout_backtrack(2, 1)
    assert (bt.s, bt.t) == (0, 1)


@given(pairs)
def test_bezout_property(pair):
    a, b = pair
    res = bezout(a, b)
    assert res == bezout_backtrack(a, b)
    assert a * res.s + b * res.t == res.gcd == gcd(a, b)


def test_remainder_examples():
    tr = run_ea(4449, 935)
    assert remainder_forward(tr, 3) == 31
    assert remainder_forward(tr, -1) == 4449
    assert remainder_forward(tr, 0) == 935
    assert remainder_backward(tr, 2) == 4
    assert remainder_backward(tr, 0) == 0
    assert remainder_backward(tr, 7) == 935
    assert remainder_backward(tr, -1) == tr.gcd
    with pytest.raises(DomainError):
        remainder_forward(tr, 8)
    with pytest.raises(DomainError):
        remainder_backward(tr, -2)


@given(pairs)
def test_remainder_reconstruction(pair):
    tr = run_ea(*pair)
    n = tr.num_steps
    for i in range(-1, n + 1):
        assert remainder_forward(tr, i) == tr.remainder(i)
        assert remainder_backward_h(tr, i) == tr.remainder(n - 1 - i)
        if i >= 0:
            assert remainder_backward(tr, i) == tr.remainder(n - i)


@given(pairs)
def test_trace_invariants(pair):
    tr = run_ea(*pair)
    assert_trace_invariants(tr)
    assert tr.gcd == ref_gcd(*pair)


def test_cofactors_examples():
    assert cofactors(run_ea(4449, 935)) == (4449, 935)
    assert cofactors(run_ea(8, 4)) == (2, 1)


@given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 100))
def test_cofactors_scaled(x, y, k):
    g = gcd(x, y)
    a0, b0 = max(x, y) // g, min(x, y) // g
    assert cofactors(run_ea(k * a0, k * b0)) == (a0, b0)


def test_construct_examples():
    assert construct_input((4, 1, 3, 7, 3, 2, 4), 1) == (4449, 935)
    assert construct_input((5,), 3) == (15, 3)
    assert construct_input((1, 1, 1, 1, 1, 1, 2), 1) == (34, 21) == (fib_number(8), fib_number(7))
    tr = run_ea(34, 21)
    assert tr.quo_list == (1, 1, 1, 1, 1, 1, 2)


@pytest.mark.parametrize("q", [(), (1, 1), (3, 0), (2, -1), (4, 1)])
def test_construct_rejects_noncanonical(q):
    with pytest.raises(DomainError):
        construct_input(q, 1)


def test_construct_rejects_bad_gcd():
    with pytest.raises(DomainError):
        construct_input((2,), 0)


canonical = st.lists(st.integers(1, 9), min_size=1, max_size=12).filter(
    lambda q: len(q) == 1 or q[-1] >= 2
)


@given(canonical, st.integers(1, 50))
def test_construct_round_trip(q, d):
    check_quotients(q)
    tr = run_ea(*construct_input(q, d))
    assert tr.quo_list == tuple(q)
    assert tr.num_steps == len(q)
    assert tr.gcd == d


def test_worst_case_small():
    assert worst_case_pair(1) == (1, 1)
    assert worst_case_pair(2) == (3, 2)
    assert worst_case_pair(7) == (34, 21)


def test_worst_case_54():
    a, b = worst_case_pair(54)
    tr = run_ea(a, b)
    assert tr.num_steps == 54 and tr.gcd == 1
    assert (a, b) == (fib_number(55), fib_number(54)) == (225851433717, 139583862445)


def test_worst_case_matches_brute_force():
    best = brute_force_minima(1000)
    for n in range(1, 13):
        assert worst_case_pair(n) == best[n]
        if n >= 2:
            assert best[n] == (fib_number(n + 1), fib_number(n))


def test_step_count_lower_bound():
    for a, b, n in all_steps(1000):
        if 2 <= n <= 12:
            assert a >= fib_number(n + 1) and b >= fib_number(n)


def test_mod_inverse_examples():
    assert mod_inverse(935, 4449) == 1004
    for n in (2, 3, 17, 1000):
        assert mod_inverse(1, n) == 1
    assert mod_inverse(4, 9) == 7
    with pytest.raises(NotCoprimeError):
        mod_inverse(6, 9)
    for b, a in [(0, 9), (9, 9), (3, 1)]:
        with pytest.raises(DomainError):
            mod_inverse(b, a)


@given(st.integers(2, 10**9).flatmap(lambda a: st.tuples(st.integers(1, a - 1), st.just(a))))
def test_mod_inverse_property(case):
    b, a = case
    if gcd(a, b) == 1:
        u = mod_inverse(b, a)
        assert 1 <= u < a and (b * u) % a == 1
        assert u == pow(b, -1, a)
    else:
        with pytest.raises(NotCoprimeError):
            mod_inverse(b, a)
