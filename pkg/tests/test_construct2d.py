from __future__ import annotations

import pytest

from hypercostas import gf
from hypercostas.construct2d import (
    Permutation, field_for_order, golomb_g2, is_costas_permutation, lifted_hypercube,
    toeplitz_hypercube, welch_w1,
)
from hypercostas.dotset import classify, verify_costas
from hypercostas.errors import NotCostasError, NotPrimitiveError
from hypercostas.numtheory import is_prime, perfect_power


def prime_powers(limit):
    return [q for q in range(4, limit + 1) if perfect_power(q)]


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    g = Permutation((2, 0, 1))
    assert g.one_based() == (3, 1, 2)
    assert g.as_dotset().dots == ((0, 2), (1, 0), (2, 1))


def test_welch_examples():
    # f(i) = g^(i-1+c): powers 1,2,4,3 of 2 mod 5 for c=0, then 2,4,3,1 for c=1
    assert welch_w1(5, 2, 0).map == (0, 1, 3, 2)
    assert welch_w1(5, 2, 1).map == (1, 3, 2, 0)
    assert welch_w1(3, 2, 0).map == (0, 1)
    assert welch_w1(3, 2, 1).map == (1, 0)
    with pytest.raises(NotPrimitiveError):
        welch_w1(7, 2)  # 2 has order 3 mod 7
    with pytest.raises(ValueError):
        welch_w1(9, 2)


def test_welch_all_small_primes():
    for p in range(3, 200):
        if not is_prime(p):
            continue
        ctx = gf.FieldCtx.make(p, 1)
        for (g,) in gf.primitive_roots(ctx):
            assert is_costas_permutation(welch_w1(p, g)), (p, g)


def test_golomb_q7():
    g = golomb_g2(7, 3, 3)
    assert g.n == 5
    # 3^i + 3^j = 1 in GF(7), checked by hand for every row
    for i, j in enumerate(g.map, 1):
        assert (pow(3, i, 7) + pow(3, j + 1, 7)) % 7 == 1
    assert is_costas_permutation(g)


def test_golomb_orders_for_reshape_examples():
    assert golomb_g2(27).n == 25
    assert golomb_g2(29).n == 27


def test_golomb_all_prime_powers():
    for q in prime_powers(64):
        ctx = field_for_order(q)
        roots = list(gf.primitive_roots(ctx))
        for alpha in roots[:3]:
            for beta in roots[:3]:
                assert is_costas_permutation(golomb_g2(q, alpha, beta)), (q, alpha, beta)


def test_golomb_rejects_non_primitive():
    with pytest.raises(NotPrimitiveError):
        golomb_g2(7, 2, 3)
    with pytest.raises(ValueError):
        golomb_g2(10)


def test_lifted():
    g1 = welch_w1(5, 2)
    d = lifted_hypercube(g1)
    assert d == g1.as_dotset()
    d3 = lifted_hypercube(g1, [Permutation.identity(4)])
    assert d3.shape == (4, 4, 4) and len(d3) == 4
    assert verify_costas(d3).is_costas
    assert classify(d3).strict
    with pytest.raises(NotCostasError):
        lifted_hypercube(Permutation.identity(4))
    with pytest.raises(ValueError):
        lifted_hypercube(g1, [Permutation.identity(5)])


def test_toeplitz_table():
    d = toeplitz_hypercube(4, 5)
    assert d.rows(one_based=True) == [(1, 4, 3, 2, 1), (2, 1, 4, 3, 2), (3, 2, 1, 4, 3), (4, 3, 2, 1, 4)]
    assert len(toeplitz_hypercube(1, 3)) == 1
    with pytest.raises(ValueError):
        toeplitz_hypercube(5, 4)


def test_toeplitz_sweep():
    for m in range(2, 11):
        for n in range(2, m + 1):
            d = toeplitz_hypercube(n, m)
            assert verify_costas(d).is_costas and classify(d).strict, (n, m)
