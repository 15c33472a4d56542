from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from hypercostas import gf, tables
from hypercostas.construct2d import Permutation, golomb_g2, welch_w1
from hypercostas.dotset import DotSet, classify, is_costas, verify_costas
from hypercostas.errors import NotCostasError
from hypercostas.numtheory import ordered_factorizations
from hypercostas.reshape import (
    RadixScheme, collapse, embed_incomplete, expand, extend_dimension, repair, reshape_even, reshape_odd,
)


def test_expand_collapse_examples():
    s33 = RadixScheme((3, 3))
    assert expand(7, s33) == (2, 1)
    assert expand(10, RadixScheme((5, 5))) == (2, 0)
    assert collapse((2, 1), s33) == 7
    assert collapse((-1, 2), s33) == -1
    with pytest.raises(ValueError):
        expand(9, s33)
    with pytest.raises(ValueError):
        collapse((3, 0), s33)


@given(st.lists(st.integers(2, 6), min_size=1, max_size=4), st.data())
def test_round_trip(radices, data):
    s = RadixScheme(tuple(radices))
    i = data.draw(st.integers(0, s.order - 1))
    assert collapse(expand(i, s), s) == i
    v = tuple(data.draw(st.integers(0, r - 1)) for r in radices)
    assert expand(collapse(v, s), s) == v


def test_scheme_parse():
    assert RadixScheme.parse("5x5").radices == (5, 5)
    assert str(RadixScheme((2, 4))) == "2x4"
    with pytest.raises(ValueError):
        RadixScheme.parse("5xq")
    with pytest.raises(ValueError):
        RadixScheme((1, 5))


def test_identity_reshape():
    g = welch_w1(7, 3)
    assert reshape_even(g, RadixScheme((6,))) == g.as_dotset()


def test_non_costas_rejected():
    with pytest.raises(NotCostasError):
        reshape_even(Permutation.identity(4), RadixScheme((2, 2)))
    # unsafe path still runs
    assert len(reshape_even(Permutation.identity(4), RadixScheme((2, 2)), check=False)) == 4


def test_table3():
    perm = tables.load_permutation("table3_perm.tsv")
    cube = reshape_even(perm, RadixScheme((5, 5)))
    assert tables.columns(cube.dots, tables.T3_COLUMNS) == tables.load_dotset("table3_cube.tsv").rows()
    assert verify_costas(cube).is_costas and classify(cube).permutation


def test_reshape_sweep():
    perms = []
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61):
        (g,) = gf.find_primitive_root(gf.FieldCtx.make(p, 1))
        perms.append(welch_w1(p, g))
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64):
        perms.append(golomb_g2(q))
    for g in perms:
        for radices in ordered_factorizations(g.n):
            out = reshape_even(g, RadixScheme(radices))
            assert is_costas(out), (g.n, radices)


def test_costas_square_input():
    sq = embed_incomplete(welch_w1(5, 2), 6)
    out = reshape_even(sq, RadixScheme((2, 3)))
    assert is_costas(out)
    assert classify(out).incomplete and not classify(out).permutation


def test_embed():
    g = welch_w1(5, 2)
    assert embed_incomplete(g, 4) == g.as_dotset()
    with pytest.raises(ValueError):
        embed_incomplete(g, 3)


def test_reshape_odd_table4():
    rep = reshape_odd(tables.load_permutation("table4_perm.tsv"), 9, 1)
    assert tables.columns(rep.intermediate.dots, tables.T4_RECT_COLUMNS) == tables.load_dotset("table4_rect.tsv").rows()
    assert tables.columns(rep.raw.dots, tables.T4_CUBE_COLUMNS) == tables.load_dotset("table4_cube.tsv").rows()
    assert is_costas(rep.result)
    assert set(rep.removed).isdisjoint(rep.result.dots)
    assert len(rep.result) + len(rep.removed) == 27


def test_reshape_odd_errors():
    g = golomb_g2(29)
    with pytest.raises(ValueError):
        reshape_odd(g, 8, 1)
    with pytest.raises(ValueError):
        reshape_odd(g, 4, 2)


def test_repair_diagonal():
    d = DotSet((3, 3), ((0, 0), (1, 1), (2, 2)))
    fixed, removed = repair(d)
    assert removed == [(1, 1)]
    assert is_costas(fixed)


def test_extend_dimension():
    d = tables.load_dotset("table1.tsv")
    assert is_costas(extend_dimension(d, values=[0] * len(d)))
    for seed in range(5):
        e = extend_dimension(d, seed=seed)
        assert e.dim == 5 and is_costas(e)
    assert extend_dimension(d, seed=3) == extend_dimension(d, seed=3)
    with pytest.raises(ValueError):
        extend_dimension(d, values=[3] * len(d))
