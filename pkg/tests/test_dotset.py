from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hypercostas import tables
from hypercostas.dotset import (
    DotSet, add_corner_dot, autocorrelation, canonical_diff, classify, is_costas, is_golomb_ruler,
    max_offpeak_autocorrelation, permute_dimensions, reflect, tighten, verify_costas,
)
from hypercostas.errors import DuplicateDotError


def naive_costas(dots):
    seen = set()
    for a, b in itertools.combinations(dots, 2):
        d = tuple(x - y for x, y in zip(a, b))
        if d in seen or tuple(-x for x in d) in seen:
            return False
        seen.add(d)
    return True


@st.composite
def dotsets(draw, max_dim=4, max_side=5, max_dots=12):
    dim = draw(st.integers(1, max_dim))
    shape = tuple(draw(st.lists(st.integers(1, max_side), min_size=dim, max_size=dim)))
    cells = list(itertools.product(*(range(n) for n in shape)))
    dots = draw(st.lists(st.sampled_from(cells), max_size=max_dots, unique=True))
    return DotSet(shape, tuple(dots))


@pytest.fixture(scope="module")
def table1():
    return tables.load_dotset("table1.tsv")


def test_construction_validates():
    with pytest.raises(ValueError):
        DotSet((3, 3), ((0, 3),))
    with pytest.raises(ValueError):
        DotSet((3, 3), ((0, 1, 2),))
    with pytest.raises(DuplicateDotError):
        DotSet((3, 3), ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        DotSet((), ())


def test_equality_ignores_order():
    a = DotSet((3, 3), ((0, 0), (1, 2)))
    b = DotSet((3, 3), ((1, 2), (0, 0)))
    assert a == b and hash(a) == hash(b)
    assert a != DotSet((4, 3), a.dots)


def test_table1(table1):
    rep = verify_costas(table1)
    assert rep.is_costas and rep.n_distinct == 36 and rep.n_pairs == 36
    assert max_offpeak_autocorrelation(table1) <= 1


def test_trivial_sets():
    assert verify_costas(DotSet((3,), ())).is_costas
    assert verify_costas(DotSet((3, 3), ((1, 1),))).is_costas


def test_diagonal_collision():
    d = DotSet((3, 3), ((0, 0), (1, 1), (2, 2)))
    rep = verify_costas(d)
    assert not rep.is_costas
    assert len(rep.collisions) == 1
    assert rep.collisions[0].diff == (1, 1)
    assert len(rep.collisions[0].pairs) == 2
    assert autocorrelation(d, (1, 1)) == 2
    assert autocorrelation(d, (0, 0)) == 3


def test_opposite_differences_collide():
    # (0,0)-(1,1) and (2,2)-(1,1) are negatives of one another
    d = DotSet((3, 3), ((0, 0), (1, 1), (2, 2)))
    assert canonical_diff((0, 0), (1, 1)) == canonical_diff((2, 2), (1, 1))
    assert not is_costas(d)


@given(dotsets())
def test_fast_check_matches_naive(d):
    assert is_costas(d) == naive_costas(d.dots)
    rep = verify_costas(d)
    assert rep.is_costas == is_costas(d)
    assert rep.is_costas == (not rep.collisions) == (rep.distinct_fraction == 1.0)


@given(dotsets(max_dim=3, max_side=4, max_dots=8))
def test_autocorrelation_oracle(d):
    assert verify_costas(d).is_costas == (max_offpeak_autocorrelation(d) <= 1)


@given(dotsets(), st.data())
def test_costas_invariant_under_symmetries(d, data):
    base = is_costas(d)
    sigma = data.draw(st.permutations(range(d.dim)))
    assert is_costas(permute_dimensions(d, sigma)) == base
    axis = data.draw(st.integers(0, d.dim - 1))
    assert is_costas(reflect(d, axis)) == base
    if len(d):
        assert is_costas(tighten(d)) == base


def test_large_shape_falls_back_to_tuples():
    shape = (10 ** 6,) * 4
    d = DotSet(shape, ((0, 0, 0, 0), (1, 5, 9, 2), (999_999, 3, 4, 5)))
    assert is_costas(d) == naive_costas(d.dots)
    d2 = DotSet(shape, ((0, 0, 0, 0), (1, 1, 1, 1), (2, 2, 2, 2)))
    assert not is_costas(d2)
    assert not verify_costas(d2).is_costas


def test_classify(table1):
    c = classify(table1)
    assert c.strict is False
    # the printed right half repeats (1,2), (2,3), (3,1)
    assert c.left_surjective and not c.right_injective
    assert c.permutation is False
    odd = tables.load_dotset("table5_cube.tsv")
    assert classify(odd).permutation is None


def test_classify_permutation_hypercube():
    from hypercostas.reshape import RadixScheme, reshape_even
    perm = tables.load_permutation("table3_perm.tsv")
    c = classify(reshape_even(perm, RadixScheme((5, 5))))
    assert c.permutation and c.incomplete


def test_golomb_ruler():
    assert is_golomb_ruler((1, 2, 5, 11))
    assert not is_golomb_ruler((1, 2, 3))
    assert is_golomb_ruler((4,))
    with pytest.raises(ValueError):
        is_golomb_ruler((3, 1))


def test_permute_dimensions():
    d = DotSet((2, 3), ((0, 2), (1, 0)))
    assert permute_dimensions(d, (0, 1)) == d
    t = permute_dimensions(d, (1, 0))
    assert t == DotSet((3, 2), ((2, 0), (0, 1)))
    with pytest.raises(ValueError):
        permute_dimensions(d, (0, 0))


def test_corner_dot():
    cube = tables.load_dotset("table6_cube.tsv")
    assert is_costas(add_corner_dot(cube))
    assert is_costas(add_corner_dot(DotSet((2, 2), ())))
    with pytest.raises(DuplicateDotError):
        add_corner_dot(DotSet((2, 2), ((0, 0),)))


def test_tighten():
    d = DotSet((5, 5), ((1, 1), (2, 3)))
    t = tighten(d)
    assert t == DotSet((2, 3), ((0, 0), (1, 2)))
    assert tighten(t) == t
    with pytest.raises(ValueError):
        tighten(DotSet((2, 2), ()))


def test_array_view_is_readonly(table1):
    arr = table1.array
    assert arr.shape == (9, 4)
    with pytest.raises(ValueError):
        arr[0, 0] = 5
    assert np.array_equal(arr, np.array(table1.dots))
