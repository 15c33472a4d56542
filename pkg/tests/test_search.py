from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from hypercostas.construct2d import welch_w1
from hypercostas.dotset import DotSet, is_costas, is_golomb_ruler
from hypercostas.errors import NotPrimitiveError
from hypercostas.search import (
    Packer, SearchConfig, SieveSpec, blank_lines, greedy_pack, overlap, overlaps, restart_rng, slice_candidates,
)


def test_packer_basic():
    pk = Packer((3, 3))
    assert pk.try_add((0, 0))
    assert pk.try_add((1, 1))
    assert not pk.try_add((2, 2))
    assert not pk.try_add((0, 0))
    assert pk.try_add((0, 2))
    assert is_costas(pk.dotset())
    with pytest.raises(ValueError):
        pk.try_add((3, 0))


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), max_size=30))
def test_packer_agrees_with_verifier(points):
    pk = Packer((4, 4, 4))
    for pt in points:
        if pt in pk.dots:
            assert not pk.try_add(pt)
            continue
        expected = is_costas(DotSet((4, 4, 4), tuple(pk.dots) + (pt,)))
        assert pk.try_add(pt) == expected


def test_brute_force_2x2():
    cells = list(itertools.product(range(2), repeat=2))
    best = max(len(s) for r in range(5) for s in itertools.combinations(cells, r)
               if is_costas(DotSet((2, 2), s)))
    assert best == 3
    for seed in range(10):
        assert len(greedy_pack(SearchConfig((2, 2), 5, seed)).best) == 3


def test_one_dimensional_is_ruler():
    res = greedy_pack(SearchConfig((20,), 50, 0))
    marks = sorted(d[0] for d in res.best)
    assert is_golomb_ruler(marks)


def test_deterministic_and_worker_independent():
    cfg = SearchConfig((4, 4, 4), 60, 5)
    a = greedy_pack(cfg)
    b = greedy_pack(cfg)
    c = greedy_pack(cfg, workers=3)
    assert a.best.dots == b.best.dots == c.best.dots
    assert a.histogram == c.histogram and a.best_restart == c.best_restart
    assert sum(a.histogram.values()) == 60
    assert len(a.best) == max(a.histogram)
    assert is_costas(a.best)


def test_restart_streams_differ():
    assert restart_rng(0, 0).permutation(20).tolist() != restart_rng(0, 1).permutation(20).tolist()
    assert restart_rng(3, 4).permutation(20).tolist() == restart_rng(3, 4).permutation(20).tolist()


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig((0, 3))
    with pytest.raises(ValueError):
        SearchConfig((3, 3), restarts=0)


def test_sieve_spec():
    s = SieveSpec.parse("golomb:v1:q=7,a=3,x=1")
    assert (s.variant, s.q, s.params) == (1, 7, {"a": 3, "x": 1})
    assert SieveSpec.parse(str(s)) == s
    with pytest.raises(ValueError):
        SieveSpec.parse("golomb:v1:a=3")
    with pytest.raises(ValueError):
        SieveSpec.parse("welch:v1:q=7")


def test_variant3_count():
    pts = slice_candidates(3, 5, a=2)
    assert len(pts) == 16
    assert len({(i, j) for i, j, _ in pts}) == 16
    for i, j, k in pts:
        assert pow(2, i + j + 2, 5) == k + 1


def test_variant1_symmetric():
    pts = set(slice_candidates(1, 7))
    for pt in pts:
        for perm in itertools.permutations(pt):
            assert perm in pts
    # each solution really satisfies the equation in GF(7)
    for i, j, k in pts:
        assert (pow(3, i + 1, 7) + pow(3, j + 1, 7) + pow(3, k + 1, 7)) % 7 == 0


def test_variant1_higher_dims_and_prime_powers():
    pts = slice_candidates(1, 9, dims=4)
    assert all(len(p) == 4 for p in pts) and pts
    assert len(set(pts)) == len(pts)


@pytest.mark.parametrize("variant,q", [(1, 5), (1, 7), (2, 5), (2, 7), (3, 5), (3, 7), (4, 5), (4, 7)])
def test_slices_are_not_costas(variant, q):
    pts = slice_candidates(variant, q)
    assert not is_costas(DotSet((q - 1,) * 3, tuple(pts)))


def test_non_primitive_rejected():
    with pytest.raises(NotPrimitiveError):
        slice_candidates(3, 7, a=2)
    with pytest.raises(NotPrimitiveError):
        slice_candidates(1, 7, a=2)
    with pytest.raises(ValueError):
        slice_candidates(2, 9)


def test_sieve_search_uses_subset():
    cfg = SearchConfig((5, 5, 5), 30, 0, SieveSpec(1, 7))
    res = greedy_pack(cfg)
    allowed = {pt for pt in slice_candidates(1, 7) if max(pt) < 5}
    assert set(res.best.dots) <= allowed
    assert res.n_candidates == len(allowed)


def test_overlap_and_blank_lines():
    a = welch_w1(7, 3).as_dotset()
    assert overlap(a, a) == 6
    assert overlap(a, DotSet((6, 6), ())) == 0
    with pytest.raises(ValueError):
        overlap(a, DotSet((5, 5), ()))
    assert blank_lines(a) == ([], [])
    assert blank_lines(DotSet((3, 3), ((1, 1),))) == ([0, 2], [0, 2])
    with pytest.raises(ValueError):
        blank_lines(DotSet((3,), ()))
    assert overlaps(a, [welch_w1(7, 3), welch_w1(7, 5)])[0] == 6
