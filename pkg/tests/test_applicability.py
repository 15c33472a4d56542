from __future__ import annotations

import pytest

from hypercostas.applicability import check_applicability, report_dict, scan_solutions
from hypercostas.errors import CapExceededError
from hypercostas.numtheory import is_prime, perfect_power


def brute_prime_power(x):
    for p in range(2, x + 1):
        if x % p == 0:
            k, y = 0, x
            while y % p == 0:
                y //= p
                k += 1
            return (p, k) if y == 1 else None
    return None


def test_examples():
    f1, f2, f3 = check_applicability(4, 1)
    assert f1.satisfied and f1.value == 5 and f1.constructions == ("W1",)
    assert check_applicability(4, 2)[0].value == 17
    r = check_applicability(5, 2)[1]
    assert r.satisfied and (r.p, r.k) == (3, 3) and r.constructions == ("G2",)
    r = check_applicability(9, 2)[1]
    assert (r.p, r.k) == (83, 1) and "W2" in r.constructions
    r = check_applicability(2, 4)[2]
    assert r.satisfied and (r.p, r.k) == (19, 1)
    assert report_dict(5, 2)["forms"][1]["satisfied"]


def test_form1_m4():
    assert [w.n for w in scan_solutions(1, range(2, 21), [4])] == [2, 4, 6, 16, 20]


def test_form1_empty_with_odd_divisor():
    ms = [m for m in range(1, 13) if any(m % d == 0 for d in range(3, m + 1, 2))]
    # n^m + 1 has the factor n^(m/d) + 1; only the trivial n = 1 could escape
    assert scan_solutions(1, range(2, 21), ms) == []


@pytest.mark.parametrize("form", [1, 2, 3])
def test_scan_matches_brute_force(form):
    wits = {(w.n, w.m): (w.p, w.k) for w in scan_solutions(form, range(2, 30), range(1, 5))}
    for n in range(2, 30):
        for m in range(1, 5):
            x = n ** m + form
            pk = brute_prime_power(x)
            if form == 1:
                expect = (x, 1) if is_prime(x) else None
            else:
                expect = pk
            assert wits.get((n, m)) == expect, (n, m)


def test_parity_filters():
    # odd characteristic forces n odd for form 2 and n even for form 3;
    # the only other witnesses are powers of two
    two = {2: [], 3: []}
    for form, parity in ((2, 1), (3, 0)):
        for w in scan_solutions(form, range(2, 60), range(1, 6)):
            if w.p == 2:
                two[form].append((w.n, w.m))
            else:
                assert w.n % 2 == parity
    assert two[2] == [(2, 1), (6, 1), (14, 1), (30, 1)]
    assert two[3] == [(5, 1), (5, 3), (13, 1), (29, 1)]


def test_spot_witnesses():
    assert perfect_power(83) == (83, 1)
    assert check_applicability(2, 6)[2].value == 67
    assert check_applicability(10, 2)[2].p == 103
    assert check_applicability(14, 2)[2].p == 199


def test_cap():
    with pytest.raises(CapExceededError):
        check_applicability(2, 63)
    with pytest.raises(CapExceededError):
        scan_solutions(1, [10], [19])
    with pytest.raises(ValueError):
        check_applicability(1, 3)
    with pytest.raises(ValueError):
        scan_solutions(4, [2], [2])
