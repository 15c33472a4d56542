"""Which classical 2-D constructions can feed a 2m-dimensional cube of side n.

The order needed is n^m, reachable from

1. n^m + 1 = p      (exponential Welch, W1)
2. n^m + 2 = p^k    (Golomb G2; also W2 when k = 1)
3. n^m + 3 = p^k    (Golomb G3)
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable

from .errors import CapExceededError
from .numtheory import INT_CAP, is_prime, perfect_power

__all__ = ["FormResult", "Witness", "check_applicability", "scan_solutions", "perfect_power"]

FORM_OFFSETS = {1: 1, 2: 2, 3: 3}


@dataclass(frozen=True)
class FormResult:
    form: int
    value: int
    satisfied: bool
    p: int | None = None
    k: int | None = None
    constructions: tuple[str, ...] = ()


@dataclass(frozen=True)
class Witness:
    n: int
    m: int
    p: int
    k: int

    @property
    def form_value(self) -> int:
        return self.p ** self.k


def _power(n: int, m: int) -> int:
    if n < 2 or m < 1:
        raise ValueError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    # n^m + 3 must stay under the cap
    if m * (n.bit_length() - 1) >= 63:
        raise CapExceededError(f"{n}^{m} exceeds the 2**63 integer cap")
    x = n ** m
    if x + 3 >= INT_CAP:
        raise CapExceededError(f"{n}^{m} + 3 exceeds the 2**63 integer cap")
    return x


def _evaluate(form: int, base: int) -> FormResult:
    value = base + FORM_OFFSETS[form]
    if form == 1:
        if is_prime(value):
            return FormResult(1, value, True, value, 1, ("W1",))
        return FormResult(1, value, False)
    pk = perfect_power(value)
    if pk is None:
        return FormResult(form, value, False)
    p, k = pk
    if form == 2:
        names = ("G2", "W2") if k == 1 else ("G2",)
    else:
        names = ("G3",)
    return FormResult(form, value, True, p, k, names)


def check_applicability(n: int, m: int) -> list[FormResult]:
    base = _power(n, m)
    return [_evaluate(form, base) for form in (1, 2, 3)]


def scan_solutions(form: int, n_range: Iterable[int], m_range: Iterable[int]) -> list[Witness]:
    """All witnesses in the ranges, ordered by (n, m)."""
    if form not in FORM_OFFSETS:
        raise ValueError(f"form must be 1, 2 or 3, got {form}")
    ms = sorted(set(m_range))
    out = []
    for n in sorted(set(n_range)):
        for m in ms:
            r = _evaluate(form, _power(n, m))
            if r.satisfied:
                out.append(Witness(n, m, r.p, r.k))
    return out


def report_dict(n: int, m: int) -> dict:
    return {"n": n, "m": m, "forms": [asdict(r) for r in check_applicability(n, m)]}
