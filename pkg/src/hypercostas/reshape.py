"""Mixed-radix reshaping of Costas permutations and squares.

A permutation (or Costas square) of order n = n_1 * ... * n_m becomes a
2m-dimensional dot set by writing both coordinates of every dot in mixed
radix.  The odd-dimensional variant folds the two leading digits into one
coordinate and may then need a few dots removed.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, prod
from typing import Sequence

import numpy as np

from .construct2d import Permutation
from .dotset import DotSet, collision_counts, is_costas, verify_costas
from .errors import NotCostasError


@dataclass(frozen=True)
class RadixScheme:
    radices: tuple[int, ...]

    def __post_init__(self):
        radices = tuple(int(r) for r in self.radices)
        if not radices:
            raise ValueError("a radix scheme needs at least one radix")
        if any(r < 2 for r in radices):
            raise ValueError(f"every radix must be >= 2, got {radices}")
        object.__setattr__(self, "radices", radices)

    @property
    def order(self) -> int:
        return prod(self.radices)

    @property
    def m(self) -> int:
        return len(self.radices)

    @classmethod
    def parse(cls, text: str) -> "RadixScheme":
        try:
            return cls(tuple(int(t) for t in text.lower().split("x")))
        except ValueError:
            raise ValueError(f"cannot parse radix scheme {text!r}; expected e.g. '5x5'") from None

    def __str__(self):
        return "x".join(map(str, self.radices))


def expand(i: int, scheme: RadixScheme) -> tuple[int, ...]:
    """Digits of i, most significant first."""
    if not 0 <= i < scheme.order:
        raise ValueError(f"{i} is outside 0..{scheme.order - 1}")
    digits = []
    for r in reversed(scheme.radices):
        i, v = divmod(i, r)
        digits.append(v)
    return tuple(reversed(digits))


def collapse(v: Sequence[int], scheme: RadixScheme) -> int:
    """Mixed-radix value of a digit vector; digits may be negative as long
    as |v_j| < n_j."""
    if len(v) != scheme.m:
        raise ValueError(f"expected {scheme.m} digits, got {len(v)}")
    x = 0
    for d, r in zip(v, scheme.radices):
        if abs(d) >= r:
            raise ValueError(f"digit {d} out of range for radix {r}")
        x = x * r + d
    return x


def _as_square(g) -> DotSet:
    if isinstance(g, Permutation):
        return g.as_dotset()
    if isinstance(g, DotSet):
        if g.dim != 2 or g.shape[0] != g.shape[1]:
            raise ValueError(f"expected a square 2-D dot set, got shape {g.shape}")
        return g
    return Permutation(tuple(g)).as_dotset()


def reshape_even(g, scheme: RadixScheme, check: bool = True) -> DotSet:
    """Dots (V(x), V(y)) for each input dot (x, y)."""
    sq = _as_square(g)
    if sq.shape[0] != scheme.order:
        raise ValueError(f"input side {sq.shape[0]} does not match radix order {scheme.order}")
    if check and not is_costas(sq):
        raise NotCostasError("reshaping requires a Costas input")
    dots = tuple(expand(x, scheme) + expand(y, scheme) for x, y in sq.dots)
    return DotSet(scheme.radices * 2, dots)


@dataclass(frozen=True)
class HeuristicReport:
    result: DotSet
    removed: tuple[tuple[int, ...], ...]
    pre_repair_fraction: float
    intermediate: DotSet
    raw: DotSet

    @property
    def removed_fraction(self) -> float:
        return len(self.removed) / len(self.raw) if len(self.raw) else 0.0


def repair(d: DotSet) -> tuple[DotSet, list[tuple[int, ...]]]:
    """Greedily delete the dot in most colliding pairs until Costas holds.

    Ties go to the lexicographically smallest dot.
    """
    removed = []
    report = verify_costas(d)
    while not report.is_costas:
        counts = collision_counts(report)
        top = max(counts.values())
        victim = min(dot for dot, c in counts.items() if c == top)
        removed.append(victim)
        d = DotSet(d.shape, tuple(x for x in d.dots if x != victim))
        report = verify_costas(d)
    return d, removed


def reshape_odd(g, n: int, m: int, check: bool = True) -> HeuristicReport:
    """Fold to 2m+1 dimensions of side n; requires n to be a perfect square
    and the input order to be n^m * sqrt(n).

    The folded coordinate sqrt(n) * v0(y) + v0(x) comes first, followed by
    the remaining digits of x and then of y.
    """
    s = isqrt(n)
    if n < 1 or s * s != n:
        raise ValueError(f"n={n} is not a perfect square")
    if s < 2:
        raise ValueError("n must be at least 4")
    if m < 1:
        raise ValueError("m must be >= 1")
    sq = _as_square(g)
    order = n ** m * s
    if sq.shape[0] != order:
        raise ValueError(f"input order {sq.shape[0]} != n^m * sqrt(n) = {order}")
    scheme = RadixScheme((s,) + (n,) * m)
    intermediate = reshape_even(sq, scheme, check=check)
    dots = tuple((s * d[m + 1] + d[0],) + d[1:m + 1] + d[m + 2:] for d in intermediate.dots)
    raw = DotSet((n,) * (2 * m + 1), dots)
    pre = verify_costas(raw)
    result, removed = repair(raw) if not pre.is_costas else (raw, [])
    return HeuristicReport(result, tuple(removed), pre.distinct_fraction, intermediate, raw)


def embed_incomplete(g, n: int) -> DotSet:
    """Pad an order-n' array with blank rows and columns to side n."""
    sq = _as_square(g)
    if n < sq.shape[0]:
        raise ValueError(f"target side {n} is smaller than the input order {sq.shape[0]}")
    return DotSet((n, n), sq.dots)


def extend_dimension(d: DotSet, n: int | None = None, values: Sequence[int] | None = None,
                     seed: int | None = None, check: bool = True) -> DotSet:
    """Append one coordinate per dot (given, or drawn uniformly from 0..n-1).

    Only the first 2s coordinates are needed for distinct differences, so
    the result is Costas whatever the new values are.
    """
    if d.dim % 2:
        raise ValueError("extension starts from an even-dimensional dot set")
    if n is None:
        n = max(d.shape)
    if check and not is_costas(d):
        raise NotCostasError("input must be a Costas hypercube")
    if values is None:
        rng = np.random.Generator(np.random.PCG64(seed))
        values = rng.integers(0, n, size=len(d)).tolist()
    values = [int(v) for v in values]
    if len(values) != len(d):
        raise ValueError(f"need {len(d)} values, got {len(values)}")
    if any(not 0 <= v < n for v in values):
        raise ValueError(f"new coordinate values must lie in 0..{n - 1}")
    return DotSet(d.shape + (n,), tuple(dot + (v,) for dot, v in zip(d.dots, values)))
