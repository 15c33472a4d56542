"""Dot sets, the Costas verifier, autocorrelation and structural classifiers.

A :class:`DotSet` is a finite set of integer points inside the box
``[0, N_1) x ... x [0, N_m)``.  It has the Costas property when every
difference vector between two distinct dots occurs for one pair only
(equivalently, every nonzero shift of the set overlaps it in at most one
dot).

Difference vectors are packed into signed integers with the balanced
mixed-radix weights ``w_j = prod_{l>j} (2 N_l - 1)``.  Packing is linear,
so ``code(a - b) == code(a) - code(b)``, and the sign of the packed value
is the sign of the first nonzero coordinate.  Taking ``abs`` therefore
selects the representative of ``{d, -d}`` whose first nonzero coordinate
is positive.
"""
from __future__ import annotations

import functools
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateDotError

Dot = tuple  # tuple[int, ...]

_PACK_LIMIT = 1 << 62


@dataclass(frozen=True, eq=False)
class DotSet:
    """Immutable set of dots with an explicit bounding shape.

    Dots keep their insertion order (useful when printing tables); equality
    and hashing ignore that order.
    """

    shape: tuple[int, ...]
    dots: tuple[Dot, ...] = ()
    array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        shape = tuple(int(n) for n in self.shape)
        if not shape:
            raise ValueError("a dot set needs at least one dimension")
        if any(n < 1 for n in shape):
            raise ValueError(f"side lengths must be >= 1, got {shape}")
        dim = len(shape)
        raw = tuple(self.dots)
        for d in raw:
            if len(d) != dim:
                raise ValueError(f"dot {tuple(d)} does not have {dim} coordinates")
        arr = np.array(raw, dtype=np.int64).reshape(len(raw), dim)
        inside = ((arr >= 0) & (arr < np.asarray(shape, dtype=np.int64))).all(axis=1)
        if not inside.all():
            bad = raw[int(np.argmin(inside))]
            raise ValueError(f"dot {tuple(bad)} lies outside shape {shape}")
        dots = tuple(map(tuple, arr.tolist()))
        if len(set(dots)) != len(dots):
            seen = set()
            for d in dots:
                if d in seen:
                    raise DuplicateDotError(f"duplicate dot {d}")
                seen.add(d)
        arr.flags.writeable = False
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "dots", dots)
        object.__setattr__(self, "array", arr)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], shape: Sequence[int] | None = None, one_based: bool = False) -> "DotSet":
        """Build from coordinate rows; the shape defaults to max + 1 per axis."""
        off = 1 if one_based else 0
        dots = [tuple(int(x) - off for x in r) for r in rows]
        if shape is None:
            if not dots:
                raise ValueError("cannot infer the shape of an empty dot set")
            shape = tuple(max(col) + 1 for col in zip(*dots))
        return cls(tuple(shape), tuple(dots))

    @property
    def dim(self) -> int:
        return len(self.shape)

    def __len__(self) -> int:
        return len(self.dots)

    def __iter__(self):
        return iter(self.dots)

    def __contains__(self, dot) -> bool:
        return tuple(dot) in self.dotset

    @functools.cached_property
    def dotset(self) -> frozenset:
        return frozenset(self.dots)

    def __eq__(self, other):
        if not isinstance(other, DotSet):
            return NotImplemented
        return self.shape == other.shape and self.dotset == other.dotset

    def __hash__(self):
        return hash((self.shape, self.dotset))

    def sorted(self) -> "DotSet":
        return DotSet(self.shape, tuple(sorted(self.dots)))

    def rows(self, one_based: bool = False) -> list[Dot]:
        off = 1 if one_based else 0
        return [tuple(x + off for x in d) for d in self.dots]

# ----------------------------------------------------------------------
# Packed difference codes
# ----------------------------------------------------------------------

def diff_weights(shape: Sequence[int]) -> tuple[int, ...] | None:
    """Balanced mixed-radix weights, or None when codes would overflow int64."""
    w = [1] * len(shape)
    for j in range(len(shape) - 2, -1, -1):
        w[j] = w[j + 1] * (2 * shape[j + 1] - 1)
    total = w[0] * (2 * shape[0] - 1)
    return tuple(w) if total < _PACK_LIMIT else None


@functools.lru_cache(maxsize=64)
def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu, ju = np.triu_indices(n, 1)
    iu.flags.writeable = False
    ju.flags.writeable = False
    return iu, ju


def _pair_codes(d: DotSet, w: tuple[int, ...]) -> np.ndarray:
    """Canonical (nonnegative) packed difference for every unordered pair."""
    codes = d.array @ np.asarray(w, dtype=np.int64)
    iu, ju = _pair_index(len(d))
    return np.abs(codes[iu] - codes[ju])


def canonical_diff(a: Sequence[int], b: Sequence[int]) -> Dot:
    """a - b, negated if needed so the first nonzero coordinate is positive."""
    d = tuple(x - y for x, y in zip(a, b))
    for x in d:
        if x:
            return d if x > 0 else tuple(-y for y in d)
    return d


def is_costas(d: DotSet) -> bool:
    """Fast yes/no Costas check (no collision listing)."""
    n = len(d)
    if n <= 2:
        return True
    w = diff_weights(d.shape)
    if w is None:
        seen = set()
        for a, b in itertools.combinations(d.dots, 2):
            k = canonical_diff(a, b)
            if k in seen:
                return False
            seen.add(k)
        return True
    return not _has_repeat(_pair_codes(d, w), d.shape, w)


def _has_repeat(codes: np.ndarray, shape: Sequence[int], w: tuple[int, ...]) -> bool:
    span = (w[0] * (2 * shape[0] - 1)) // 2 + 1
    if span <= max(1 << 22, 8 * codes.size):
        return int(np.bincount(codes).max()) > 1
    codes = np.sort(codes)
    return bool(np.any(codes[1:] == codes[:-1]))


# ----------------------------------------------------------------------
# Verification report
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Collision:
    diff: Dot
    pairs: tuple[tuple[Dot, Dot], ...]


@dataclass(frozen=True)
class VerifyReport:
    is_costas: bool
    n_dots: int
    n_pairs: int
    n_distinct: int
    collisions: tuple[Collision, ...] = ()

    @property
    def distinct_fraction(self) -> float:
        return self.n_distinct / self.n_pairs if self.n_pairs else 1.0

    def to_dict(self) -> dict:
        return {
            "is_costas": self.is_costas,
            "n_dots": self.n_dots,
            "n_pairs": self.n_pairs,
            "distinct_fraction": self.distinct_fraction,
            "collisions": [
                {"diff": list(c.diff), "pairs": [[list(a), list(b)] for a, b in c.pairs]}
                for c in self.collisions
            ],
        }


def verify_costas(d: DotSet) -> VerifyReport:
    """Check all unordered-pair differences for repeats and list the repeats."""
    n = len(d)
    n_pairs = n * (n - 1) // 2
    if n_pairs == 0:
        return VerifyReport(True, n, 0, 0)
    w = diff_weights(d.shape)
    if w is None:
        groups = defaultdict(list)
        for a, b in itertools.combinations(d.dots, 2):
            k = canonical_diff(a, b)
            groups[k].append(_oriented(a, b, k))
        collisions = tuple(Collision(k, tuple(v)) for k, v in sorted(groups.items()) if len(v) > 1)
        return VerifyReport(not collisions, n, n_pairs, len(groups), collisions)

    codes = _pair_codes(d, w)
    if not _has_repeat(codes, d.shape, w):
        return VerifyReport(True, n, n_pairs, n_pairs)
    uniq, inverse, counts = np.unique(codes, return_inverse=True, return_counts=True)
    collisions = []
    if uniq.size < n_pairs:
        iu, ju = _pair_index(n)
        dup = np.nonzero(counts[inverse] > 1)[0]
        groups = defaultdict(list)
        for idx in dup.tolist():
            a, b = d.dots[iu[idx]], d.dots[ju[idx]]
            k = canonical_diff(a, b)
            groups[k].append(_oriented(a, b, k))
        collisions = [Collision(k, tuple(v)) for k, v in sorted(groups.items())]
    return VerifyReport(not collisions, n, n_pairs, int(uniq.size), tuple(collisions))


def _oriented(a: Dot, b: Dot, k: Dot) -> tuple[Dot, Dot]:
    """Order a pair so that first - second equals the canonical diff k."""
    return (a, b) if tuple(x - y for x, y in zip(a, b)) == k else (b, a)


def autocorrelation(d: DotSet, k: Sequence[int]) -> int:
    """Number of dots i such that i + k is also a dot."""
    if len(k) != d.dim:
        raise ValueError(f"shift {tuple(k)} does not have {d.dim} coordinates")
    s = d.dotset
    return sum(1 for i in d.dots if tuple(x + y for x, y in zip(i, k)) in s)


def max_offpeak_autocorrelation(d: DotSet) -> int:
    """Largest autocorrelation over nonzero shifts (0 for < 2 dots).

    Only shifts realised as differences of two dots can score above zero,
    so these are the only ones evaluated.
    """
    shifts = {tuple(x - y for x, y in zip(a, b)) for a in d.dots for b in d.dots if a != b}
    return max((autocorrelation(d, k) for k in shifts), default=0)


# ----------------------------------------------------------------------
# Classification
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    """Structural flags; ``None`` means the notion does not apply."""

    permutation: bool | None
    strict: bool
    incomplete: bool | None
    left_injective: bool | None = None
    right_injective: bool | None = None
    left_surjective: bool | None = None
    right_surjective: bool | None = None

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def classify(d: DotSet) -> Classification:
    strict = all(len({dot[j] for dot in d.dots}) == len(d) for j in range(d.dim))
    if d.dim % 2:
        return Classification(permutation=None, strict=strict, incomplete=None)
    s = d.dim // 2
    left = [dot[:s] for dot in d.dots]
    right = [dot[s:] for dot in d.dots]
    left_inj = len(set(left)) == len(left)
    right_inj = len(set(right)) == len(right)
    left_sz = 1
    right_sz = 1
    for n in d.shape[:s]:
        left_sz *= n
    for n in d.shape[s:]:
        right_sz *= n
    left_sur = len(set(left)) == left_sz
    right_sur = len(set(right)) == right_sz
    equal_sides = len(set(d.shape)) == 1
    permutation = equal_sides and left_inj and right_inj and left_sur and right_sur
    return Classification(
        permutation=permutation,
        strict=strict,
        incomplete=left_inj and right_inj,
        left_injective=left_inj,
        right_injective=right_inj,
        left_surjective=left_sur,
        right_surjective=right_sur,
    )


def is_golomb_ruler(marks: Sequence[int]) -> bool:
    marks = [int(x) for x in marks]
    if any(b <= a for a, b in zip(marks, marks[1:])):
        raise ValueError("marks must be strictly increasing")
    diffs = [b - a for a, b in itertools.combinations(marks, 2)]
    return len(diffs) == len(set(diffs))


# ----------------------------------------------------------------------
# Transformations
# ----------------------------------------------------------------------

def permute_dimensions(d: DotSet, sigma: Sequence[int]) -> DotSet:
    """Axis j of the result is axis sigma[j] of the input."""
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(d.dim)):
        raise ValueError(f"{sigma} is not a permutation of 0..{d.dim - 1}")
    return DotSet(
        tuple(d.shape[s] for s in sigma),
        tuple(tuple(dot[s] for s in sigma) for dot in d.dots),
    )


def reflect(d: DotSet, axis: int) -> DotSet:
    n = d.shape[axis]
    return DotSet(d.shape, tuple(dot[:axis] + (n - 1 - dot[axis],) + dot[axis + 1:] for dot in d.dots))


def add_corner_dot(d: DotSet) -> DotSet:
    """Add the all-zeros dot.  The result is not re-verified."""
    origin = (0,) * d.dim
    if origin in d:
        raise DuplicateDotError("the origin is already a dot")
    return DotSet(d.shape, (origin,) + d.dots)


def add_dots(d: DotSet, dots: Iterable[Sequence[int]]) -> DotSet:
    return DotSet(d.shape, d.dots + tuple(tuple(x) for x in dots))


def remove_dots(d: DotSet, dots: Iterable[Sequence[int]]) -> DotSet:
    gone = {tuple(x) for x in dots}
    return DotSet(d.shape, tuple(x for x in d.dots if x not in gone))


def tighten(d: DotSet) -> DotSet:
    """Translate to touch 0 on every axis and shrink to the bounding box."""
    if not d.dots:
        raise ValueError("cannot tighten an empty dot set")
    lo = [min(col) for col in zip(*d.dots)]
    hi = [max(col) for col in zip(*d.dots)]
    return DotSet(
        tuple(h - l + 1 for l, h in zip(lo, hi)),
        tuple(tuple(x - l for x, l in zip(dot, lo)) for dot in d.dots),
    )


def collision_counts(report: VerifyReport) -> Counter:
    """How many colliding pairs each dot takes part in."""
    counts = Counter()
    for c in report.collisions:
        for a, b in c.pairs:
            counts[a] += 1
            counts[b] += 1
    return counts
