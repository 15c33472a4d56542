"""Two-dimensional Costas permutations and the strict hypercube constructions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import gf
from .dotset import DotSet, is_costas
from .errors import ConstructionError, NotCostasError, NotPrimitiveError
from .numtheory import is_prime, perfect_power


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0, ..., n-1}, stored as the tuple of images."""

    map: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.map)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "map", images)

    @property
    def n(self) -> int:
        return len(self.map)

    def __len__(self) -> int:
        return len(self.map)

    def __getitem__(self, i: int) -> int:
        return self.map[i]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def as_dotset(self) -> DotSet:
        """The n x n array with dots at (i, map[i])."""
        n = self.n
        return DotSet((n, n), tuple((i, v) for i, v in enumerate(self.map)))

    def one_based(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self.map)


def is_costas_permutation(g: Permutation) -> bool:
    return is_costas(g.as_dotset())


def welch_w1(p: int, g: int, c: int = 0) -> Permutation:
    """Exponential Welch array: i -> g^(i-1+c) mod p for i = 1..p-1, stored 0-based."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"p={p} must be an odd prime")
    ctx = gf.FieldCtx.make(p, 1)
    if not 0 < g < p or not gf.is_primitive_root(ctx, (g,)):
        raise NotPrimitiveError(f"{g} is not a primitive root mod {p}")
    if not 0 <= c <= p - 2:
        raise ValueError(f"shift c must lie in 0..{p - 2}")
    return Permutation(tuple(pow(g, i + c, p) - 1 for i in range(p - 1)))


def field_for_order(q: int) -> gf.FieldCtx:
    """GF(q) with the default (lexicographically least) modulus."""
    pk = perfect_power(q) if q >= 2 else None
    if pk is None:
        raise ValueError(f"q={q} is not a prime power")
    return gf.FieldCtx.make(*pk)


def golomb_g2(q: int, alpha=None, beta=None) -> Permutation:
    """Golomb array of order q-2: alpha^i + beta^j = 1 with i, j in 1..q-2.

    ``alpha`` and ``beta`` may be field elements (coefficient tuples) or
    integer element indices; both default to the first primitive element.
    """
    ctx = field_for_order(q)
    if q < 4:
        raise ValueError("the Golomb construction needs q >= 4")
    first = None
    if alpha is None or beta is None:
        first = gf.find_primitive_root(ctx)
    a = ctx.elem(alpha) if alpha is not None else first
    b = ctx.elem(beta) if beta is not None else first
    for name, e in (("alpha", a), ("beta", b)):
        if not any(e) or not gf.is_primitive_root(ctx, e):
            raise NotPrimitiveError(f"{name}={gf.format_poly(e)} is not primitive in GF({q})")
    log_b = gf.discrete_log_table(ctx, b)
    one = ctx.one
    images = []
    x = a
    for _ in range(1, q - 1):
        j = log_b[gf.field_sub(ctx, one, x)]
        images.append(j - 1)
        x = gf.field_mul(ctx, x, a)
    perm = Permutation(tuple(images))
    if not is_costas_permutation(perm):
        raise ConstructionError(f"Golomb array for q={q} failed verification")
    return perm


def lifted_hypercube(g1: Permutation, rest: Sequence[Permutation] = ()) -> DotSet:
    """Dots (j, g1(j), g2(j), ...): a strict Costas hypercube when g1 is Costas."""
    n = g1.n
    if any(r.n != n for r in rest):
        raise ValueError("all permutations must share the same order")
    if not is_costas_permutation(g1):
        raise NotCostasError("the first permutation must be a Costas permutation")
    m = 2 + len(rest)
    dots = tuple((j, g1[j]) + tuple(r[j] for r in rest) for j in range(n))
    return DotSet((n,) * m, dots)


def toeplitz_hypercube(n: int, m: int) -> DotSet:
    """Rows of the n x m array whose column j is the j-fold cyclic down-shift
    of (0, ..., n-1)."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if n > m:
        raise ValueError(f"need n <= m, got n={n}, m={m}")
    dots = tuple(tuple((r - j) % n for j in range(m)) for r in range(n))
    return DotSet((n,) * m, dots)
