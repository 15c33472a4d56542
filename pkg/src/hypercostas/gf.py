"""Arithmetic in GF(p) and GF(p^m).

Field elements are plain tuples of length m over {0, ..., p-1}, most
significant coefficient first, so ``(1, 0, 2)`` is x^2 + 2.  Polynomials
(moduli) are coefficient tuples of length deg+1 in the same order, so
x^3 + 2x + 1 is ``(1, 0, 2, 1)``.

Elements also have an integer index: the base-p number whose digits are
the coefficients, again most significant first.  Enumeration "in
lexicographic order" means increasing index.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import CapExceededError, NotPrimitiveError, SingularMatrixError
from .numtheory import is_prime, prime_factors

FieldElem = tuple  # tuple[int, ...] of length m
Matrix = tuple  # tuple of row tuples

DEFAULT_FIELD_CAP = 1 << 20


# ----------------------------------------------------------------------
# Polynomials over GF(p), most-significant coefficient first
# ----------------------------------------------------------------------

def _strip(a: list[int]) -> list[int]:
    i = 0
    while i < len(a) - 1 and a[i] == 0:
        i += 1
    return a[i:]


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    b = _strip([x % p for x in b])
    if b == [0]:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv_lead = pow(b[0], -1, p)
    db = len(b) - 1
    a = _strip(a)
    while len(a) - 1 >= db and a != [0]:
        factor = a[0] * inv_lead % p
        for j in range(len(b)):
            a[j] = (a[j] - factor * b[j]) % p
        a = _strip(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod(prod, mod, p)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = [0] * (n - len(a)) + list(a)
    b = [0] * (n - len(b)) + list(b)
    return _strip([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _strip([x % p for x in a]), _strip([x % p for x in b])
    while b != [0]:
        a, b = b, _poly_mod(a, b, p)
    inv = pow(a[0], -1, p)
    return [x * inv % p for x in a]


def _poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def is_irreducible(p: int, poly: Sequence[int]) -> bool:
    """Ben-Or test: f of degree m is irreducible iff gcd(f, x^(p^i) - x) = 1
    for every i <= m/2."""
    f = _strip([c % p for c in poly])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    inv = pow(f[0], -1, p)
    f = [c * inv % p for c in f]
    xp = [1, 0]
    for _ in range(m // 2):
        xp = _poly_powmod(xp, p, f, p)
        if len(_poly_gcd(f, _poly_sub(xp, [1, 0], p), p)) > 1:
            return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible polynomial of degree m."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    for tail in itertools.product(range(p), repeat=m):
        poly = (1,) + tail
        if is_irreducible(p, poly):
            return poly
    raise AssertionError("unreachable: irreducible polynomials exist for every degree")


# ----------------------------------------------------------------------
# Field context
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FieldCtx:
    """GF(p^m) defined by a monic irreducible modulus of degree m."""

    p: int
    m: int
    modulus: tuple[int, ...]
    cap: int = field(default=DEFAULT_FIELD_CAP, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.p ** self.m > self.cap:
            raise CapExceededError(f"q={self.p}^{self.m} exceeds the field cap {self.cap}")
        mod = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != self.m + 1 or mod[0] != 1:
            raise ValueError(f"modulus {mod} is not monic of degree {self.m}")
        if any(not 0 <= c < self.p for c in mod):
            raise ValueError(f"modulus coefficients must lie in 0..{self.p - 1}")
        if not is_irreducible(self.p, mod):
            raise ValueError(f"modulus {format_poly(mod)} is reducible over GF({self.p})")

    @classmethod
    def make(cls, p: int, m: int, modulus: Sequence[int] | None = None, cap: int = DEFAULT_FIELD_CAP) -> "FieldCtx":
        if modulus is None:
            if p ** m > cap:
                raise CapExceededError(f"q={p}^{m} exceeds the field cap {cap}")
            modulus = find_irreducible(p, m)
        return cls(p, m, tuple(modulus), cap)

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def zero(self) -> FieldElem:
        return (0,) * self.m

    @property
    def one(self) -> FieldElem:
        return (0,) * (self.m - 1) + (1,)

    def elem(self, value) -> FieldElem:
        """Coerce an integer index or a coefficient sequence to an element."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"element index {value} out of range for q={self.q}")
            digits = []
            for _ in range(self.m):
                value, r = divmod(value, self.p)
                digits.append(r)
            return tuple(reversed(digits))
        e = tuple(int(c) for c in value)
        if len(e) != self.m:
            raise ValueError(f"element {e} must have exactly {self.m} coefficients")
        if any(not 0 <= c < self.p for c in e):
            raise ValueError(f"element {e} has coefficients outside 0..{self.p - 1}")
        return e

    def index(self, a: FieldElem) -> int:
        v = 0
        for c in a:
            v = v * self.p + c
        return v

    def elements(self) -> Iterator[FieldElem]:
        """All elements in lexicographic order, zero first."""
        return itertools.product(range(self.p), repeat=self.m)


def field_add(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    p = ctx.p
    return tuple((x + y) % p for x, y in zip(a, b))


def field_sub(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    p = ctx.p
    return tuple((x - y) % p for x, y in zip(a, b))


def field_mul(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    p, m = ctx.p, ctx.m
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    tail = ctx.modulus[1:]
    # x^m = -(tail); fold every coefficient of degree >= m downwards
    for k in range(m - 1):
        lead = prod[k] % p
        if lead:
            for j, t in enumerate(tail):
                prod[k + 1 + j] -= lead * t
    return tuple(v % p for v in prod[m - 1:])


def field_pow(ctx: FieldCtx, a: FieldElem, e: int) -> FieldElem:
    if e < 0:
        a = field_inv(ctx, a)
        e = -e
    result = ctx.one
    while e:
        if e & 1:
            result = field_mul(ctx, result, a)
        a = field_mul(ctx, a, a)
        e >>= 1
    return result


def field_inv(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    if not any(a):
        raise ZeroDivisionError("zero has no inverse")
    return field_pow(ctx, a, ctx.q - 2)


def is_primitive_root(ctx: FieldCtx, g: FieldElem) -> bool:
    """True iff g has multiplicative order q - 1."""
    g = ctx.elem(g)
    if not any(g):
        raise ValueError("zero is never a primitive root")
    n = ctx.q - 1
    if n == 1:
        return g == ctx.one
    one = ctx.one
    return all(field_pow(ctx, g, n // r) != one for r in prime_factors(n))


def primitive_roots(ctx: FieldCtx) -> Iterator[FieldElem]:
    """Primitive elements in lexicographic order."""
    for e in ctx.elements():
        if any(e) and is_primitive_root(ctx, e):
            yield e


def find_primitive_root(ctx: FieldCtx) -> FieldElem:
    return next(primitive_roots(ctx))


def powers_of(ctx: FieldCtx, g: FieldElem, c: int = 0) -> list[FieldElem]:
    """[g^c, g^(c+1), ..., g^(c+q-2)]: the values f(1), ..., f(q-1) of
    f(i) = g^(i-1+c)."""
    base = _power_table(ctx, ctx.elem(g))
    c %= ctx.q - 1
    return list(base[c:] + base[:c])


@functools.lru_cache(maxsize=128)
def _power_table(ctx: FieldCtx, g: FieldElem) -> tuple[FieldElem, ...]:
    # g has order q - 1, so every shift is a rotation of this table
    if not any(g) or not is_primitive_root(ctx, g):
        raise NotPrimitiveError(f"{format_poly(g)} is not primitive in GF({ctx.q})")
    out = []
    x = ctx.one
    for _ in range(ctx.q - 1):
        out.append(x)
        x = field_mul(ctx, x, g)
    return tuple(out)


def discrete_log_table(ctx: FieldCtx, g: FieldElem) -> dict[FieldElem, int]:
    """Map each nonzero element to its exponent in 0..q-2 to base g."""
    return {x: k for k, x in enumerate(powers_of(ctx, g, 0))}


# ----------------------------------------------------------------------
# Linear algebra over GF(p)
# ----------------------------------------------------------------------

def mat_mul(p: int, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a)


def vec_mat(p: int, v: Sequence[int], m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Row vector times matrix."""
    n = len(m[0])
    return tuple(sum(v[k] * m[k][j] for k in range(len(v))) % p for j in range(n))


def identity(m: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(m)) for i in range(m))


def _row_reduce(p: int, rows: list[list[int]], augment: int = 0) -> int:
    """In-place Gauss-Jordan on the first ``ncols - augment`` columns; returns rank."""
    nrows = len(rows)
    ncols = len(rows[0]) - augment if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rank_mod_p(p: int, m: Sequence[Sequence[int]]) -> int:
    rows = [[x % p for x in row] for row in m]
    return _row_reduce(p, rows) if rows else 0


def invert_matrix(p: int, m: Sequence[Sequence[int]]) -> Matrix:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    rows = [[x % p for x in row] + list(e) for row, e in zip(m, identity(n))]
    if _row_reduce(p, rows, augment=n) < n:
        raise SingularMatrixError(f"matrix is singular mod {p}")
    return tuple(tuple(row[n:]) for row in rows)


@dataclass(frozen=True)
class BasisMatrix:
    """Invertible m x m matrix over GF(p) whose rows form a basis.

    The inverse is always recomputed here; there is deliberately no way to
    pass one in.
    """

    p: int
    entries: Matrix
    inverse: Matrix = field(init=False, compare=False)

    def __post_init__(self):
        entries = tuple(tuple(int(x) % self.p for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "inverse", invert_matrix(self.p, entries))

    @property
    def m(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, p: int, m: int) -> "BasisMatrix":
        return cls(p, identity(m))

    @classmethod
    def random(cls, p: int, m: int, rng) -> "BasisMatrix":
        """Rejection-sample an invertible matrix; ``rng`` is a numpy Generator."""
        while True:
            rows = tuple(tuple(int(x) for x in rng.integers(0, p, size=m)) for _ in range(m))
            if rank_mod_p(p, rows) == m:
                return cls(p, rows)

    def coords(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of v over the rows: v * B^-1."""
        return vec_mat(self.p, v, self.inverse)


def conjugates(ctx: FieldCtx, b: FieldElem) -> list[FieldElem]:
    """[b, b^p, b^(p^2), ..., b^(p^(m-1))]."""
    out = [ctx.elem(b)]
    for _ in range(ctx.m - 1):
        out.append(field_pow(ctx, out[-1], ctx.p))
    return out


def is_normal_element(ctx: FieldCtx, b: FieldElem) -> bool:
    return any(b) and rank_mod_p(ctx.p, conjugates(ctx, b)) == ctx.m


def find_normal_basis(ctx: FieldCtx, b: FieldElem | None = None) -> tuple[FieldElem, BasisMatrix]:
    """Normal element and the matrix whose rows are its conjugates.

    With ``b`` given, that element is checked and used; otherwise the
    lexicographically first normal element is returned.
    """
    if b is not None:
        b = ctx.elem(b)
        if not is_normal_element(ctx, b):
            raise ValueError(f"{format_poly(b)} does not generate a normal basis")
    else:
        b = next(e for e in ctx.elements() if is_normal_element(ctx, e))
    return b, BasisMatrix(ctx.p, tuple(conjugates(ctx, b)))


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------

def format_poly(coeffs: Sequence[int]) -> str:
    return ",".join(str(c) for c in coeffs)


def parse_poly(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise ValueError(f"cannot parse coefficient list {text!r}") from None
