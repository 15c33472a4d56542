"""Welch construction over GF(p^m): hyper-rectangles, hypercubes and the
derived (non-Costas) permutation.

With f(i) = g^(i-1+c) written as a coefficient row vector and optionally
re-expressed in another basis (f_B(i) = f(i) * B^-1):

* the rectangle has dots (i-1, f_B(i)), i = 1..q-1, shape (q-1, p, ..., p);
* the cube has dots (V(i), f_B(i)), i = 1..q-1, where V(i) is the base-p
  expansion of i, shape (p,) * 2m.  The zero vector is missing from both
  halves, which is where the optional corner dot goes.
"""
from __future__ import annotations

import functools
import itertools
from typing import Iterator

import numpy as np

from . import gf
from .construct2d import Permutation
from .dotset import DotSet, VerifyReport, verify_costas
from .errors import NotPrimitiveError


def _field_rows(ctx: gf.FieldCtx, g, c: int, basis: gf.BasisMatrix | None) -> list[tuple[int, ...]]:
    g = ctx.elem(g)
    if not any(g) or not gf.is_primitive_root(ctx, g):
        raise NotPrimitiveError(f"g={gf.format_poly(g)} is not primitive in GF({ctx.q})")
    if not 0 <= c <= ctx.q - 2:
        raise ValueError(f"shift c must lie in 0..{ctx.q - 2}")
    rows = gf.powers_of(ctx, g, c)
    if basis is not None:
        if basis.p != ctx.p or basis.m != ctx.m:
            raise ValueError(f"basis must be {ctx.m}x{ctx.m} over GF({ctx.p})")
        coords = np.asarray(rows, dtype=np.int64) @ np.asarray(basis.inverse, dtype=np.int64) % ctx.p
        rows = [tuple(r) for r in coords.tolist()]
    return rows


@functools.lru_cache(maxsize=64)
def _digit_table(p: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Base-p digit vectors of 0..p^m-1, most significant first."""
    return tuple(itertools.product(range(p), repeat=m))


def welch_rect(ctx: gf.FieldCtx, g, c: int = 0, basis: gf.BasisMatrix | None = None,
               corner: bool = False) -> DotSet:
    """Welch hyper-rectangle in m+1 dimensions.

    With ``corner`` the index coordinate runs over 0..q-1 instead, f(0) is
    taken as the zero vector and the dot (0, 0, ..., 0) is added, which is
    the rectangle analogue of the W0 corner dot.
    """
    rows = _field_rows(ctx, g, c, basis)
    side = (ctx.p,) * ctx.m
    if corner:
        dots = ((0,) + ctx.zero,) + tuple((i + 1,) + r for i, r in enumerate(rows))
        return DotSet((ctx.q,) + side, dots)
    return DotSet((ctx.q - 1,) + side, tuple((i,) + r for i, r in enumerate(rows)))


def welch_cube(ctx: gf.FieldCtx, g, c: int = 0, basis: gf.BasisMatrix | None = None,
               corner: bool = False) -> DotSet:
    """Welch hypercube in 2m dimensions of side p."""
    rows = _field_rows(ctx, g, c, basis)
    p, m = ctx.p, ctx.m
    digits = _digit_table(p, m)
    dots = tuple(digits[i + 1] + r for i, r in enumerate(rows))
    if corner:
        dots = ((0,) * (2 * m),) + dots
    return DotSet((p,) * (2 * m), dots)


def welch_shift_family(ctx: gf.FieldCtx, g, basis: gf.BasisMatrix | None = None,
                       c: int = 0, cube: bool = True) -> Iterator[DotSet]:
    """The q-1 cyclic shifts f(i (+) k), k = 0..q-2, in order of k."""
    build = welch_cube if cube else welch_rect
    for k in range(ctx.q - 1):
        yield build(ctx, g, (c + k) % (ctx.q - 1), basis)


def welch_perm(ctx: gf.FieldCtx, g, c: int = 0, basis: gf.BasisMatrix | None = None,
               digit_order: str = "msd") -> tuple[Permutation, VerifyReport]:
    """Permutation i-1 -> V^-1(f(i)) - 1 of order q-1, with its Costas report.

    ``digit_order`` picks how the coefficient vector is read as a base-p
    number: "msd" treats the first coefficient as most significant, "lsd"
    the last.
    """
    if digit_order not in ("msd", "lsd"):
        raise ValueError("digit_order must be 'msd' or 'lsd'")
    rows = _field_rows(ctx, g, c, basis)
    p = ctx.p
    images = []
    for r in rows:
        digits = r if digit_order == "msd" else r[::-1]
        v = 0
        for x in digits:
            v = v * p + x
        images.append(v - 1)
    perm = Permutation(tuple(images))
    return perm, verify_costas(perm.as_dotset())


def rotational_check(ctx: gf.FieldCtx, basis: gf.BasisMatrix) -> bool:
    """True iff raising to the p-th power right-rotates coordinates over the
    basis, for every nonzero element."""
    if basis.p != ctx.p or basis.m != ctx.m:
        raise ValueError(f"basis must be {ctx.m}x{ctx.m} over GF({ctx.p})")
    for x in ctx.elements():
        if not any(x):
            continue
        a = basis.coords(x)
        b = basis.coords(gf.field_pow(ctx, x, ctx.p))
        if b != a[-1:] + a[:-1]:
            return False
    return True
