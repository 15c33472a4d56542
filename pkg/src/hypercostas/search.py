"""Monte Carlo greedy packing of Costas dot sets, plus the slice-equation
candidate generators and a few comparison helpers.

Each restart shuffles the candidate positions and keeps every candidate
whose differences to the dots kept so far are new.  Differences are held
as packed integer codes (see :mod:`hypercostas.dotset`), with ``abs``
identifying d with -d, so a trial insertion costs one set lookup per kept
dot and stops at the first clash.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import gf
from .construct2d import field_for_order
from .dotset import DotSet, diff_weights, is_costas
from .errors import NotPrimitiveError
from .numtheory import is_prime

PRNG_ID = "numpy.PCG64/SeedSequence([seed, restart])/Generator.permutation"


@dataclass(frozen=True)
class SieveSpec:
    """Candidates restricted to solutions of a slice equation (see
    :func:`slice_candidates`), clipped to the search shape."""

    variant: int
    q: int
    params: dict = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> "SieveSpec":
        """Parse ``golomb:v1:q=7[,a=3,x=0,...]``."""
        parts = text.split(":")
        if len(parts) != 3 or parts[0] != "golomb" or not parts[1].startswith("v"):
            raise ValueError(f"cannot parse sieve {text!r}; expected golomb:v<1-4>:q=<q>[,key=value...]")
        variant = int(parts[1][1:])
        kv = {}
        for item in parts[2].split(","):
            key, _, value = item.partition("=")
            if not value:
                raise ValueError(f"bad sieve parameter {item!r}")
            kv[key.strip()] = int(value)
        if "q" not in kv:
            raise ValueError("sieve needs q=<prime power>")
        q = kv.pop("q")
        return cls(variant, q, kv)

    def __str__(self):
        extra = "".join(f",{k}={v}" for k, v in sorted(self.params.items()))
        return f"golomb:v{self.variant}:q={self.q}{extra}"


@dataclass(frozen=True)
class SearchConfig:
    shape: tuple[int, ...]
    restarts: int = 1
    seed: int = 0
    sieve: SieveSpec | None = None

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(int(n) for n in self.shape))
        if not self.shape or any(n < 1 for n in self.shape):
            raise ValueError(f"invalid shape {self.shape}")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")


@dataclass(frozen=True)
class SearchResult:
    best: DotSet
    histogram: dict[int, int]
    elapsed: float
    seed: int
    restarts: int
    best_restart: int
    n_candidates: int
    prng: str = PRNG_ID

    def stats(self) -> dict:
        return {
            "shape": list(self.best.shape),
            "best_dots": len(self.best),
            "best_restart": self.best_restart,
            "restarts": self.restarts,
            "seed": self.seed,
            "prng": self.prng,
            "n_candidates": self.n_candidates,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "elapsed": self.elapsed,
        }


# ----------------------------------------------------------------------
# Incremental packing
# ----------------------------------------------------------------------

def _codes(points: Sequence[Sequence[int]], shape: Sequence[int]) -> list[int]:
    w = diff_weights(shape)
    if w is None:
        raise ValueError(f"shape {tuple(shape)} is too large to pack into 64-bit codes")
    return [sum(x * wj for x, wj in zip(pt, w)) for pt in points]


class Packer:
    """Incremental Costas set: ``try_add`` keeps a point iff the set stays Costas."""

    def __init__(self, shape: Sequence[int]):
        self.shape = tuple(shape)
        self.weights = diff_weights(self.shape)
        if self.weights is None:
            raise ValueError(f"shape {self.shape} is too large to pack into 64-bit codes")
        self.dots: list[tuple[int, ...]] = []
        self._codes: list[int] = []
        self._used: set[int] = set()

    def try_add(self, dot: Sequence[int]) -> bool:
        dot = tuple(int(x) for x in dot)
        if len(dot) != len(self.shape) or any(not 0 <= x < n for x, n in zip(dot, self.shape)):
            raise ValueError(f"{dot} lies outside shape {self.shape}")
        c = sum(x * w for x, w in zip(dot, self.weights))
        new = set()
        for a in self._codes:
            d = c - a
            if d < 0:
                d = -d
            # d == 0 is a repeated dot
            if d == 0 or d in self._used or d in new:
                return False
            new.add(d)
        self._used |= new
        self._codes.append(c)
        self.dots.append(dot)
        return True

    @property
    def differences(self) -> set[int]:
        return set(self._used)

    def dotset(self) -> DotSet:
        return DotSet(self.shape, tuple(self.dots))


def _pack(order: Sequence[int], codes: Sequence[int]) -> list[int]:
    """One greedy pass over candidate indices; returns kept indices."""
    used: set[int] = set()
    kept_codes: list[int] = []
    kept: list[int] = []
    for idx in order:
        c = codes[idx]
        new = set()
        for a in kept_codes:
            d = c - a
            if d < 0:
                d = -d
            if d in used or d in new:
                break
            new.add(d)
        else:
            used |= new
            kept_codes.append(c)
            kept.append(idx)
    return kept


def restart_rng(seed: int, restart: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, restart])))


def _better(a: tuple[int, ...], b: tuple[int, ...] | None) -> bool:
    """Candidate a (sorted dot tuple) beats b: more dots, then lexicographically smaller."""
    if b is None:
        return True
    if len(a) != len(b):
        return len(a) > len(b)
    return a < b


def _run_restarts(points, codes, seed, start, stop):
    hist: dict[int, int] = {}
    best = None
    best_r = -1
    n = len(points)
    for r in range(start, stop):
        order = restart_rng(seed, r).permutation(n).tolist()
        kept = tuple(sorted(points[i] for i in _pack(order, codes)))
        hist[len(kept)] = hist.get(len(kept), 0) + 1
        if _better(kept, best):
            best, best_r = kept, r
    return hist, best, best_r


def candidate_points(cfg: SearchConfig) -> list[tuple[int, ...]]:
    if cfg.sieve is None:
        return list(itertools.product(*(range(n) for n in cfg.shape)))
    s = cfg.sieve
    pts = slice_candidates(s.variant, s.q, dims=len(cfg.shape), **s.params)
    return [pt for pt in pts if len(pt) == len(cfg.shape) and all(x < n for x, n in zip(pt, cfg.shape))]


def default_workers() -> int:
    env = os.environ.get("HYPERCOSTAS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def greedy_pack(cfg: SearchConfig, workers: int = 1) -> SearchResult:
    """Best of ``cfg.restarts`` randomized greedy passes.

    Restart r always uses its own PRNG stream derived from (seed, r), so the
    result does not depend on ``workers``.
    """
    t0 = time.perf_counter()
    points = candidate_points(cfg)
    if not points:
        raise ValueError("the candidate list is empty")
    codes = _codes(points, cfg.shape)
    workers = max(1, min(workers, cfg.restarts))
    if workers == 1:
        parts = [_run_restarts(points, codes, cfg.seed, 0, cfg.restarts)]
    else:
        bounds = np.linspace(0, cfg.restarts, workers + 1).astype(int).tolist()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_restarts, points, codes, cfg.seed, a, b)
                       for a, b in zip(bounds, bounds[1:]) if b > a]
            parts = [f.result() for f in futures]
    hist: dict[int, int] = {}
    best, best_r = None, -1
    for h, b, r in parts:
        for k, v in h.items():
            hist[k] = hist.get(k, 0) + v
        if _better(b, best) or (b == best and r < best_r):
            best, best_r = b, r
    result = DotSet(cfg.shape, best)
    if not is_costas(result):
        raise AssertionError("greedy packing produced a non-Costas set")
    return SearchResult(result, hist, time.perf_counter() - t0, cfg.seed, cfg.restarts, best_r, len(points))


# ----------------------------------------------------------------------
# Slice-equation candidates
# ----------------------------------------------------------------------

def _prime_generator(p: int, a: int | None) -> int:
    ctx = gf.FieldCtx.make(p, 1)
    if a is None:
        return gf.find_primitive_root(ctx)[0]
    if not 0 < a < p or not gf.is_primitive_root(ctx, (a % p,)):
        raise NotPrimitiveError(f"{a} is not a primitive root mod {p}")
    return a


def slice_candidates(variant: int, q: int, dims: int = 3, **params) -> list[tuple[int, ...]]:
    """0-based solution points of one of four slice equations.

    Exponents and values run over 1..q-1 and are reported minus one.

    1. a^(i+x) + b^(j+y) + c^(k+z) = 0 in GF(q); with ``dims`` != 3 the sum
       has one term per dimension, generators ``g0, g1, ...`` and shifts
       ``s0, s1, ...`` (``a, b, c`` / ``x, y, z`` name the first three).
    2. a^(i+x) + b^(j+y) = k mod p.
    3. a^(i+j) = k mod p.
    4. a^(i+d) = j*k mod p.

    Generators default to the first primitive element, shifts to 0.
    """
    if variant == 1:
        return _variant1(q, dims, params)
    if dims != 3:
        raise ValueError(f"variant {variant} is three-dimensional")
    if not is_prime(q):
        raise ValueError(f"variant {variant} needs a prime, got {q}")
    p = q
    if variant == 2:
        a = _prime_generator(p, params.get("a"))
        b = _prime_generator(p, params.get("b"))
        x, y = params.get("x", 0), params.get("y", 0)
        out = []
        for i in range(1, p):
            for j in range(1, p):
                k = (pow(a, i + x, p) + pow(b, j + y, p)) % p
                if k:
                    out.append((i - 1, j - 1, k - 1))
        return out
    if variant == 3:
        a = _prime_generator(p, params.get("a"))
        return [(i - 1, j - 1, pow(a, i + j, p) - 1) for i in range(1, p) for j in range(1, p)]
    if variant == 4:
        a = _prime_generator(p, params.get("a"))
        d = params.get("d", 0)
        out = []
        for i in range(1, p):
            t = pow(a, i + d, p)
            for j in range(1, p):
                k = t * pow(j, -1, p) % p
                out.append((i - 1, j - 1, k - 1))
        return out
    raise ValueError(f"unknown slice variant {variant}")


def _variant1(q: int, dims: int, params: dict) -> list[tuple[int, ...]]:
    if dims < 2:
        raise ValueError("variant 1 needs at least two dimensions")
    ctx = field_for_order(q)
    if q < 3:
        raise ValueError("variant 1 needs q > 2")
    names = {0: ("a", "x"), 1: ("b", "y"), 2: ("c", "z")}
    first = None
    gens, shifts = [], []
    for t in range(dims):
        gname, sname = names.get(t, (f"g{t}", f"s{t}"))
        g = params.get(gname, params.get(f"g{t}"))
        if g is None:
            if first is None:
                first = gf.find_primitive_root(ctx)
            g = first
        g = ctx.elem(g)
        if not any(g) or not gf.is_primitive_root(ctx, g):
            raise NotPrimitiveError(f"{gf.format_poly(g)} is not primitive in GF({q})")
        gens.append(g)
        shifts.append(params.get(sname, params.get(f"s{t}", 0)))
    n = q - 1
    tables = [gf.powers_of(ctx, g, 0) for g in gens]
    last_log = gf.discrete_log_table(ctx, gens[-1])
    out = []
    for head in itertools.product(range(1, q), repeat=dims - 1):
        s = ctx.zero
        for t, e in enumerate(head):
            s = gf.field_add(ctx, s, tables[t][(e + shifts[t]) % n])
        if not any(s):
            continue
        neg = gf.field_sub(ctx, ctx.zero, s)
        k = (last_log[neg] - shifts[-1]) % n
        k = k if k else n
        out.append(tuple(e - 1 for e in head) + (k - 1,))
    return out


# ----------------------------------------------------------------------
# Comparisons
# ----------------------------------------------------------------------

def overlap(a: DotSet, b: DotSet) -> int:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return len(a.dotset & b.dotset)


def overlaps(d: DotSet, arrays: Sequence) -> list[int]:
    """Overlap of d with each array (Permutations or dot sets) of its side."""
    out = []
    for arr in arrays:
        other = arr if isinstance(arr, DotSet) else arr.as_dotset()
        out.append(overlap(d, other))
    return out


def blank_lines(d: DotSet) -> tuple[list[int], list[int]]:
    """Indices of rows (first coordinate) and columns with no dot."""
    if d.dim != 2:
        raise ValueError("blank lines are defined for 2-D dot sets")
    rows = {x for x, _ in d.dots}
    cols = {y for _, y in d.dots}
    return ([i for i in range(d.shape[0]) if i not in rows],
            [j for j in range(d.shape[1]) if j not in cols])
