"""Integer helpers: deterministic primality, factorization, prime powers."""
from __future__ import annotations

from math import isqrt

INT_CAP = 1 << 63

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    The witness set of the first twelve primes is exact for every
    n < 3.3e24, which covers the 2**63 integer cap with room to spare.
    """
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n in increasing order (trial division)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def iroot(x: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return isqrt(x)
    r = int(round(x ** (1.0 / k)))
    # float estimate can be off by a little for large x
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def perfect_power(x: int) -> tuple[int, int] | None:
    """Return (p, k) with x == p**k and p prime, or None."""
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    if x >= INT_CAP:
        raise OverflowError(f"{x} exceeds the 2**63 integer cap")
    for k in range(x.bit_length(), 0, -1):
        r = iroot(x, k)
        if r >= 2 and r ** k == x and is_prime(r):
            return r, k
    return None


def ordered_factorizations(n: int, min_factor: int = 2) -> list[tuple[int, ...]]:
    """All ordered tuples of integers >= min_factor whose product is n."""
    if n == 1:
        return [()]
    out = []
    for f in range(min_factor, n + 1):
        if n % f == 0:
            for rest in ordered_factorizations(n // f, min_factor):
                out.append((f,) + rest)
    return out
