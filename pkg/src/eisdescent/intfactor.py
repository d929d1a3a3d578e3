"""Exact integer helpers: factorization and integer cube roots.

Everything here is plain-integer arithmetic (no floating point anywhere);
the rest of the package relies on these results being exact.  Factorization
is trial division for small primes followed by Brent's variant of Pollard
rho, with a deterministic Miller-Rabin test to decide when to stop.  All
norms showing up in practice are desk-scale (well below 2^128), for which
this combination is instant.
"""

from __future__ import annotations

import math
from random import Random

TRIAL_LIMIT = 10_000

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def _brent_rho(n: int, rng: Random) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle finding)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factor_int requires n >= 1")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d <= TRIAL_LIMIT and d * d <= n:
        for step in (0, 2):  # 6k-1, 6k+1
            q = d + step
            while n % q == 0:
                factors[q] = factors.get(q, 0) + 1
                n //= q
        d += 6
    if n == 1:
        return factors
    # Remaining cofactor has no prime factor below TRIAL_LIMIT.
    rng = Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        g = _brent_rho(m, rng)
        stack.append(g)
        stack.append(m // g)
    return factors


def icbrt(n: int) -> int:
    """Floor of the real cube root of n >= 0, by integer Newton iteration."""
    if n < 0:
        raise ValueError("icbrt requires n >= 0")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    return x


def exact_cbrt(n: int) -> int | None:
    """Integer cube root of n (any sign) if n is a perfect cube, else None."""
    neg = n < 0
    r = icbrt(-n if neg else n)
    if r * r * r != abs(n):
        return None
    return -r if neg else r
