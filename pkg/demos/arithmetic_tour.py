#!/usr/bin/env python3
"""Tour of exact arithmetic in Z[w] and Q(w).

w is a primitive cube root of unity (w^2 = -1 - w); the key prime is
pi = 1 + 2w with pi^2 = -3.  Everything below is exact integer/rational
arithmetic; nothing is floating point.
"""

from fractions import Fraction

from eisdescent import (
    OMEGA,
    PI,
    EisensteinInt,
    EisensteinRational,
    eisenstein_gcd,
    factor,
    is_cube,
    pi_valuation,
)

w = OMEGA
print("== the ring Z[w] ==")
print(f"w^2            = {w * w}")
print(f"w^3            = {w ** 3}")
print(f"pi = 1+2w, pi^2 = {PI * PI},  N(pi) = {PI.norm()}")
print(f"conj(pi)       = {PI.conj()}   (conjugation sends w to w^2)")

print()
print("== Euclidean structure ==")
a, b = EisensteinInt(47, 9), EisensteinInt(5, -2)
q, r = divmod(a, b)
print(f"divmod({a}, {b}) -> q = {q}, r = {r}")
print(f"   norms: N(r) = {r.norm()} < N(b) = {b.norm()}")
print(f"gcd(6, 4)    = {eisenstein_gcd(EisensteinInt(6, 0), EisensteinInt(4, 0))}")
print(f"gcd(3, pi)   = {eisenstein_gcd(EisensteinInt(3, 0), PI)}")

print()
print("== pi-adic valuation and factorization ==")
for x in (EisensteinInt(3, 0), EisensteinInt(6, 3), EisensteinInt(7, 0),
          EisensteinInt(1980, -366)):
    v, cof = pi_valuation(x)
    print(f"{str(x):>12}:  pi-valuation {v},  factors  {factor(x)}")

print()
print("== cube testing in Q(w) ==")
for value in (EisensteinRational(EisensteinInt(-27, 0), 8),
              EisensteinRational(EisensteinInt(6, 3)),
              EisensteinRational.from_coords(Fraction(1, 2), Fraction(3, 5)) ** 3):
    ok, root = is_cube(value)
    suffix = f"cube of {root}" if ok else "not a cube"
    print(f"{str(value):>24}:  {suffix}")
