#!/usr/bin/env python3
"""Classifying specialization points of the cube cover t^3 = z over Q(w).

A point a of Q(w) descends exactly when it is a non-cube value of the
descent form (x + w y)^2 (x + w^2 y) with x, y rational.  The witness is
unique and the descended action is certified by the exact identity
a^2 = conj(a) (x + w y)^3.
"""

from fractions import Fraction

from eisdescent import (
    PI,
    EisensteinInt,
    EisensteinRational,
    classify,
    descent_form,
    descent_form_preimage,
    galois_commutes,
    parse_element,
    pi_divides_both_factors,
    reduce_by_pi,
)

print("== classification of sample points ==")
for text in ("1", "-27/8", "6+3*w", "3", "w", "0", "1/2-5/3*w"):
    a = parse_element(text)
    print(f"{text:>10}  ->  {classify(a)}")

print()
print("== the descent form and its inverse ==")
x, y = Fraction(2), Fraction(1)
a = descent_form(x, y)
print(f"form(2, 1) = {a}")
w = descent_form_preimage(a)
print(f"preimage({a}) = (x, y) = ({w.x}, {w.y})")
print(f"Galois identity a^2 = conj(a)(x+wy)^3 holds: {galois_commutes(a, w)}")
print(f"preimage(3) = {descent_form_preimage(EisensteinRational(3))}"
      "   (N(3) = 9 is not a rational cube)")

print()
print("== removing pi^3 from a divisible point ==")
x0, y0 = 1, 2
print(f"pi divides both linear factors at (1, 2): {pi_divides_both_factors(x0, y0)}")
x1, y1 = reduce_by_pi(x0, y0)
lhs = descent_form(x1, y1) * EisensteinRational(PI**3)
print(f"reduce_by_pi(1, 2) = ({x1}, {y1});  "
      f"form({x1}, {y1}) * pi^3 = {lhs} = form(1, 2) = {descent_form(x0, y0)}")
assert lhs == descent_form(x0, y0)
assert descent_form(x1, y1) == EisensteinRational(EisensteinInt(-1, 0))
