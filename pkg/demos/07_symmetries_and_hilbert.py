#!/usr/bin/env python3
"""Cubic symmetries and Hilbert symbols.

A binary cubic with a rational root has an order-2 matrix symmetry; one
whose discriminant is a rational square has an order-3 symmetry.  Both
satisfy det(V)^-1 f((x,y)V) = u·f and V^n = u^n·I exactly.  The Hilbert
symbol (a,b)_v reports whether z^2 = ax^2 + by^2 has a nontrivial
solution over each completion of the rationals, and its product over
all places is always 1.
"""

import math
from fractions import Fraction

from repforms import (
    BinaryCubic,
    FormPair,
    IntForm,
    cubic_automorphism_order2,
    cubic_automorphism_order3,
    hilbert_product,
    hilbert_symbol,
    pair_fixing_witness_check,
    transform_cubic,
)
from repforms.ratmat import det_exact, mat_mul


def show_matrix(name, m):
    print(f"{name} [" + "; ".join(" ".join(str(x) for x in row) for row in m) + "]")


def banner(text):
    print(f"\n=== {text} ===")


banner("Order-2 symmetry of a split cubic")
f = BinaryCubic(1, 0, -1, 0)  # x^3 - x y^2 = x(x-y)(x+y)
v2 = cubic_automorphism_order2(f, (1, 1), u=1)
print("cubic:", tuple(str(t) for t in f.coeffs), " root (1,1), u=1")
show_matrix("V =", v2)
print("V^2 == I:", mat_mul(v2, v2) == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))
print("det(V)^-1 f((x,y)V) == f:",
      transform_cubic(f, v2).coeffs == tuple(det_exact(v2) * t for t in f.coeffs))

banner("Order-3 symmetry (square discriminant)")
print("discriminant:", f.disc, "(= 2^2, a rational square)")
v3 = cubic_automorphism_order3(f, u=1)
show_matrix("V =", v3)
cube = mat_mul(mat_mul(v3, v3), v3)
print("V^3 == I:", cube == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))

banner("A symmetry fixing a whole pair of forms")
form_a = IntForm((1, 1, 1, 0, 0, 0))
form_b = IntForm((0, 1, -1, 0, 0, 0))
pair = FormPair(form_a, form_b)
w = ((1, 0, 0), (0, 0, 1), (0, 1, 0))  # swap the last two coordinates
v = ((-1, 0), (0, 1))
print("pair A =", form_a.coeffs, " B =", form_b.coeffs)
print("witness (w, v) with u=1 fixes the pair:",
      pair_fixing_witness_check(pair, w, v, 1))

banner("Hilbert symbols at individual places")
cases = [(-1, -1, math.inf), (-1, -1, 2), (3, 3, 3), (2, 3, 2), (5, 3, 3)]
for a, b, place in cases:
    where = "infinity" if place is math.inf else f"p={place}"
    print(f"  ({a:2d},{b:2d}) at {where:9s} -> {hilbert_symbol(a, b, place):+d}")

banner("The product over all places is 1")
for a, b in [(-1, -1), (3, 3), (Fraction(5, 7), Fraction(-14, 3)), (30, -42)]:
    print(f"  a={a}, b={b}: product = {hilbert_product(a, b)}")
