#!/usr/bin/env python3
"""From a pair of ternary forms to a rank-4 ring and back.

A pair (A, B) of ternary quadratic forms carries a binary cubic
4·det(Ax − By) and a commutative rank-4 ring with basis (1, x1, x2, x3).
Any element whose powers form a basis has a quartic characteristic
polynomial; transition matrices (W, V) then move the pair onto the
canonical pair of that polynomial, where the determinant cubic equals
the shifted resolvent.  Everything is exact rational arithmetic.
"""

from fractions import Fraction

from repforms import (
    FormPair,
    GroupElement,
    IntForm,
    act,
    anisotropic_over_Q,
    canonical_pair,
    det_binary_cubic,
    generator_char_poly,
    power_basis_matrix,
    quartic_structure,
    resolvent,
    shift_cubic,
    transition_matrices,
)
from repforms.ratmat import as_fraction_matrix, det_exact


def show_matrix(name, m):
    print(f"{name} [" + "; ".join(" ".join(str(x) for x in row) for row in m) + "]")


def banner(text):
    print(f"\n=== {text} ===")


form_a = IntForm((0, -1, 0, 0, 1, 0))
form_b = IntForm((-1, 0, -1, 0, 0, 0))
pair = FormPair(form_a, form_b)
banner("A pair of ternary forms")
print("A:", form_a.coeffs)
print("B:", form_b.coeffs)
cubic = det_binary_cubic(pair)
print("binary cubic 4*det(Ax - By):", tuple(str(t) for t in cubic.coeffs))

banner("Structure constants of the rank-4 ring (coordinates in 1, x1, x2, x3)")
ring = quartic_structure(pair)
for key in sorted(ring.table):
    row = tuple(str(t) for t in ring.table[key])
    print(f"  x{key[0]} * x{key[1]} = {row}")

banner("A generator and its characteristic polynomial")
h0, h = 0, (-1, 0, 0)
data = generator_char_poly(pair, h0, h)
print(f"element h0 + h.x with h0={h0}, h={h}")
print("char poly x^4 + a3 x^3 + a2 x^2 + a1 x + a0, (a3,a2,a1,a0) =",
      tuple(str(t) for t in (data.poly.a3, data.poly.a2, data.poly.a1, data.poly.a0)))
print("pencil scale 4*det(B(h)A - A(h)B):", data.scale)
m = power_basis_matrix(pair, h0, h)
print("power-basis determinant equals the scale:",
      det_exact(as_fraction_matrix(m)) == data.scale)

banner("This pair is already canonical: the transition is a fixed point")
w, v = transition_matrices(pair, h0, h)
show_matrix("W:", w)
show_matrix("V:", v)
print("act((W,V), pair) reaches canonical_pair(char poly):",
      act(GroupElement(w, v), pair) == canonical_pair(data.poly))

banner("Scramble the pair, then find the way back")
scramble = GroupElement(((1, 1, 0), (0, 1, 2), (1, 0, 1)), ((1, 1), (0, 1)))
scrambled = act(scramble, pair)
generator = next(
    (0, hh)
    for hh in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1)]
    if generator_char_poly(scrambled, 0, hh).is_basis
)
h0s, hs = generator
data2 = generator_char_poly(scrambled, h0s, hs)
print("generator h =", hs, " char poly coefficients:",
      tuple(str(t) for t in (data2.poly.a3, data2.poly.a2, data2.poly.a1, data2.poly.a0)))
w2, v2 = transition_matrices(scrambled, h0s, hs)
show_matrix("W:", w2)
target = canonical_pair(data2.poly)
print("scrambled pair reaches its canonical pair:",
      act(GroupElement(w2, v2), scrambled) == target)

banner("Resolvent identity on the canonical pair")
res = resolvent(data2.poly)
print("resolvent cubic:", tuple(str(t) for t in res.coeffs))
shifted = shift_cubic(res, Fraction(data2.poly.a2, 3))
print("4*det(canonical) == resolvent shifted by a2/3:",
      det_binary_cubic(target) == shifted)

banner("Local solvability of A(x) = B(x) = 0 along the generator")
print("anisotropic over Q:", anisotropic_over_Q(pair, h0, h))
