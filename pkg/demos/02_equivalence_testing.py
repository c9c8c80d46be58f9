#!/usr/bin/env python3
"""Equivalence testing: same lattice in disguise, or genuinely different?

Two integral forms are equivalent over the integers when a unimodular
change of basis carries one Gram matrix onto the other.  The library
finds an explicit witness matrix or proves there is none; a cheaper
rational invariant (square determinant ratio) rules out equivalence
over the rationals.
"""

from fractions import Fraction

from repforms import (
    IntForm,
    canonical_coeffs,
    dedup_classes,
    equivalent_over_Z,
    gram_determinant,
    gram_matrix,
    rationally_equivalent_by_det,
    table_dataset,
)
from repforms.ratmat import mat_mul, transpose


def banner(text):
    print(f"\n=== {text} ===")


def change_basis(f, w):
    """Apply an integer change of basis x -> x w to an integral form."""
    g = mat_mul(mat_mul(w, gram_matrix(f)), transpose(w))
    n = f.n
    coeffs = [int(g[i][i]) for i in range(n)]
    coeffs += [int(2 * g[i][j]) for i in range(n) for j in range(i + 1, n)]
    return IntForm(tuple(coeffs))


banner("Scramble a form, then recover the change of basis")
original = IntForm((1, 3, 1, 0, 0, 0))
w = ((1, 0, 0), (2, 1, 0), (1, 1, 1))
disguised = change_basis(original, w)
print("original :", original.coeffs)
print("disguised:", disguised.coeffs)
witness = equivalent_over_Z(original, disguised)
print("recovered witness:", witness)
print("witness verifies:", change_basis(original, witness) == disguised)

banner("Inequivalent forms with equal determinant")
f1 = IntForm((1, 1, -1))
f2 = IntForm((1, 3, 0))
print("witness between x^2-xy+y^2 and x^2+3y^2:", equivalent_over_Z(f1, f2))
print(
    "Gram determinants:",
    gram_determinant(f1),
    "and",
    gram_determinant(f2),
    "(equal, yet no integral witness exists)",
)

banner("Canonical representatives and class deduplication")
variants = [original, disguised, change_basis(original, ((1, 1, 0), (0, 1, 0), (0, 1, 1)))]
print("canonical coefficients of all three:", {canonical_coeffs(f) for f in variants})
mixed = variants + [IntForm((1, 1, 3, 0, 2, 2)), IntForm((1, 1, 2, 0, 0, 0))]
classes = dedup_classes(mixed)
print("distinct classes among five forms:", [f.coeffs for f in classes])

banner("Rational equivalence from determinant ratios")
doubled = IntForm((2, 2, -2))
print(
    f"{f1.coeffs} vs {doubled.coeffs}: det ratio",
    Fraction(gram_determinant(f1), gram_determinant(doubled)),
    "is a square ->",
    rationally_equivalent_by_det(f1, doubled),
)
row_a, row_b = table_dataset()[0].forms
print(
    f"{row_a.coeffs} vs {row_b.coeffs}: det ratio",
    Fraction(gram_determinant(row_a), gram_determinant(row_b)),
    "is not a square ->",
    rationally_equivalent_by_det(row_a, row_b),
)
