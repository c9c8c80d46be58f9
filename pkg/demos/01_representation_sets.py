#!/usr/bin/env python3
"""Representation sets: which numbers does a positive-definite form take?

A form is stored by its integer coefficient list (diagonal first, then
cross terms), so the ternary x^2 + y^2 + z^2 is "1 1 1 0 0 0" and the
binary x^2 - xy + y^2 is "2: 1 1 -1".  This script evaluates forms,
lists represented values with witness vectors, and shows the classic
pair of inequivalent binary forms that represent exactly the same
numbers.
"""

from repforms import (
    IntForm,
    evaluate,
    format_form,
    parse_form,
    rep_equal_up_to,
    representations_up_to,
    vectors_with_value,
)


def banner(text):
    print(f"\n=== {text} ===")


banner("Parsing and evaluating")
f = parse_form("1 1 1 0 0 0")
print(f"ternary {format_form(f, explicit=True)!r}: f(1,2,3) =", evaluate(f, (1, 2, 3)))
g = parse_form("2: 1 1 -1")
print(f"binary  {format_form(g)!r}:     g(2,1)   =", evaluate(g, (2, 1)))

banner("Values represented up to 30, with witnesses")
reps = representations_up_to(g, 30, with_witnesses=True)
for value in reps.values:
    print(f"  {value:3d}  <-  {reps.witnesses[value]}")
print("gaps below 30:", [v for v in range(1, 31) if v not in reps])

banner("All vectors realizing one value")
print("g(x) = 21 at", vectors_with_value(g, 21))

banner("Two inequivalent binaries with identical value sets")
h1 = IntForm((1, 1, -1))
h2 = IntForm((1, 3, 0))
cmp_small = rep_equal_up_to(h1, h2, 50_000)
print("value sets of x^2-xy+y^2 and x^2+3y^2 agree up to 50000:", cmp_small.equal)
print("first few shared values:", representations_up_to(h1, 30).values)

banner("A near miss, and where it breaks")
h3 = IntForm((1, 3, -1))
verdict = rep_equal_up_to(h1, h3, 100)
print(
    f"x^2-xy+y^2 vs x^2+3y^2-xy: first disagreement at {verdict.value}"
    f" (missed by form {verdict.missing_from}, witness {verdict.witness})"
)
