"""Two infinite families of representation-equal ternary pairs.

Each family is parametrized by positive rationals (c, d) and pairs a form
built on the triangular (hexagonal) planar lattice with a diagonal-style
partner of four times its determinant:

  hexagonal family:     c(x1^2 - x1 x2 + x2^2) + d x3^2
                   vs   c x1^2 + 3c x2^2 + d x3^2
  rhombohedral family:  c(x1^2 - x1 x2 + x2^2) + d(x1 + x2 + 3 x3)^2
                   vs   c x1^2 + 3c x2^2 + d(x1 + 3 x3)^2

Representation equality holds identically in (c, d): three integral
substitutions carry the second form into the first on a union of
sublattices covering all of Z^3, and each substitution is an exact
identity of quadratic forms.  Both coefficient vectors are linear in
(c, d), so checking the identities on the two generator parts proves
them for every parameter choice at once.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from itertools import product
from math import isqrt, lcm

from .equivalence import canonical_coeffs
from .forms import IntForm, RatForm, gram_determinant, is_positive_definite
from .ratmat import as_fraction_matrix, mat_inv, mat_mul, transpose

# Generator parts (coefficient tuples): form = c * parts[0] + d * parts[1].
_PARTS = {
    "hexagonal": (
        ((1, 1, 0, -1, 0, 0), (0, 0, 1, 0, 0, 0)),
        ((1, 3, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)),
    ),
    "rhombohedral": (
        ((1, 1, 0, -1, 0, 0), (1, 1, 9, 2, 6, 6)),
        ((1, 3, 0, 0, 0, 0), (1, 0, 9, 0, 6, 0)),
    ),
}

# Substitutions (T, sigma): first(x T) == second(x sigma) identically, and
# the images of the T together cover Z^3 (parity split on x1, x2).
_SUBSTITUTIONS = {
    "hexagonal": (
        (((1, 0, 0), (1, 2, 0), (0, 0, 1)), (1, 2, 3)),
        (((2, 1, 0), (0, 1, 0), (0, 0, 1)), (2, 1, 3)),
        (((1, 1, 0), (1, -1, 0), (0, 0, 1)), (1, 2, 3)),
    ),
    "rhombohedral": (
        (((1, 0, 0), (1, 2, -1), (0, 0, 1)), (1, 2, 3)),
        (((2, 1, -1), (0, 1, 0), (0, 0, 1)), (2, 1, 3)),
        (((1, 1, -1), (1, -1, 0), (0, 0, -1)), (1, 2, 3)),
    ),
}

FAMILY_NAMES = tuple(_PARTS)


def _combine(parts, c, d):
    return tuple(c * p + d * q for p, q in zip(*parts))


def family_pair(which, c, d):
    """The (smaller-determinant, larger-determinant) pair of forms for
    parameters (c, d) > 0; integral coefficients give IntForm, otherwise
    the rational Gram matrices are returned."""
    if which not in _PARTS:
        raise ValueError(f"unknown family {which!r}")
    c, d = Fraction(c), Fraction(d)
    if c <= 0 or d <= 0:
        raise ValueError("parameters must be positive")
    out = []
    for parts in _PARTS[which]:
        coeffs = _combine(parts, c, d)
        if all(x.denominator == 1 for x in coeffs):
            out.append(IntForm(tuple(int(x) for x in coeffs)))
        else:
            out.append(RatForm(_gram_of_coeffs(coeffs)))
    return tuple(out)


def _gram_of_coeffs(coeffs):
    f = [[Fraction(0)] * 3 for _ in range(3)]
    order = ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2))
    for (i, j), s in zip(order, coeffs):
        if i == j:
            f[i][i] = Fraction(s)
        else:
            f[i][j] = f[j][i] = Fraction(s, 2)
    return tuple(tuple(row) for row in f)


def _permute_gram(g, sigma):
    return tuple(tuple(g[sigma[i] - 1][sigma[j] - 1] for j in range(3)) for i in range(3))


def family_identity_all_parameters(which):
    """Check the family's substitution identities part-by-part (hence for
    all parameters at once) and that the substitution images cover Z^3."""
    parts_a, parts_b = _PARTS[which]
    subs = _SUBSTITUTIONS[which]
    for t, sigma in subs:
        tm = as_fraction_matrix(t)
        for pa, pb in zip(parts_a, parts_b):
            lhs = mat_mul(mat_mul(tm, _gram_of_coeffs(pa)), transpose(tm))
            rhs = _permute_gram(_gram_of_coeffs(pb), sigma)
            if lhs != rhs:
                return False
    return _substitutions_cover(which)


@functools.lru_cache(maxsize=None)
def _substitutions_cover(which):
    """Whether the substitution images jointly cover Z^3 (parity split)."""
    inverses = [mat_inv(as_fraction_matrix(t)) for t, _ in _SUBSTITUTIONS[which]]
    for x in product(range(-2, 3), repeat=3):
        covered = False
        for inv in inverses:
            y = tuple(sum(x[i] * inv[i][j] for i in range(3)) for j in range(3))
            if all(v.denominator == 1 for v in y):
                covered = True
                break
        if not covered:
            return False
    return True


def verify_family_identity(which, c, d, bound):
    """Verify that the two family forms at (c, d) represent the same values.

    Symbolically: each substitution carries the first instantiated Gram
    matrix exactly onto the (permuted) second one, and the substitution
    images cover Z^3.  Numerically: after clearing denominators the two
    integral forms have identical represented sets up to the scaled bound.
    """
    if which not in _PARTS:
        raise ValueError(f"unknown family {which!r}")
    c, d = Fraction(c), Fraction(d)
    if c <= 0 or d <= 0:
        raise ValueError("parameters must be positive")
    coeffs_a = _combine(_PARTS[which][0], c, d)
    coeffs_b = _combine(_PARTS[which][1], c, d)
    ga, gb = _gram_of_coeffs(coeffs_a), _gram_of_coeffs(coeffs_b)
    for t, sigma in _SUBSTITUTIONS[which]:
        tm = as_fraction_matrix(t)
        if mat_mul(mat_mul(tm, ga), transpose(tm)) != _permute_gram(gb, sigma):
            return False
    if not _substitutions_cover(which):
        return False
    scale = lcm(*(x.denominator for x in coeffs_a + coeffs_b))
    fa = IntForm(tuple(int(x * scale) for x in coeffs_a))
    fb = IntForm(tuple(int(x * scale) for x in coeffs_b))
    from .repsets import rep_equal_up_to

    return rep_equal_up_to(fa, fb, int(bound) * scale).equal


def _integer_square_divisor_pairs(r):
    """All (u, v) with u^2 * v = r over positive integers."""
    out = []
    if r.denominator != 1 or r <= 0:
        return out
    r = int(r)
    for u in range(1, isqrt(r) + 1):
        if r % (u * u) == 0:
            out.append((u, r // (u * u)))
    return out


def is_family_instance(f):
    """If f is Z-equivalent to a member of either family, return
    (family, member_index, c, d); otherwise None.

    Candidate parameters are recovered from the determinant equation of
    each family member (det = 3c^2 d / 4, 3c^2 d, 27c^2 d / 4, 27c^2 d)
    and confirmed by comparing canonical representatives.
    """
    if f.n != 3:
        return None
    det = gram_determinant(f)
    target = canonical_coeffs(f)
    # hexagonal: integral iff c, d are integers
    for idx, scale in ((0, Fraction(4, 3)), (1, Fraction(1, 3))):
        for c, d in _integer_square_divisor_pairs(det * scale):
            cand = _build_if_integral("hexagonal", idx, Fraction(c), Fraction(d))
            if cand is not None and canonical_coeffs(cand) == target:
                return ("hexagonal", idx, Fraction(c), Fraction(d))
    # rhombohedral: c = u/3, d = v/3 with u = -v (mod 3)
    for idx, scale in ((0, Fraction(4)), (1, Fraction(1))):
        for u, v in _integer_square_divisor_pairs(det * scale):
            if (u + v) % 3 != 0:
                continue
            c, d = Fraction(u, 3), Fraction(v, 3)
            cand = _build_if_integral("rhombohedral", idx, c, d)
            if cand is not None and canonical_coeffs(cand) == target:
                return ("rhombohedral", idx, c, d)
    return None


def _build_if_integral(which, idx, c, d):
    coeffs = _combine(_PARTS[which][idx], c, d)
    if any(x.denominator != 1 for x in coeffs):
        return None
    form = IntForm(tuple(int(x) for x in coeffs))
    if not is_positive_definite(form):
        return None
    return form


def family_ternary_pairs(which):
    """The two (A, B) ternary pairs attached to a family: A is the planar
    part padded by a zero row, B a rank-one square of the linear form
    carrying the d-parameter."""
    from .forms import FormPair

    h = _gram_of_coeffs((1, 1, 0, -1, 0, 0))
    split = _gram_of_coeffs((1, 3, 0, 0, 0, 0))
    if which == "hexagonal":
        b1 = b2 = _gram_of_coeffs((0, 0, 1, 0, 0, 0))
    elif which == "rhombohedral":
        b1 = _rank_one((1, 1, 3))
        b2 = _rank_one((1, 0, 3))
    else:
        raise ValueError(f"unknown family {which!r}")
    return (
        FormPair(RatForm(h), RatForm(b1)),
        FormPair(RatForm(split), RatForm(b2)),
    )


def _rank_one(v):
    return tuple(tuple(Fraction(v[i] * v[j]) for j in range(3)) for i in range(3))


def det_cubic_ratio_check(pair1, pair2):
    """The rational ratio between the determinant cubics of two pairs.

    Returns c with det cubic of pair1 == c * (det cubic of pair2) when the
    two cubics are proportional, and None otherwise (1 if both vanish)."""
    from .pairs import det_binary_cubic

    c1 = det_binary_cubic(pair1).coeffs
    c2 = det_binary_cubic(pair2).coeffs
    anchor = next(((x, y) for x, y in zip(c1, c2) if y != 0), None)
    if anchor is None:
        return Fraction(1) if all(x == 0 for x in c1) else None
    ratio = anchor[0] / anchor[1]
    if all(x == ratio * y for x, y in zip(c1, c2)):
        return ratio
    return None
