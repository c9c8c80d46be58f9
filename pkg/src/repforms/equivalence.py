"""Integral and rational equivalence of positive-definite forms.

Two integral forms are Z-equivalent when some unimodular substitution
carries one into the other; the search assembles the substitution row by
row from vectors representing the target diagonal entries.  Canonical
representatives come from bases of minimal vectors: a reduced basis
realizes the successive minima on the diagonal (true in <= 4 variables),
so enumerating minimum-attaining vectors finds every reduced basis of the
class and the lexicographically least reduced coefficient tuple is a
complete invariant.
"""

from __future__ import annotations

from fractions import Fraction

from .forms import (
    IntForm,
    coefficient_pairs,
    double_gram,
    gram_determinant,
    gram_matrix,
    is_eisenstein_reduced,
    is_minkowski_reduced,
    is_positive_definite,
)
from .repsets import _enumerate_half, representations_up_to


def rational_square(q):
    """True iff the nonzero rational number q is a square in Q."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero is excluded (square test in the unit group)")
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    return rn is not None and rd is not None


def _isqrt_exact(m):
    from math import isqrt

    r = isqrt(m)
    return r if r * r == m else None


def rationally_equivalent_by_det(f, g):
    """Necessary determinant test for equivalence over Q: the ratio of the
    Gram determinants must be a rational square."""
    df, dg = gram_determinant(f), gram_determinant(g)
    if df == 0 or dg == 0:
        raise ValueError("degenerate form")
    return rational_square(df / dg)


def _short_vectors_by_value(f, bound):
    """Map value -> sorted tuple of vectors (both signs) with f(v) = value <= bound."""
    table = {}
    for vec, val in _enumerate_half(gram_matrix(f), bound):
        val = int(val)
        bucket = table.setdefault(val, set())
        bucket.add(tuple(vec))
        bucket.add(tuple(-c for c in vec))
    return {val: tuple(sorted(vs)) for val, vs in table.items()}


def successive_minima(f):
    """The n successive minima of a positive-definite integral form."""
    minima, _ = _minima_with_vectors(f)
    return minima


def _minima_with_vectors(f):
    if not is_positive_definite(f):
        raise ValueError("form is not positive definite")
    n = f.n
    cap = max(f.coeffs[:n])
    table = _short_vectors_by_value(f, cap)
    chosen = []
    minima = []
    for val in sorted(table):
        for vec in table[val]:
            if _int_rank(chosen + [vec]) > len(chosen):
                chosen.append(vec)
                minima.append(val)
                if len(minima) == n:
                    return tuple(minima), table
    raise AssertionError("could not realize the successive minima")


def _int_rank(rows):
    """Rank of a small integer matrix, by fraction-free elimination."""
    work = [list(r) for r in rows]
    m = len(work)
    cols = len(work[0]) if work else 0
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, m) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        for i in range(rank + 1, m):
            if work[i][col]:
                fct = work[i][col]
                work[i] = [pv * x - fct * y for x, y in zip(work[i], work[rank])]
        rank += 1
    return rank


def _int_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * _int_det(minor)
    return total


def _coeffs_from_basis(f, rows):
    """Coefficient tuple of f restricted to the sublattice spanned by rows."""
    n = len(rows)
    dg = double_gram(f)

    def cross(u, v):
        return sum(u[i] * sum(dg[i][j] * v[j] for j in range(f.n)) for i in range(f.n))

    out = []
    for i, j in coefficient_pairs(n):
        if i == j:
            out.append(cross(rows[i - 1], rows[i - 1]) // 2)
        else:
            out.append(cross(rows[i - 1], rows[j - 1]))
    return tuple(out)


def _reduction_predicate(n):
    if n == 3:
        return is_eisenstein_reduced
    return is_minkowski_reduced


_CANON_CACHE_LIMIT = 500_000
_canon_cache = {}


def canonical_form(f):
    """The canonical representative of the Z-class of f: the
    lexicographically least reduced coefficient tuple over all bases of
    minimum-attaining vectors."""
    hit = _canon_cache.get(f.coeffs)
    if hit is not None:
        return IntForm(hit)
    minima, table = _minima_with_vectors(f)
    candidates = [table[m] for m in minima]
    reduced = _reduction_predicate(f.n)
    n = f.n
    best = None
    rows = []

    def rec(i):
        nonlocal best
        if i == n:
            if abs(_int_det(rows)) != 1:
                return
            coeffs = _coeffs_from_basis(f, rows)
            cand = IntForm(coeffs)
            if reduced(cand) and (best is None or coeffs < best):
                best = coeffs
            return
        for vec in candidates[i]:
            rows.append(vec)
            if _int_rank(rows) == len(rows):
                rec(i + 1)
            rows.pop()

    rec(0)
    if best is None:
        raise AssertionError("no reduced minimal-vector basis found")
    if len(_canon_cache) >= _CANON_CACHE_LIMIT:
        _canon_cache.clear()
    _canon_cache[f.coeffs] = best
    _canon_cache.setdefault(best, best)
    return IntForm(best)


def canonical_coeffs(f):
    """Coefficient tuple of the canonical representative."""
    return canonical_form(f).coeffs


def equivalent_over_Z(f, g):
    """A unimodular witness w with f(x w) = g(x), or None.

    The rows of w represent g's diagonal in f and match all of g's cross
    coefficients; determinant equality then forces det w = +-1.
    """
    if not isinstance(f, IntForm) or not isinstance(g, IntForm):
        raise ValueError("integral forms expected")
    if f.n != g.n:
        raise ValueError("dimension mismatch")
    if not (is_positive_definite(f) and is_positive_definite(g)):
        raise ValueError("forms must be positive definite")
    if gram_determinant(f) != gram_determinant(g):
        return None
    n = f.n
    diag_g = g.coeffs[:n]
    cap = max(diag_g)
    vf = set(representations_up_to(f, cap).values)
    if any(d not in vf for d in diag_g):
        return None
    table = _short_vectors_by_value(f, cap)
    candidates = [table.get(d, ()) for d in diag_g]
    if any(not c for c in candidates):
        return None
    dgf = double_gram(f)

    def cross(u, v):
        return sum(u[i] * sum(dgf[i][j] * v[j] for j in range(n)) for i in range(n))

    rows = []

    def rec(i):
        if i == n:
            return tuple(rows)
        for vec in candidates[i]:
            ok = True
            for j in range(i):
                if cross(rows[j], vec) != g.coeff(j + 1, i + 1):
                    ok = False
                    break
            if ok:
                rows.append(vec)
                found = rec(i + 1)
                if found is not None:
                    return found
                rows.pop()
        return None

    return rec(0)


def dedup_classes(forms):
    """One canonical representative per Z-class, sorted by coefficients."""
    seen = {}
    for f in forms:
        c = canonical_coeffs(f)
        seen.setdefault(c, IntForm(c))
    return tuple(seen[c] for c in sorted(seen))
