"""Representation values of positive-definite forms up to a bound.

Three independent routes compute the same thing and are cross-checked in
the tests rather than merged:

* an exact recursive descent on the rational square-completion of the
  form (authoritative; also yields representing vectors),
* a vectorized int64 kernel for value sets of integral forms in <= 3
  variables (fast; falls back to the exact route when any intermediate
  could overflow),
* a brute-force box scan with a rigorous coordinate radius (test oracle).

The bound is inclusive: a value v is reported iff 0 < v <= bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

import numpy as np

from .forms import IntForm, RatForm, evaluate, gram_matrix, is_positive_definite
from .ratmat import det_exact, solve_exact

_KERNEL_LIMIT = 1 << 50


@dataclass(frozen=True)
class RepSet:
    """Sorted representation values of one form up to a bound."""

    bound: object
    values: tuple
    witnesses: object = None

    def __contains__(self, value):
        return value in set(self.values)


@dataclass(frozen=True)
class SimRepSet:
    """Sorted value pairs (A(x), B(x)) over x with (cA + dB)(x) <= bound."""

    bound: object
    combiner: tuple
    pairs: tuple
    witnesses: object = None


@dataclass(frozen=True)
class RepCompare:
    """Outcome of comparing two representation value sets."""

    equal: bool
    value: object = None
    missing_from: object = None
    witness: object = None


def _ldl(gram):
    """Exact LDL^T data: f(x) = sum_i d_i (x_i + sum_{j>i} l_ij x_j)^2."""
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    d = []
    l = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        di = g[i][i]
        if di <= 0:
            raise ValueError("form is not positive definite")
        d.append(di)
        for j in range(i + 1, n):
            l[i][j] = g[i][j] / di
        for j in range(i + 1, n):
            for k in range(j, n):
                g[j][k] -= l[i][j] * l[i][k] * di
                g[k][j] = g[j][k]
    return d, l


def _enumerate_half(gram, bound):
    """Yield (x, value) for nonzero x with f(x) <= bound, one per +-pair.

    The highest-index nonzero coordinate of each yielded x is positive.
    """
    n = len(gram)
    d, l = _ldl(gram)
    bound = Fraction(bound)
    if bound < 0:
        return
    x = [0] * n

    def rec(i, remaining, all_zero_above):
        if i < 0:
            if not all_zero_above:
                yield tuple(x), bound - remaining
            return
        c = sum(l[i][j] * x[j] for j in range(i + 1, n))
        di = d[i]
        # integer window around the real center -c with d_i (t + c)^2 <= remaining;
        # if nonempty it contains floor(-c) or floor(-c) + 1
        t0 = floor(-c)
        if di * (t0 + c) ** 2 <= remaining:
            anchor = t0
        elif di * (t0 + 1 + c) ** 2 <= remaining:
            anchor = t0 + 1
        else:
            return
        lo = anchor
        while di * (lo - 1 + c) ** 2 <= remaining:
            lo -= 1
        hi = anchor
        while di * (hi + 1 + c) ** 2 <= remaining:
            hi += 1
        if all_zero_above:
            lo = max(lo, 0)
        for t in range(lo, hi + 1):
            x[i] = t
            yield from rec(i - 1, remaining - di * (t + c) ** 2, all_zero_above and t == 0)
        x[i] = 0

    yield from rec(n - 1, bound, True)


def _normalize_sign(v):
    """Flip v so its first nonzero coordinate is positive."""
    for c in v:
        if c > 0:
            return tuple(v)
        if c < 0:
            return tuple(-c for c in v)
    return tuple(v)


def _as_int(value):
    return int(value) if isinstance(value, Fraction) and value.denominator == 1 else value


def _exact_values(f, bound, with_witnesses):
    gram = gram_matrix(f)
    integral = isinstance(f, IntForm)
    values = set()
    witnesses = {} if with_witnesses else None
    for vec, val in _enumerate_half(gram, bound):
        val = int(val) if integral else val
        values.add(val)
        if with_witnesses:
            cand = _normalize_sign(vec)
            best = witnesses.get(val)
            if best is None or cand < best:
                witnesses[val] = cand
    return tuple(sorted(values)), witnesses


def _char_poly(mat):
    """Monic characteristic polynomial det(xI - mat), low-to-high coefficients."""
    n = len(mat)
    points = range(n + 1)
    rows = []
    rhs = []
    for p in points:
        shifted = tuple(
            tuple((Fraction(p) if i == j else Fraction(0)) - mat[i][j] for j in range(n))
            for i in range(n)
        )
        rows.append([Fraction(p) ** k for k in range(n + 1)])
        rhs.append(det_exact(shifted))
    return solve_exact(rows, rhs)


def _poly_shift(coeffs, a):
    """Coefficients of p(x + a)."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * (n + 1)
    # binomial expansion of each monomial
    binom = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        binom[k][0] = 1
        for m in range(1, k + 1):
            binom[k][m] = binom[k - 1][m - 1] + (binom[k - 1][m] if m <= k - 1 else 0)
    for k, ck in enumerate(coeffs):
        if ck:
            power = Fraction(1)
            for m in range(k, -1, -1):
                out[m] += ck * binom[k][k - m] * power
                power *= a
    return out


def _all_roots_at_least(coeffs, a):
    """For a real-rooted polynomial: are all roots >= a?  (Descartes test.)"""
    shifted = _poly_shift(coeffs, a)
    signs = [(-1) ** k * c for k, c in enumerate(shifted) if c]
    changes = sum(1 for s, t in zip(signs, signs[1:]) if (s > 0) != (t > 0))
    return changes == 0


def min_eigenvalue_lower_bound(gram, refine=24):
    """A positive rational lower bound for the least eigenvalue of a
    positive-definite Gram matrix, sharpened by exact bisection."""
    n = len(gram)
    if n == 1:
        return Fraction(gram[0][0])
    tr = sum(gram[i][i] for i in range(n))
    det = det_exact(gram)
    if det <= 0 or tr <= 0:
        raise ValueError("matrix is not positive definite")
    lo = det / tr ** (n - 1)
    hi = tr / n + 1
    poly = _char_poly(gram)
    if not _all_roots_at_least(poly, lo):
        raise AssertionError("eigenvalue seed bound failed")
    for _ in range(refine):
        mid = (lo + hi) / 2
        if _all_roots_at_least(poly, mid):
            lo = mid
        else:
            hi = mid
    return lo


def _floor_sqrt_fraction(q):
    """floor(sqrt(q)) for a nonnegative Fraction."""
    if q < 0:
        raise ValueError("negative radicand")
    return isqrt(q.numerator * q.denominator) // q.denominator


def box_representations(f, bound):
    """Value set by brute force over a rigorous coordinate box (test oracle)."""
    if not isinstance(f, IntForm):
        raise ValueError("box oracle works on integral forms")
    if not is_positive_definite(f):
        raise ValueError("form is not positive definite")
    bound = int(bound)
    if bound <= 0:
        return ()
    lam = min_eigenvalue_lower_bound(gram_matrix(f))
    radius = _floor_sqrt_fraction(Fraction(bound) / lam)
    axis = np.arange(-radius, radius + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * f.n), indexing="ij")
    vals = np.zeros_like(grids[0])
    for i in range(f.n):
        vals += f.coeffs[i] * grids[i] * grids[i]
    pos = f.n
    for i in range(f.n):
        for j in range(i + 1, f.n):
            vals += f.coeffs[pos] * grids[i] * grids[j]
            pos += 1
    flat = vals.ravel()
    flat = flat[(flat > 0) & (flat <= bound)]
    return tuple(np.unique(flat).tolist())


def _kernel_mask_unary(a, bound):
    mask = np.zeros(bound + 1, dtype=bool)
    k = 1
    while a * k * k <= bound:
        mask[a * k * k] = True
        k += 1
    return mask


def _tmax_exact(r):
    """Elementwise floor(sqrt(r)) for a nonnegative int64 array."""
    t = np.sqrt(r.astype(np.float64)).astype(np.int64)
    t = np.where((t + 1) * (t + 1) <= r, t + 1, t)
    t = np.where(t * t > r, t - 1, t)
    return t


def _residue_values(mask, t_cap, residue, modulus, quad, shift):
    """Mark (T^2 + quad) / shift for all T = residue (mod modulus), |T| <= cap."""
    t0 = -t_cap + ((residue + t_cap) % modulus)
    count = np.where(t0 <= t_cap, (t_cap - t0) // modulus + 1, 0)
    total = int(count.sum())
    if not total:
        return
    starts = np.cumsum(count) - count
    j = np.arange(total, dtype=np.int64) - np.repeat(starts, count)
    t = np.repeat(t0, count) + modulus * j
    q = np.repeat(quad, count)
    vals = (t * t + q) // shift
    mask[vals] = True


def _kernel_mask_binary(coeffs, bound):
    a, b, s12 = coeffs
    cap = 4 * a * bound
    aa = 4 * a * b - s12 * s12
    mask = np.zeros(bound + 1, dtype=bool)
    x2max = isqrt(cap * aa) // aa
    x2 = np.arange(0, x2max + 2, dtype=np.int64)
    quad = aa * x2 * x2
    keep = quad <= cap
    x2, quad = x2[keep], quad[keep]
    t_cap = _tmax_exact(cap - quad)
    residue = (s12 * x2) % (2 * a)
    _residue_values(mask, t_cap, residue, 2 * a, quad, 4 * a)
    mask[0] = False
    return mask


def _kernel_mask_ternary(coeffs, bound):
    a, b, c, s12, s13, s23 = coeffs
    cap = 4 * a * bound
    a2 = 4 * a * b - s12 * s12
    b2 = 4 * a * c - s13 * s13
    c2 = 4 * a * s23 - 2 * s12 * s13
    disc2 = 4 * a2 * b2 - c2 * c2
    mask = np.zeros(bound + 1, dtype=bool)
    x3max = isqrt(4 * a2 * cap * disc2) // disc2
    x3 = np.arange(0, x3max + 2, dtype=np.int64)
    d = 4 * a2 * cap - disc2 * x3 * x3
    ok = d >= 0
    x3, d = x3[ok], d[ok]
    sq = _tmax_exact(d)
    # one unit of slack each side absorbs the sqrt truncation;
    # the exact quad <= cap filter below trims it back
    lo = -((c2 * x3 + sq) // (2 * a2)) - 1
    hi = (-c2 * x3 + sq) // (2 * a2) + 1
    lo = np.where(x3 == 0, np.maximum(lo, 0), lo)
    count = np.maximum(hi - lo + 1, 0)
    total = int(count.sum())
    if total:
        starts = np.cumsum(count) - count
        j = np.arange(total, dtype=np.int64) - np.repeat(starts, count)
        x2 = np.repeat(lo, count) + j
        x3r = np.repeat(x3, count)
        quad = a2 * x2 * x2 + c2 * x2 * x3r + b2 * x3r * x3r
        keep = quad <= cap
        x2, x3r, quad = x2[keep], x3r[keep], quad[keep]
        if len(x2):
            t_cap = _tmax_exact(cap - quad)
            residue = (s12 * x2 + s13 * x3r) % (2 * a)
            _residue_values(mask, t_cap, residue, 2 * a, quad, 4 * a)
    mask[0] = False
    return mask


def value_mask(f, bound):
    """Boolean mask m with m[v] = True iff f represents v (0 < v <= bound)."""
    if not isinstance(f, IntForm) or f.n > 3:
        raise ValueError("the kernel covers integral forms in <= 3 variables")
    if not is_positive_definite(f):
        raise ValueError("form is not positive definite")
    bound = int(bound)
    if bound < 0:
        bound = 0
    if bound == 0:
        return np.zeros(1, dtype=bool)
    if 4 * f.coeffs[0] * bound > _KERNEL_LIMIT:
        values, _ = _exact_values(f, bound, False)
        mask = np.zeros(bound + 1, dtype=bool)
        mask[list(values)] = True
        return mask
    if f.n == 1:
        return _kernel_mask_unary(f.coeffs[0], bound)
    if f.n == 2:
        return _kernel_mask_binary(f.coeffs, bound)
    return _kernel_mask_ternary(f.coeffs, bound)


def representations_up_to(f, bound, with_witnesses=False, engine="auto"):
    """All values 0 < v <= bound represented by a positive-definite form."""
    if not is_positive_definite(f):
        raise ValueError("form is not positive definite")
    if engine not in ("auto", "exact", "kernel", "box"):
        raise ValueError(f"unknown engine {engine!r}")
    integral_bound = isinstance(bound, int) or (
        isinstance(bound, Fraction) and bound.denominator == 1
    )
    if engine == "kernel" or (
        engine == "auto"
        and isinstance(f, IntForm)
        and f.n <= 3
        and not with_witnesses
        and integral_bound
        and 4 * f.coeffs[0] * int(bound) <= _KERNEL_LIMIT
    ):
        mask = value_mask(f, int(bound))
        return RepSet(bound=bound, values=tuple(np.flatnonzero(mask).tolist()))
    if engine == "box":
        return RepSet(bound=bound, values=box_representations(f, bound))
    values, witnesses = _exact_values(f, bound, with_witnesses)
    return RepSet(bound=bound, values=values, witnesses=witnesses)


def vectors_with_value(f, value):
    """All sign-normalized vectors x with f(x) = value, sorted."""
    if value <= 0:
        return ()
    out = set()
    for vec, val in _enumerate_half(gram_matrix(f), value):
        if val == value:
            out.add(_normalize_sign(vec))
    return tuple(sorted(out))


def rep_equal_up_to(f, g, bound):
    """Compare representation value sets; on failure report the smallest
    disagreeing value, which form misses it, and a vector from the other."""
    vf = representations_up_to(f, bound).values
    vg = representations_up_to(g, bound).values
    if vf == vg:
        return RepCompare(equal=True)
    sf, sg = set(vf), set(vg)
    diff = min(sf.symmetric_difference(sg))
    if diff in sf:
        return RepCompare(
            equal=False, value=diff, missing_from=2, witness=vectors_with_value(f, diff)[0]
        )
    return RepCompare(
        equal=False, value=diff, missing_from=1, witness=vectors_with_value(g, diff)[0]
    )


def simultaneous_reps(pair, c, d, bound):
    """Sorted pairs (A(x), B(x)) over all x with (cA + dB)(x) <= bound.

    The combining form cA + dB must be positive definite; each pair carries
    a sign-normalized witness vector.
    """
    c, d = Fraction(c), Fraction(d)
    ga, gb = pair.a.gram, pair.b.gram
    combined = RatForm(
        tuple(tuple(c * ga[i][j] + d * gb[i][j] for j in range(3)) for i in range(3))
    )
    if not is_positive_definite(combined):
        raise ValueError("the combining form cA + dB is not positive definite")
    found = {}
    for vec, _ in _enumerate_half(combined.gram, bound):
        key = (_as_int(evaluate(pair.a, vec)), _as_int(evaluate(pair.b, vec)))
        cand = _normalize_sign(vec)
        best = found.get(key)
        if best is None or cand < best:
            found[key] = cand
    pairs = tuple(sorted(found))
    return SimRepSet(bound=bound, combiner=(c, d), pairs=pairs, witnesses=dict(sorted(found.items())))
