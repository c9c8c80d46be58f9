"""Recursive search for reduced forms with a prescribed value set.

Given a finite increasing sequence of target values q_1 < ... < q_t, the
recursion fills a coefficient matrix column by column inside the
reduction cone: each diagonal entry and each pair value
s_mm + s_nn + s_mn (the value at e_m + e_n, in coefficient storage) is
drawn from the target sequence.  Two conditions certify that nothing is
lost by restricting those choices to the targets:

  * head cover: after completing n columns, the next diagonal entry is
    capped by the first target the partial form fails to represent, and
    the cap must stay strictly inside the sequence;
  * interval cap: the admissible window for every pair value, cut out by
    the reduction inequalities, must end at or below q_t.

When both hold at every step, the emitted list provably contains every
Minkowski-reduced form whose values up to q_t are exactly the targets.
A driver enumerates reduced primitive ternary seed forms, searches each
seed's value set, and groups the mutually representation-equal
inequivalent classes that survive exact-match filtering.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

import numpy as np

from .equivalence import canonical_coeffs
from .families import is_family_instance
from .forms import IntForm, coefficient_pairs, is_positive_definite
from .repsets import value_mask

_MASK_CACHE_LIMIT = 150_000
_mask_cache = {}


def _rep_mask_packed(coeffs, cap):
    """Packed representation mask (values 0..cap) of a small form, cached."""
    key = (coeffs, cap)
    hit = _mask_cache.get(key)
    if hit is not None:
        return hit
    mask = value_mask(IntForm(coeffs), cap)
    packed = np.packbits(mask)
    if len(_mask_cache) >= _MASK_CACHE_LIMIT:
        _mask_cache.clear()
    _mask_cache[key] = packed
    return packed


def _rep_mask(coeffs, cap):
    packed = _rep_mask_packed(coeffs, cap)
    return np.unpackbits(packed, count=cap + 1).view(bool)


def finiteness_guard(partial, values):
    """Largest index t2 in 1..t such that the partial form represents all
    of values[0..t2-2].  Always finite: a positive form in fewer variables
    misses some value of any strictly larger form."""
    values = tuple(values)
    t = len(values)
    mask = _rep_mask(partial.coeffs, values[-1])
    covered = 0
    for q in values:
        if mask[q]:
            covered += 1
        else:
            break
    return min(covered + 1, t)


def matches_value_set(form, values):
    """Exact test: the values of `form` up to max(values) equal `values`."""
    values = tuple(values)
    cap = values[-1]
    mask = value_mask(form, cap) if form.n <= 3 else _exact_mask(form, cap)
    want = np.zeros(cap + 1, dtype=bool)
    want[list(values)] = True
    return bool(np.array_equal(mask, want))


def _exact_mask(form, cap):
    from .repsets import representations_up_to

    mask = np.zeros(cap + 1, dtype=bool)
    mask[list(representations_up_to(form, cap).values)] = True
    return mask


@dataclass(frozen=True)
class SearchResult:
    """Forms emitted by the recursion plus its completeness certificates."""

    forms: tuple
    head_cover_ok: bool
    interval_ok: bool

    @property
    def certified_complete(self):
        return self.head_cover_ok and self.interval_ok


def _validate_values(values):
    values = tuple(int(q) for q in values)
    if not values or values[0] <= 0:
        raise ValueError("values must be positive")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError("values must be strictly increasing")
    return values


def candidate_forms(values, n, *, prune_subsets=False, mask_cap=None):
    """All Minkowski-reduced n-ary forms whose diagonal and pair values lie
    in `values`, with values[: index of s_nn] fully represented.

    With prune_subsets=True, branches whose partial form already
    represents something <= q_t outside `values` are cut; this never
    removes a form whose value set matches `values` exactly.
    """
    values = _validate_values(values)
    if not 1 <= n <= 4:
        raise ValueError("only 1 to 4 variables supported")
    t = len(values)
    q_t = values[-1]
    cap = max(mask_cap or 0, q_t)
    lam_mask = np.zeros(cap + 1, dtype=bool)
    lam_mask[list(values)] = True

    diag = [0] * (n + 1)  # 1-based
    cross = {}
    out = []
    flags = {"head": True, "interval": True}

    def window(lo, hi):
        return values[bisect_left(values, lo) : bisect_right(values, hi)]

    def partial_coeffs(cols):
        res = []
        for i, j in coefficient_pairs(cols):
            res.append(diag[i] if i == j else cross[(i, j)])
        return tuple(res)

    def pair_interval(j, col):
        """Integer bounds for the pair value diag[j] + diag[col] + c where
        c is the unset coefficient s_{j,col}, from the reduction cone."""
        c_lo = None
        c_hi = 0 if j == col - 1 else None
        for middles in product((-1, 0, 1), repeat=col - 1 - j):
            for sj in (1, -1):
                v = [0] * (col + 1)  # 1-based
                v[j] = sj
                v[j + 1 : col] = middles
                v[col] = 1
                base = 0
                for i in range(j, col + 1):
                    if v[i]:
                        base += diag[i] * v[i] * v[i]
                for (i, k), cc in cross.items():
                    if i >= j and k <= col and not (i == j and k == col):
                        base += cc * v[i] * v[k]
                if sj == 1:
                    bound = diag[col] - base
                    c_lo = bound if c_lo is None else max(c_lo, bound)
                else:
                    bound = base - diag[col]
                    c_hi = bound if c_hi is None else min(c_hi, bound)
        plo = diag[j] + diag[col] + c_lo
        phi = diag[j] + diag[col] + c_hi
        if phi > q_t:
            flags["interval"] = False
        return plo, phi

    def descend(m, col, lo, hi):
        for q in window(lo, hi):
            if m == col:
                diag[col] = q
            else:
                cross[(m, col)] = q - diag[m] - diag[col]
            if m > 1:
                plo, phi = pair_interval(m - 1, col)
                descend(m - 1, col, plo, phi)
            else:
                coeffs = partial_coeffs(col)
                form = IntForm(coeffs)
                if not is_positive_definite(form):
                    continue
                if col == n:
                    out.append(form)
                    continue
                mask = _rep_mask(coeffs, cap)
                if prune_subsets and bool(np.any(mask[: q_t + 1] & ~lam_mask[: q_t + 1])):
                    continue
                covered = 0
                for qq in values:
                    if mask[qq]:
                        covered += 1
                    else:
                        break
                t2 = min(covered + 1, t)
                if t2 >= t:
                    flags["head"] = False
                descend(col + 1, col + 1, diag[col], values[t2 - 1])
        if m != col:
            cross.pop((m, col), None)

    descend(1, 1, values[0], values[0])
    out.sort(key=lambda f: f.coeffs)
    return SearchResult(tuple(out), flags["head"], flags["interval"])


@dataclass(frozen=True)
class DiscoveredSet:
    """A group of mutually representation-equal, pairwise inequivalent forms."""

    forms: tuple
    verified_to: int
    complete: bool


@dataclass(frozen=True)
class DriverReport:
    sets: tuple
    seeds_scanned: int
    distinct_value_sets: int


def _reduced_primitive_seeds(s33_bound):
    """Eisenstein-reduced primitive positive-definite ternary forms with
    s33 <= bound, in lexicographic coefficient order."""
    from math import gcd

    from .forms import is_eisenstein_reduced

    seeds = []
    for s11 in range(1, s33_bound + 1):
        for s22 in range(s11, s33_bound + 1):
            for s33 in range(s22, s33_bound + 1):
                for s12, s13, s23 in product(
                    range(-s11, s11 + 1), range(-s11, s11 + 1), range(-s22, s22 + 1)
                ):
                    offs = (s12, s13, s23)
                    positive = all(x > 0 for x in offs)
                    nonpos = all(x <= 0 for x in offs)
                    if not (positive or nonpos):
                        continue
                    if gcd(s11, s22, s33, s12, s13, s23) != 1:
                        continue
                    f = IntForm((s11, s22, s33, s12, s13, s23))
                    if not is_positive_definite(f):
                        continue
                    if is_eisenstein_reduced(f):
                        seeds.append(f)
    return seeds


def _run_value_set(args):
    """Search one value set; return exact-match canonical classes + markers."""
    packed, m_cap = args
    mask = np.unpackbits(np.frombuffer(packed, dtype=np.uint8), count=m_cap + 1).view(bool)
    values = tuple(int(v) for v in np.nonzero(mask)[0])
    if not values:
        return (), True
    result = candidate_forms(values, 3, prune_subsets=True, mask_cap=m_cap)
    quick_cap = min(values[-1], 256)
    want_quick = np.zeros(quick_cap + 1, dtype=bool)
    want_quick[[v for v in values if v <= quick_cap]] = True
    survivors = [
        f
        for f in result.forms
        if np.array_equal(value_mask(f, quick_cap), want_quick)
        and matches_value_set(f, values)
    ]
    classes = sorted({canonical_coeffs(f) for f in survivors})
    return tuple(classes), result.certified_complete


def search_region_driver(s33_bound, *, m_cap=3000, verify_bound=100_000, jobs=1):
    """Search every reduced primitive ternary seed with s33 <= bound.

    Per distinct seed value set: run the recursion, keep exact value-set
    matches, reduce to canonical class representatives, group.  Groups
    consisting entirely of family members are dropped, the rest are
    re-verified by full value comparison up to verify_bound and split
    accordingly; surviving groups of at least two classes are reported.
    """
    if s33_bound < 1:
        raise ValueError("bound must be at least 1")
    seeds = _reduced_primitive_seeds(s33_bound)
    jobs_list = []
    seen = set()
    for f in seeds:
        mask = value_mask(f, m_cap)
        key = np.packbits(mask).tobytes()
        if key in seen:
            continue
        seen.add(key)
        jobs_list.append((key, m_cap))

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            runs = list(pool.map(_run_value_set, jobs_list, chunksize=32))
    else:
        runs = [_run_value_set(j) for j in jobs_list]

    groups = {}
    for classes, complete in runs:
        if len(classes) >= 2:
            groups[classes] = groups.get(classes, True) and complete

    sets = []
    for classes, complete in sorted(groups.items()):
        members = [IntForm(c) for c in classes]
        if all(is_family_instance(f) is not None for f in members):
            continue
        by_mask = {}
        for f in members:
            key = np.packbits(value_mask(f, verify_bound)).tobytes()
            by_mask.setdefault(key, []).append(f)
        for part in by_mask.values():
            if len(part) >= 2:
                sets.append(
                    DiscoveredSet(
                        forms=tuple(sorted(part, key=lambda f: f.coeffs)),
                        verified_to=verify_bound,
                        complete=complete,
                    )
                )
    sets.sort(key=lambda s: tuple(f.coeffs for f in s.forms))
    return DriverReport(tuple(sets), len(seeds), len(jobs_list))
