"""End-to-end acceptance checks, one test per numbered criterion.

``pytest -v tests/test_acceptance.py`` prints one pass/fail line per
criterion.  Every comparison is exact — integers and fractions, zero
tolerance — and each criterion asserts its own wall-clock budget at the
end, so a pass certifies both the mathematics and the runtime.

Criteria on the gate:

 1. the classic binary pair x^2-xy+y^2 / x^2+3y^2 represents the same
    values up to 100,000                                        (< 5 s)
 2. both parametric families verify symbolically at 20 random rational
    parameter points and numerically to 10,000 on 5 integer instances
    per family                                                  (< 30 s)
 3. all 53 bundled sets are pairwise representation-equal up to 100,000
    and every stored determinant/ratio is reproduced exactly from Gram
    determinants                                                (< 10 min)
 4. the region driver at diagonal bound 12 rediscovers every bundled set
    it can see, emits nothing spurious, and certifies both completeness
    markers                                                     (< 30 min)
 5. the binary search agrees with brute-force enumeration over all
    reduced binary forms with coefficients up to 40             (< 1 min)
 6. 100 random pairs reach their canonical pair via exact transition
    matrices, with the shifted-resolvent determinant identity   (< 30 s)
 7. the rank-4 ring is commutative/associative on 100 random pairs and
    the power-basis determinant identity holds for 100 elements (< 30 s)
 8. the determinant-cubic ratio of the attached ternary pairs is a
    rational constant for both families, 1/4 for the first      (< 1 s)
 9. order-2 and order-3 cubic symmetries verify exactly on 20 split
    rational cubics                                             (< 5 s)
10. the Hilbert symbol product over all places is 1 for 50 random
    rational pairs                                              (< 1 s)

The full diagonal-bound-48 region sweep is available as an opt-in
long-running job (set RUN_FULL_REGION_SWEEP=1); it does not gate.
"""

import math
import os
import random
from fractions import Fraction
from time import perf_counter

import numpy as np
import pytest

from repforms import (
    FAMILY_NAMES,
    BinaryCubic,
    FormPair,
    GroupElement,
    IntForm,
    act,
    candidate_forms,
    canonical_coeffs,
    canonical_pair,
    cubic_automorphism_order2,
    cubic_automorphism_order3,
    det_binary_cubic,
    det_cubic_ratio_check,
    equivalent_over_Z,
    family_identity_all_parameters,
    family_ternary_pairs,
    generator_char_poly,
    gram_determinant,
    hilbert_product,
    is_minkowski_reduced,
    power_basis_matrix,
    quartic_structure,
    rep_equal_up_to,
    representations_up_to,
    resolvent,
    search_region_driver,
    shift_cubic,
    table_dataset,
    transform_cubic,
    transition_matrices,
    value_mask,
    verify_family_identity,
    verify_table_set,
)
from repforms.ratmat import (
    as_fraction_matrix,
    det_exact,
    identity,
    mat_mul,
    mat_scale,
    mat_sub,
)
from repforms.search import matches_value_set


def _report(number, elapsed, budget):
    assert elapsed < budget, f"criterion {number}: {elapsed:.1f}s over {budget}s budget"
    print(f"criterion {number}: PASS in {elapsed:.1f}s (budget {budget}s)")


def test_criterion_01_binary_pair_rep_equal_to_100k():
    t0 = perf_counter()
    f = IntForm((1, 1, -1))
    g = IntForm((1, 3, 0))
    assert rep_equal_up_to(f, g, 100_000).equal
    assert equivalent_over_Z(f, g) is None
    _report(1, perf_counter() - t0, 5)


def test_criterion_02_family_identities_symbolic_and_numeric():
    t0 = perf_counter()
    rng = random.Random(190)
    for name in FAMILY_NAMES:
        assert family_identity_all_parameters(name)
        for _ in range(20):
            c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            d = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            assert verify_family_identity(name, c, d, 40), (name, c, d)
        for c, d in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]:
            assert verify_family_identity(name, c, d, 10_000), (name, c, d)
    _report(2, perf_counter() - t0, 30)


def test_criterion_03_all_table_sets_verified_to_100k():
    t0 = perf_counter()
    for s in table_dataset():
        report = verify_table_set(s.number, 100_000)
        assert report.ok, f"set {s.number}: {report}"
        assert report.pairs_checked == len(s) * (len(s) - 1) // 2
        base = None
        for f, det, ratio in zip(s.forms, s.determinants, s.ratios):
            assert gram_determinant(f) == det
            base = det / ratio if base is None else base
            assert det / ratio == base
    first = table_dataset()[0]
    assert first.determinants == (13824, 19008)
    assert first.ratios == (8, 11)
    _report(3, perf_counter() - t0, 600)


def test_criterion_04_region_driver_rediscovers_bound_12_sets():
    t0 = perf_counter()
    report = search_region_driver(12, verify_bound=100_000, jobs=1)
    elapsed = perf_counter() - t0

    by_key = {
        frozenset(canonical_coeffs(f) for f in s.forms): s.number for s in table_dataset()
    }
    found = {}
    for ds in report.sets:
        key = frozenset(canonical_coeffs(f) for f in ds.forms)
        assert key in by_key, f"spurious group {[f.coeffs for f in ds.forms]}"
        found[by_key[key]] = ds
    assert len(found) == len(report.sets)

    fully_within = {
        s.number for s in table_dataset() if all(f.coeffs[2] <= 12 for f in s.forms)
    }
    seedable = {
        s.number for s in table_dataset() if any(f.coeffs[2] <= 12 for f in s.forms)
    }
    assert {30, 31, 34, 39, 44, 47, 48, 50, 53} <= fully_within
    assert fully_within <= set(found)
    assert set(found) == seedable
    assert all(ds.complete and ds.verified_to == 100_000 for ds in found.values())

    # the two completeness markers, shown individually on a rediscovered set
    values = representations_up_to(IntForm((1, 1, 1, 0, 0, 0)), 3000).values
    res = candidate_forms(values, 3, prune_subsets=True)
    assert res.head_cover_ok
    assert res.interval_ok
    _report(4, elapsed, 1800)


@pytest.mark.skipif(
    not os.environ.get("RUN_FULL_REGION_SWEEP"),
    reason="multi-hour full sweep; set RUN_FULL_REGION_SWEEP=1 to run",
)
def test_criterion_04_full_region_sweep_opt_in():
    report = search_region_driver(48, verify_bound=100_000, jobs=1)
    by_key = {
        frozenset(canonical_coeffs(f) for f in s.forms): s.number for s in table_dataset()
    }
    found = set()
    for ds in report.sets:
        key = frozenset(canonical_coeffs(f) for f in ds.forms)
        assert key in by_key, f"spurious group {[f.coeffs for f in ds.forms]}"
        found.add(by_key[key])
    seedable = {
        s.number for s in table_dataset() if any(f.coeffs[2] <= 48 for f in s.forms)
    }
    assert found == seedable


def test_criterion_05_binary_search_matches_brute_force():
    t0 = perf_counter()
    seeds = [
        IntForm((a, b, c))
        for a in range(1, 7)
        for b in range(a, 7)
        for c in range(-a, a + 1)
        if is_minkowski_reduced(IntForm((a, b, c)))
    ]
    targets = sorted({representations_up_to(g, 40).values for g in seeds})

    oracle_forms = []
    oracle_masks = []
    for a in range(1, 41):
        for b in range(a, 41):
            for c in range(-a, a + 1):
                f = IntForm((a, b, c))
                if is_minkowski_reduced(f):
                    oracle_forms.append(f)
                    oracle_masks.append(value_mask(f, 40))
    oracle_masks = np.array(oracle_masks)

    for values in targets:
        cap = values[-1]
        want = np.zeros(cap + 1, dtype=bool)
        want[list(values)] = True
        expected = sorted(
            f.coeffs
            for f, m in zip(oracle_forms, oracle_masks)
            if np.array_equal(m[: cap + 1], want)
        )
        result = candidate_forms(values, 2, prune_subsets=True)
        assert result.certified_complete, values
        got = sorted(f.coeffs for f in result.forms if matches_value_set(f, values))
        assert got == expected, values
    _report(5, perf_counter() - t0, 60)


def _random_pair(rng):
    def coeffs():
        return tuple(rng.randint(-4, 4) for _ in range(6))

    return FormPair(IntForm(coeffs()), IntForm(coeffs()))


def _pencil_determinant_scale(pair, h):
    qa, qb = pair.value_at(h)
    return 4 * det_exact(
        mat_sub(mat_scale(Fraction(qb), pair.a.gram), mat_scale(Fraction(qa), pair.b.gram))
    )


def test_criterion_06_canonical_pair_round_trip():
    t0 = perf_counter()
    rng = random.Random(191)
    done = 0
    while done < 100:
        pair = _random_pair(rng)
        h = tuple(rng.randint(-2, 2) for _ in range(3))
        h0 = rng.randint(-2, 2)
        if h == (0, 0, 0) or _pencil_determinant_scale(pair, h) == 0:
            continue
        data = generator_char_poly(pair, h0, h)
        w, v = transition_matrices(pair, h0, h)
        target = canonical_pair(data.poly)
        assert act(GroupElement(w, v), pair) == target
        a2 = data.poly.a2
        assert shift_cubic(resolvent(data.poly), Fraction(a2, 3)) == det_binary_cubic(target)
        done += 1
    _report(6, perf_counter() - t0, 30)


def test_criterion_07_ring_laws_and_power_basis_determinant():
    t0 = perf_counter()
    rng = random.Random(192)
    for _ in range(100):
        ring = quartic_structure(_random_pair(rng))
        x, y, z = (tuple(rng.randint(-3, 3) for _ in range(4)) for _ in range(3))
        assert ring.multiply(x, y) == ring.multiply(y, x)
        assert ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z))
    for _ in range(100):
        pair = _random_pair(rng)
        h = tuple(rng.randint(-2, 2) for _ in range(3))
        h0 = rng.randint(-2, 2)
        m = power_basis_matrix(pair, h0, h)
        assert det_exact(as_fraction_matrix(m)) == _pencil_determinant_scale(pair, h)
    _report(7, perf_counter() - t0, 30)


def test_criterion_08_determinant_cubic_ratio_is_rational():
    t0 = perf_counter()
    hex_ratio = det_cubic_ratio_check(*family_ternary_pairs("hexagonal"))
    rho_ratio = det_cubic_ratio_check(*family_ternary_pairs("rhombohedral"))
    assert isinstance(hex_ratio, Fraction) and hex_ratio == Fraction(1, 4)
    assert isinstance(rho_ratio, Fraction) and rho_ratio != 0
    _report(8, perf_counter() - t0, 1)


def _is_rational_square(x):
    if x < 0:
        return False
    return (
        math.isqrt(x.numerator) ** 2 == x.numerator
        and math.isqrt(x.denominator) ** 2 == x.denominator
    )


def test_criterion_09_cubic_symmetries_on_split_cubics():
    t0 = perf_counter()
    rng = random.Random(193)
    done = 0
    while done < 20:
        roots = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)
        ]
        if len(set(roots)) != 3:
            continue
        lead = Fraction(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 6))
        r1, r2, r3 = roots
        f = BinaryCubic(
            lead,
            -lead * (r1 + r2 + r3),
            lead * (r1 * r2 + r1 * r3 + r2 * r3),
            -lead * r1 * r2 * r3,
        )
        u = Fraction(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 6))

        v2 = cubic_automorphism_order2(f, (r1.numerator, r1.denominator), u)
        assert mat_mul(v2, v2) == mat_scale(u * u, identity(2))
        assert transform_cubic(f, v2).coeffs == tuple(
            det_exact(v2) * u * t for t in f.coeffs
        )

        assert f.disc != 0 and _is_rational_square(f.disc)
        v3 = cubic_automorphism_order3(f, u)
        assert mat_mul(mat_mul(v3, v3), v3) == mat_scale(u**3, identity(2))
        assert transform_cubic(f, v3).coeffs == tuple(
            det_exact(v3) * u * t for t in f.coeffs
        )
        done += 1
    _report(9, perf_counter() - t0, 5)


def test_criterion_10_hilbert_product_formula():
    t0 = perf_counter()
    rng = random.Random(194)
    for _ in range(50):
        a = Fraction(rng.choice([-1, 1]) * rng.randint(1, 60), rng.randint(1, 60))
        b = Fraction(rng.choice([-1, 1]) * rng.randint(1, 60), rng.randint(1, 60))
        assert hilbert_product(a, b) == 1
    _report(10, perf_counter() - t0, 1)
