"""Tests for the two parametric families of representation-equal pairs."""

import random
from fractions import Fraction

import pytest

from repforms import (
    FAMILY_NAMES,
    IntForm,
    RatForm,
    det_binary_cubic,
    det_cubic_ratio_check,
    equivalent_over_Z,
    family_identity_all_parameters,
    family_pair,
    family_ternary_pairs,
    gram_determinant,
    is_family_instance,
    rep_equal_up_to,
    verify_family_identity,
)
from repforms.forms import FormPair


def test_family_names():
    assert FAMILY_NAMES == ("hexagonal", "rhombohedral")


def test_hexagonal_unit_pair():
    fa, fb = family_pair("hexagonal", 1, 1)
    assert fa.coeffs == (1, 1, 1, -1, 0, 0)
    assert fb.coeffs == (1, 3, 1, 0, 0, 0)


def test_rhombohedral_unit_pair():
    fa, fb = family_pair("rhombohedral", 1, 1)
    assert fa.coeffs == (2, 2, 9, 1, 6, 6)
    assert fb.coeffs == (2, 3, 9, 0, 6, 0)


def test_rational_parameters_give_rational_forms():
    fa, fb = family_pair("hexagonal", Fraction(1, 2), Fraction(1, 3))
    assert isinstance(fa, RatForm)
    assert isinstance(fb, RatForm)
    assert fa.gram[0][0] == Fraction(1, 2)
    assert fa.gram[0][1] == Fraction(-1, 4)
    assert fa.gram[2][2] == Fraction(1, 3)
    assert fb.gram[1][1] == Fraction(3, 2)


def test_family_pair_rejects_bad_input():
    with pytest.raises(ValueError):
        family_pair("cubic", 1, 1)
    with pytest.raises(ValueError):
        family_pair("hexagonal", 0, 1)
    with pytest.raises(ValueError):
        family_pair("hexagonal", 1, -2)


def test_determinant_quadruples_within_each_pair():
    for which in FAMILY_NAMES:
        fa, fb = family_pair(which, 2, 5)
        assert gram_determinant(fb) == 4 * gram_determinant(fa)


def test_identity_proved_for_all_parameters_at_once():
    for which in FAMILY_NAMES:
        assert family_identity_all_parameters(which)


def test_identity_random_rational_parameters():
    rng = random.Random(7)
    for which in FAMILY_NAMES:
        for _ in range(20):
            c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            d = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            assert verify_family_identity(which, c, d, 40)


def test_identity_integer_instances_numerically():
    for which in FAMILY_NAMES:
        for c, d in ((1, 1), (2, 3), (5, 1)):
            assert verify_family_identity(which, c, d, 500)
            fa, fb = family_pair(which, c, d)
            assert rep_equal_up_to(fa, fb, 500).equal


def test_pair_members_are_inequivalent():
    for which in FAMILY_NAMES:
        fa, fb = family_pair(which, 1, 2)
        assert equivalent_over_Z(fa, fb) is None


def test_verify_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_family_identity("triclinic", 1, 1, 10)
    with pytest.raises(ValueError):
        verify_family_identity("hexagonal", -1, 1, 10)


def test_attached_ternary_pair_cubics():
    hex1, hex2 = family_ternary_pairs("hexagonal")
    rho1, rho2 = family_ternary_pairs("rhombohedral")
    assert det_binary_cubic(hex1).coeffs == (0, -3, 0, 0)
    assert det_binary_cubic(hex2).coeffs == (0, -12, 0, 0)
    assert det_binary_cubic(rho1).coeffs == (0, -27, 0, 0)
    assert det_binary_cubic(rho2).coeffs == (0, -108, 0, 0)
    with pytest.raises(ValueError):
        family_ternary_pairs("monoclinic")


def test_det_cubic_ratio_within_families():
    hex1, hex2 = family_ternary_pairs("hexagonal")
    rho1, rho2 = family_ternary_pairs("rhombohedral")
    assert det_cubic_ratio_check(hex1, hex2) == Fraction(1, 4)
    assert det_cubic_ratio_check(rho1, rho2) == Fraction(1, 4)
    assert det_cubic_ratio_check(hex1, rho1) == Fraction(1, 9)
    assert det_cubic_ratio_check(hex1, rho2) == Fraction(1, 36)
    assert det_cubic_ratio_check(hex1, hex1) == 1


def _diag_pair(d1, d2):
    def rat(diag):
        return RatForm(
            tuple(
                tuple(Fraction(diag[i]) if i == j else Fraction(0) for j in range(3))
                for i in range(3)
            )
        )

    return FormPair(rat(d1), rat(d2))


def test_det_cubic_ratio_detects_non_proportional():
    p_a = _diag_pair((1, 1, 1), (1, 2, 3))
    p_b = _diag_pair((1, 1, 1), (1, 1, 2))
    assert det_binary_cubic(p_a).coeffs == (4, -24, 44, -24)
    assert det_binary_cubic(p_b).coeffs == (4, -16, 20, -8)
    assert det_cubic_ratio_check(p_a, p_b) is None


def test_det_cubic_ratio_degenerate_cases():
    z = _diag_pair((1, 1, 0), (1, 1, 0))
    p = _diag_pair((1, 1, 1), (1, 2, 3))
    assert det_binary_cubic(z).coeffs == (0, 0, 0, 0)
    assert det_cubic_ratio_check(z, z) == 1
    assert det_cubic_ratio_check(z, p) == 0
    assert det_cubic_ratio_check(p, z) is None


def test_family_instance_recognition():
    assert is_family_instance(IntForm((1, 1, 1, -1, 0, 0))) == ("hexagonal", 0, 1, 1)
    assert is_family_instance(IntForm((1, 3, 1, 0, 0, 0))) == ("hexagonal", 1, 1, 1)
    assert is_family_instance(IntForm((2, 2, 9, 1, 6, 6))) == ("rhombohedral", 0, 1, 1)
    assert is_family_instance(IntForm((2, 3, 9, 0, 6, 0))) == ("rhombohedral", 1, 1, 1)
    assert is_family_instance(IntForm((2, 2, 3, -2, 0, 0))) == ("hexagonal", 0, 2, 3)


def test_family_instance_sees_through_equivalence():
    # hexagonal split form at (1, 1), pushed around by a unimodular change
    w = ((1, 0, 0), (2, 1, 0), (1, 1, 1))
    g = ((1, 0, 0), (0, 3, 0), (0, 0, 1))
    gg = [
        [sum(w[i][a] * g[a][b] * w[j][b] for a in range(3) for b in range(3)) for j in range(3)]
        for i in range(3)
    ]
    f = IntForm((gg[0][0], gg[1][1], gg[2][2], 2 * gg[0][1], 2 * gg[0][2], 2 * gg[1][2]))
    assert f.coeffs == (1, 7, 5, 4, 2, 10)
    assert is_family_instance(f) == ("hexagonal", 1, 1, 1)


def test_sum_of_three_squares_is_a_disguised_family_member():
    hit = is_family_instance(IntForm((1, 1, 1, 0, 0, 0)))
    assert hit == ("rhombohedral", 0, Fraction(2, 3), Fraction(1, 3))
    member = family_pair(hit[0], hit[2], hit[3])[hit[1]]
    assert member.coeffs == (1, 1, 3, 0, 2, 2)
    assert equivalent_over_Z(member, IntForm((1, 1, 1, 0, 0, 0))) is not None


def test_family_instance_negatives():
    assert is_family_instance(IntForm((11, 32, 44, -8, -4, -16))) is None
    assert is_family_instance(IntForm((1, 2, 5, 0, 0, -2))) is None
    assert is_family_instance(IntForm((1, 2, 2, 1, 1, 1))) is None
    assert is_family_instance(IntForm((1, 1, 2, 0, 0, 1))) is None
    assert is_family_instance(IntForm((1, 1, 0))) is None
