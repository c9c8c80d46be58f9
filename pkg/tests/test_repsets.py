import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repforms.forms import FormPair, IntForm, RatForm, direct_sum, evaluate, gram_matrix
from repforms.repsets import (
    box_representations,
    rep_equal_up_to,
    representations_up_to,
    simultaneous_reps,
    value_mask,
    vectors_with_value,
)

HEX = IntForm((1, 1, -1))
HEX_DIAG = IntForm((1, 3, 0))


def test_sum_of_three_squares_up_to_ten():
    reps = representations_up_to(IntForm((1, 1, 1, 0, 0, 0)), 10)
    assert reps.values == (1, 2, 3, 4, 5, 6, 8, 9, 10)


def test_hex_binary_up_to_seven():
    assert representations_up_to(HEX, 7).values == (1, 3, 4, 7)


def test_scaling_law():
    base = representations_up_to(HEX, 20).values
    scaled = representations_up_to(IntForm((3, 3, -3)), 60).values
    assert scaled == tuple(3 * v for v in base)


def test_direct_sum_rep_union():
    f = IntForm((1, 2, 0))
    g = IntForm((5,))
    fs = set(representations_up_to(f, 30).values) | {0}
    gs = set(representations_up_to(g, 30).values) | {0}
    expect = sorted(
        a + b for a in fs for b in gs if 0 < a + b <= 30
    )
    got = representations_up_to(direct_sum(f, g), 30).values
    assert got == tuple(sorted(set(expect)))


def test_witnesses_evaluate_back():
    reps = representations_up_to(IntForm((2, 3, 5, -2, 0, 0)), 40, with_witnesses=True)
    for v in reps.values:
        assert evaluate(IntForm((2, 3, 5, -2, 0, 0)), reps.witnesses[v]) == v


def test_non_positive_definite_rejected():
    with pytest.raises(ValueError):
        representations_up_to(IntForm((1, -1, 0)), 5)


def test_engines_agree_small_grid():
    """Exact recursion, integer kernel, and box oracle coincide on a grid."""
    checked = 0
    for s12, s13, s23 in itertools.product(range(-2, 3), repeat=3):
        for diag in ((1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2)):
            f = IntForm(diag + (s12, s13, s23))
            from repforms.forms import is_positive_definite

            if not is_positive_definite(f):
                continue
            exact = representations_up_to(f, 50, engine="exact").values
            kernel = representations_up_to(f, 50, engine="kernel").values
            box = box_representations(f, 50)
            assert exact == kernel == box, f.coeffs
            checked += 1
    assert checked > 200


def test_engines_agree_binary_and_quaternary():
    quad = IntForm((1, 1, 2, 3, 0, -1, 0, 1, 0, -2))
    exact = representations_up_to(quad, 30, engine="exact").values
    box = box_representations(quad, 30)
    assert exact == box
    b = IntForm((3, 5, -2))
    assert representations_up_to(b, 80, engine="exact").values == box_representations(b, 80)


def test_value_mask_matches_values():
    import numpy as np

    f = IntForm((1, 2, 5, 0, 0, -2))
    mask = value_mask(f, 60)
    vals = representations_up_to(f, 60).values
    assert [int(i) for i in np.nonzero(mask)[0]] == list(vals)


def test_vectors_with_value_sum_three_squares():
    vecs = vectors_with_value(IntForm((1, 1, 1, 0, 0, 0)), 2)
    assert all(evaluate(IntForm((1, 1, 1, 0, 0, 0)), v) == 2 for v in vecs)
    assert len(vecs) == 6
    assert all(next(x for x in v if x) > 0 for v in vecs)


def test_rep_equal_classic_binary_pair_with_tail():
    f = direct_sum(HEX, IntForm((5,)))
    g = direct_sum(HEX_DIAG, IntForm((5,)))
    assert rep_equal_up_to(f, g, 10_000).equal


def test_rep_equal_mismatch_witness():
    cmp = rep_equal_up_to(
        IntForm((1, 1, 1, 0, 0, 0)), IntForm((1, 1, 2, 0, 0, 0)), 10
    )
    assert not cmp.equal
    assert cmp.value == 7
    assert cmp.missing_from == 1
    assert evaluate(IntForm((1, 1, 2, 0, 0, 0)), cmp.witness) == 7


def test_rep_equal_reflexive():
    f = IntForm((2, 3, 8, 0, -1, 0))
    assert rep_equal_up_to(f, f, 500).equal


def test_rational_bound_and_rational_form():
    f = RatForm(gram_matrix(IntForm((1, 1, -1))))
    reps = representations_up_to(f, Fraction(15, 2))
    assert reps.values == (1, 3, 4, 7)


def test_simultaneous_reps_small():
    a = RatForm(gram_matrix(IntForm((1, 1, 0, -1, 0, 0))))
    b = RatForm(gram_matrix(IntForm((0, 0, 1, 0, 0, 0))))
    pair = FormPair(a, b)
    out = simultaneous_reps(pair, 1, 1, 2)
    assert set(out.pairs) >= {(0, 1), (1, 0), (1, 1)}
    assert all(ca + cb <= 2 for ca, cb in out.pairs)
    for (va, vb), x in out.witnesses.items():
        assert evaluate(a, x) == va and evaluate(b, x) == vb


def test_simultaneous_reps_unit_vector_family():
    from repforms.families import family_ternary_pairs

    pair1, _ = family_ternary_pairs("hexagonal")
    out = simultaneous_reps(pair1, 1, 1, 1)
    assert (0, 1) in set(out.pairs)


def test_simultaneous_reps_requires_definite_combiner():
    a = RatForm(gram_matrix(IntForm((1, 1, 0, -1, 0, 0))))
    b = RatForm(gram_matrix(IntForm((0, 0, 1, 0, 0, 0))))
    with pytest.raises(ValueError):
        simultaneous_reps(FormPair(a, b), 1, -1, 5)


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=10, max_value=40))
@settings(max_examples=25, deadline=None)
def test_rep_set_unimodular_invariance(seed, bound):
    rng = random.Random(seed)
    f = IntForm((1 + rng.randint(0, 2), 2, 3, rng.randint(-1, 1), rng.randint(-1, 1), rng.randint(-1, 1)))
    from repforms.forms import is_positive_definite
    from repforms.ratmat import as_fraction_matrix, mat_mul, transpose

    if not is_positive_definite(f):
        return
    g = gram_matrix(f)
    w = [[1, 0, 0], [rng.randint(-2, 2), 1, 0], [rng.randint(-2, 2), rng.randint(-2, 2), 1]]
    wg = mat_mul(mat_mul(as_fraction_matrix(w), g), transpose(as_fraction_matrix(w)))
    assert (
        representations_up_to(f, bound).values
        == representations_up_to(RatForm(wg), bound).values
    )
