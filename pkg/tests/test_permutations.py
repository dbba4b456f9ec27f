import itertools

import pytest
from hypothesis import given, settings

from conftest import signed_perms
from hyperocta import (
    CycleType,
    DegreeMismatchError,
    Fullness,
    SignedCycle,
    SignedPermutation,
    SignedTransposition,
    all_elements,
    compose_word,
    cycle_permutation,
    parse_transposition,
)
from oracles import chase_images

CHAIN = [("pos", 3, 5), ("inv", 5, 5), ("neg", 3, 4), ("neg", 2, 3), ("inv", 2, 2), ("pos", 1, 2)]
CHAIN_IMAGES = (2, -3, -5, -1, -4)


def word_from_factors(factors):
    out = []
    for kind, i, j in factors:
        if kind == "pos":
            out.append(SignedTransposition.positive(i, j))
        elif kind == "neg":
            out.append(SignedTransposition.negative(i, j))
        else:
            out.append(SignedTransposition.inversion(i))
    return out


# -- construction and validation ------------------------------------------------


def test_rejects_non_bijective_images():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1, 3))
    with pytest.raises(ValueError):
        SignedPermutation((1, 2, 4))
    with pytest.raises(ValueError):
        SignedPermutation(())


def test_rejects_degree_beyond_cap():
    with pytest.raises(ValueError):
        SignedPermutation.identity(17)


def test_negative_points_are_derived():
    p = SignedPermutation((2, -3, -5, -1, -4))
    for i in range(1, 6):
        assert p(-i) == -p(i)
    with pytest.raises(ValueError):
        p(0)
    with pytest.raises(ValueError):
        p(6)


# -- composition -----------------------------------------------------------------


def test_identity_is_neutral():
    p = SignedPermutation((2, -3, -5, -1, -4))
    e = SignedPermutation.identity(5)
    assert e * p == p
    assert p * e == p


def test_flip_is_involution():
    t = SignedTransposition.inversion(1).to_permutation(1)
    assert t * t == SignedPermutation.identity(1)


def test_six_factor_chain_matches_image_chasing():
    # Oracle: push each point through the factors one at a time.
    assert chase_images(CHAIN, 5) == CHAIN_IMAGES
    word = word_from_factors(CHAIN)
    # The word multiplies right-to-left, so the first-applied factor is last.
    assert compose_word(tuple(reversed(word)), 5).images == CHAIN_IMAGES


def test_degree_mismatch_raises():
    with pytest.raises(DegreeMismatchError):
        SignedPermutation.identity(3) * SignedPermutation.identity(4)


def test_right_factor_applies_first():
    a = SignedTransposition.positive(1, 2).to_permutation(3)
    b = SignedTransposition.positive(2, 3).to_permutation(3)
    assert (a * b)(3) == 1
    assert (b * a)(3) == 2
    assert (a * b)(1) == 2
    assert (b * a)(1) == 3


# -- reflections -------------------------------------------------------------------


def test_positive_transposition_images():
    assert SignedTransposition.positive(1, 2).to_permutation(3).images == (2, 1, 3)


def test_negative_transposition_images():
    assert SignedTransposition.negative(1, 2).to_permutation(2).images == (-2, -1)


def test_inversion_images():
    assert SignedTransposition.inversion(2).to_permutation(3).images == (1, -2, 3)


def test_transposition_index_out_of_range():
    with pytest.raises(ValueError):
        SignedTransposition.positive(1, 4).to_permutation(3)


def test_transposition_canonicalizes_and_validates():
    assert SignedTransposition.positive(5, 2) == SignedTransposition.positive(2, 5)
    with pytest.raises(ValueError):
        SignedTransposition.positive(2, 2)
    with pytest.raises(ValueError):
        SignedTransposition.negative(0, 1)


def test_parse_transposition_roundtrip():
    for t in (
        SignedTransposition.positive(1, 2),
        SignedTransposition.negative(2, 5),
        SignedTransposition.inversion(3),
    ):
        assert parse_transposition(str(t)) == t
    with pytest.raises(ValueError):
        parse_transposition("(1 2 3)")


# -- cycle structure ----------------------------------------------------------------


def test_identity_cycles_are_even_fixed_points():
    cycles = SignedPermutation.identity(3).cycles()
    assert [c.support for c in cycles] == [(1,), (2,), (3,)]
    assert all(c.is_even for c in cycles)


def test_chain_product_is_single_even_five_cycle():
    p = SignedPermutation(CHAIN_IMAGES)
    (cycle,) = p.cycles()
    assert cycle.entries() == (1, 2, -3, 5, -4)
    assert cycle.is_even
    assert p.cycle_type() == CycleType((5,), ())
    assert p.classify_full_cycle() is Fullness.EVEN_FULL


def test_single_flip_cycles():
    cycles = SignedPermutation((-1, 2)).cycles()
    assert [(c.support, c.parity) for c in cycles] == [((1,), -1), ((2,), 1)]


def test_cycle_type_examples():
    n = 4
    assert SignedPermutation.identity(n).cycle_type() == CycleType((1, 1, 1, 1), ())
    odd_full = cycle_permutation(range(1, n + 1), -1, n)
    assert odd_full.cycle_type() == CycleType((), (n,))
    assert odd_full.classify_full_cycle() is Fullness.ODD_FULL


def test_unsigned_cycle_classifies_even_full():
    p = SignedPermutation((2, 3, 4, 1))
    assert p.classify_full_cycle() is Fullness.EVEN_FULL
    assert SignedPermutation.identity(2).classify_full_cycle() is Fullness.NOT_FULL


def test_cycle_decompose_roundtrip_all_of_degree_three():
    for p in all_elements(3):
        cycles = p.cycles()
        supports = sorted(v for c in cycles for v in c.support)
        assert supports == [1, 2, 3]
        product = SignedPermutation.identity(3)
        for c in cycles:
            product = product * c.to_permutation(3)
        assert product == p
        ct = p.cycle_type()
        assert sum(ct.even_parts) + sum(ct.odd_parts) == 3


@settings(max_examples=200)
@given(signed_perms(8))
def test_cycle_decompose_roundtrip_random(p):
    product = SignedPermutation.identity(8)
    for c in p.cycles():
        product = product * c.to_permutation(8)
    assert product == p


def test_cycle_word_expansion_contains_flip_only_when_odd():
    even = SignedCycle((1, 3, 4), (1, -1), 1)
    odd = SignedCycle((1, 3, 4), (1, -1), -1)
    assert all(t.kind != "inv" for t in even.transposition_word())
    assert odd.transposition_word()[0] == SignedTransposition.inversion(1)
    for cyc in (even, odd):
        assert compose_word(cyc.transposition_word(), 5) == cyc.to_permutation(5)


def test_cycle_canonicalization_from_entries():
    canon = SignedCycle.from_entries((5, -4, 1, 2, -3), 1)
    assert canon.entries() == (1, 2, -3, 5, -4)
    assert cycle_permutation((5, -4, 1, 2, -3), 1, 5) == canon.to_permutation(5)


# -- normal form and projections -------------------------------------------------------


def test_normal_form_of_chain_product():
    nf = SignedPermutation(CHAIN_IMAGES).normal_form()
    assert nf.flip_set == frozenset({1, 3, 4, 5})
    assert nf.base == SignedPermutation.from_cycle_str("(1 2 3 5 4)+")
    assert nf.recompose() == SignedPermutation(CHAIN_IMAGES)


def test_normal_form_identity():
    nf = SignedPermutation.identity(4).normal_form()
    assert nf.flip_set == frozenset()
    assert nf.base.is_identity


def test_normal_form_negative_swap():
    # Oracle: (1 -2) rewrites to (1 -1)(2 -2)(1 2).
    word = (
        SignedTransposition.inversion(1),
        SignedTransposition.inversion(2),
        SignedTransposition.positive(1, 2),
    )
    expected = compose_word(word, 2)
    p = SignedPermutation((-2, -1))
    assert p == expected
    nf = p.normal_form()
    assert nf.flip_set == frozenset({1, 2})
    assert nf.base.images == (2, 1)


def test_normal_form_roundtrip_all_of_degree_three():
    for p in all_elements(3):
        assert p.normal_form().recompose() == p


@settings(max_examples=200)
@given(signed_perms(8))
def test_normal_form_roundtrip_random(p):
    assert p.normal_form().recompose() == p


def test_phi_project_examples():
    assert SignedPermutation((-2, -1)).phi_project().images == (2, 1)
    assert SignedPermutation((1, -2, 3)).phi_project().is_identity
    assert SignedPermutation(CHAIN_IMAGES).phi_project() == SignedPermutation.from_cycle_str(
        "(1 2 3 5 4)+"
    )


def test_psi_sign_examples():
    assert SignedTransposition.positive(1, 3).to_permutation(3).psi_sign() == 1
    assert SignedTransposition.negative(1, 3).to_permutation(3).psi_sign() == 1
    assert SignedTransposition.inversion(2).to_permutation(3).psi_sign() == -1
    assert SignedPermutation(CHAIN_IMAGES).psi_sign() == 1


@settings(max_examples=200)
@given(signed_perms(6), signed_perms(6))
def test_projections_are_homomorphisms(a, b):
    assert (a * b).phi_project() == a.phi_project() * b.phi_project()
    assert (a * b).psi_sign() == a.psi_sign() * b.psi_sign()


# -- group laws --------------------------------------------------------------------


@settings(max_examples=200)
@given(signed_perms(7), signed_perms(7), signed_perms(7))
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=200)
@given(signed_perms(7))
def test_inverse_roundtrip(p):
    identity = SignedPermutation.identity(7)
    assert p * p.inverse() == identity
    assert p.inverse() * p == identity


@settings(max_examples=200)
@given(signed_perms(6), signed_perms(6))
def test_conjugation_preserves_cycle_type(p, g):
    assert p.conjugate_by(g).cycle_type() == p.cycle_type()


def test_group_order_at_degree_three():
    assert len(set(all_elements(3))) == 48


# -- text forms --------------------------------------------------------------------


def test_cycle_string_of_chain_product():
    assert SignedPermutation(CHAIN_IMAGES).cycle_str() == "(1 2 -3 5 -4)+"


def test_cycle_string_roundtrip_all_of_degree_three():
    for p in all_elements(3):
        assert SignedPermutation.from_cycle_str(p.cycle_str()) == p


def test_from_cycle_str_accepts_unicode_minus_and_fixed_points():
    assert SignedPermutation.from_cycle_str("(1 −2)-", n=3).images == (-2, 1, 3)


def test_from_cycle_str_rejects_bad_input():
    for bad in ("", "(1 2", "(1 2)", "(1 1)+", "(1 2)+(2 3)+"):
        with pytest.raises(ValueError):
            SignedPermutation.from_cycle_str(bad)


def test_two_row_rendering():
    text = SignedPermutation((2, -3, 1)).two_row_str()
    top, bottom = text.splitlines()
    assert top == "(  1  2  3 )"
    assert bottom == "(  2 -3  1 )"
