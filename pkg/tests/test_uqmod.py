import itertools

import pytest

from mixedchain.qarith import MINUS_ONE, ONE, Q, QINV
from mixedchain.uqmod import (
    THREE,
    THREE_BAR,
    GL2Label,
    R,
    Z,
    bar,
    bar_cover,
    bar_subquotients,
    bar_to_plain,
    build_projective,
    build_simple,
    check_relations,
    dim_bar,
    dim_label,
    dim_r,
    dim_z,
    gl2_decomposition,
    plain_to_bar,
    proj_subquotients,
    relation_residuals,
    weight_multiset,
    weight_multiset_tensor,
)

SIGNS = (1, -1)


def test_dimensions():
    assert dim_z(Z(1, -1, 1, 1)) == 3
    assert dim_z(Z(1, 1, 2, 0)) == 3
    assert dim_r(R(1, 1, 1, 0)) == 8
    assert dim_r(R(1, 1, 2, 0)) == 12
    assert dim_r(R(1, -1, 1, 1)) == 12
    assert dim_bar(bar("R", 0, 0, 0)) == 8
    assert dim_bar(bar("R", 1, 3, 0)) == 8 * 3 + 4


def test_spin_bound_guard():
    from mixedchain.uqmod import MAX_SPIN, UnsupportedLabel

    with pytest.raises(UnsupportedLabel):
        build_simple(Z(1, 1, MAX_SPIN + 1, 0))
    with pytest.raises(UnsupportedLabel):
        build_projective(R(1, 1, MAX_SPIN + 1, 0))


def test_one_dimensional_convention():
    assert Z(1, 1, 0, 0) == Z(1, -1, 1, 0)
    assert dim_z(Z(1, 1, 0, 0)) == 1
    with pytest.raises(ValueError):
        Z(1, 1, 0, 3)


def test_gl2_decomposition_families():
    a, b, s = 1, -1, 3
    assert gl2_decomposition(Z(a, b, s, 0)) == [GL2Label(a, b, s, 0),
                                                GL2Label(a, b, s - 1, -1)]
    assert gl2_decomposition(Z(a, b, s, s)) == [GL2Label(a, b, s, s),
                                                GL2Label(a, -b, s + 1, s)]
    assert gl2_decomposition(Z(a, b, s, 2)) == [
        GL2Label(a, b, s, 2), GL2Label(a, -b, s + 1, 2),
        GL2Label(a, -b, s - 1, 1), GL2Label(a, b, s, 1)]


def test_gl2_dimension_consistency():
    for s in range(1, 51):
        for r in (0, s, 2 * s + 1, -4):
            z = Z(1, 1, s, r)
            assert sum(g.s for g in gl2_decomposition(z)) == dim_z(z)
    for s in range(1, 51):
        for r in (0, s):
            rl = R(1, -1, s, r)
            assert sum(g.s for g in gl2_decomposition(rl)) == dim_r(rl)


def test_fundamental_fermion_entries():
    # B phi_0 = beta_0 and C beta_m = -phi_m on the fundamental module
    rep = build_simple(THREE)
    assert rep.mats["B"].get(1, 0) == ONE
    assert rep.mats["C"].get(0, 1) == MINUS_ONE
    assert rep.mats["C"].get(0, 2) is None
    # B phi_1 = -beta_0, B phi_0 = 0, C beta_0 = phi_1 on the dual
    repb = build_simple(THREE_BAR)
    assert repb.mats["B"].get(2, 1) == MINUS_ONE
    assert repb.mats["B"].get(2, 0) is None
    assert repb.mats["C"].get(1, 2) == ONE


@pytest.mark.parametrize("alpha,beta", list(itertools.product(SIGNS, SIGNS)))
def test_simple_relations_sweep(alpha, beta):
    for s in range(1, 6):
        for r in range(-3, s + 4):
            rep = build_simple(Z(alpha, beta, s, r))
            assert check_relations(rep) == [], (alpha, beta, s, r)


@pytest.mark.parametrize("alpha,beta", list(itertools.product(SIGNS, SIGNS)))
def test_projective_relations_sweep(alpha, beta):
    for s in range(1, 5):
        for r in (0, s):
            rl = R(alpha, beta, s, r)
            rep = build_projective(rl)
            assert rep.dim == dim_r(rl)
            assert check_relations(rep) == [], (alpha, beta, s, r)


def test_projective_dimension_examples():
    assert build_projective(R(1, 1, 2, 0)).dim == 12
    subs = proj_subquotients(R(1, 1, 1, 0))
    assert subs == [Z(1, 1, 1, 0), Z(1, -1, 2, 0), Z(1, 1, 1, 1), Z(1, 1, 1, 0)]


def test_specific_relation_residuals_zero():
    rep = build_simple(Z(1, -1, 3, 2))
    for name, res in relation_residuals(rep).items():
        assert res.is_zero(), name
    rep = build_projective(R(1, -1, 1, 1))
    for name, res in relation_residuals(rep).items():
        assert res.is_zero(), name


def test_structural_invariants_on_built_reps():
    for label in (Z(1, 1, 2, 5), R(1, -1, 3, 3), R(-1, 1, 2, 0)):
        rep = build_simple(label) if isinstance(label, type(THREE)) \
            else build_projective(label)
        B, C = rep.mats["B"], rep.mats["C"]
        K, k = rep.mats["K"], rep.mats["k"]
        Kinv = rep.mats["Kinv"]
        assert (B * B).is_zero()
        assert (C * C).is_zero()
        assert K * k == k * K
        assert K * B * Kinv == B.scale(Q)


def test_weight_multiset_basics():
    rep = build_simple(THREE)
    w = weight_multiset(rep)
    assert sum(w.values()) == 3
    assert w[(ONE, -QINV)] == 1
    assert w[(Q, QINV)] == 1
    assert w[(QINV, ONE)] == 1


def test_weight_multiset_tensor_is_product():
    a = build_simple(Z(1, 1, 2, 1))
    b = build_simple(THREE_BAR)
    w = weight_multiset_tensor(a, b)
    assert sum(w.values()) == a.dim * b.dim


def test_bar_translation_round_trip():
    for p in (0, 1):
        for t in range(0, 31):
            for r in range(0, 31):
                z = bar("Z", p, t, r)
                plain = bar_to_plain(z)
                assert plain_to_bar(plain) == z
                assert dim_bar(z) == dim_label(plain)
                if t == 0 or r == 0:
                    cov = bar_cover(z)
                    assert dim_bar(cov) == dim_label(bar_to_plain(cov))
                    subs = bar_subquotients(cov)
                    assert sum(dim_bar(x) for x in subs) == dim_bar(cov)


def test_bar_dimension_formulas():
    for r in range(1, 31):
        assert dim_bar(bar("R", 0, r, 0)) == 8 * r + 4
        assert dim_bar(bar("R", 1, 0, r)) == 8 * r + 4
    assert dim_bar(bar("R", 1, 0, 0)) == 8


def test_bar_subquotients_match_plain_projectives():
    for p in (0, 1):
        for t, r in [(0, 0), (2, 0), (0, 3), (5, 0)]:
            cov = bar_cover(bar("Z", p, t, r))
            bar_subs = [bar_to_plain(x) for x in bar_subquotients(cov)]
            assert bar_subs == proj_subquotients(bar_to_plain(cov))


def test_hopf_axioms_on_fundamental():
    # mult(S (x) id)Delta(x) = counit(x) = mult(id (x) S)Delta(x), as matrices,
    # for the coproducts E (x) K + 1 (x) E, F (x) 1 + K^-1 (x) F,
    # B (x) 1 + k^-1 (x) B and C (x) k + 1 (x) C, with antipode values
    # S(E) = -E K^-1, S(F) = -K F, S(B) = -k B, S(C) = -C k^-1.
    for fund in (THREE, THREE_BAR):
        rep = build_simple(fund)
        E, F = rep.mats["E"], rep.mats["F"]
        K, Kinv = rep.mats["K"], rep.mats["Kinv"]
        k, kinv = rep.mats["k"], rep.mats["kinv"]
        B, C = rep.mats["B"], rep.mats["C"]
        sE, sF, sB, sC = -(E * Kinv), -(K * F), -(k * B), -(C * kinv)
        assert (sE * K + E).is_zero()
        assert (E * Kinv + sE).is_zero()
        assert (sF + K * F).is_zero()
        assert (F + Kinv * sF).is_zero()
        assert (sB + k * B).is_zero()
        assert (B + kinv * sB).is_zero()
        assert (sC * k + C).is_zero()
        assert (C * kinv + sC).is_zero()
