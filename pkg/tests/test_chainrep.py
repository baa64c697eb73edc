import pytest

from mixedchain.chainrep import (
    ChainContext,
    IndexOutOfRange,
    QwbParams,
    SingularParams,
    chain_params,
    check_centralizer,
    check_qwb_relations,
    fundamental_ops,
    qwb_relation_residuals,
)
from mixedchain.qarith import MINUS_ONE, ONE, Q, eval_points, qpow


def idx(i, j):
    return 3 * (i - 1) + (j - 1)


def test_fundamental_entries_from_displays():
    g, e, h = fundamental_ops()
    assert g.get(idx(1, 1), idx(1, 1)) == qpow(-2)
    assert g.get(idx(2, 1), idx(1, 2)) == -qpow(-1)
    assert g.get(idx(2, 2), idx(2, 2)) == MINUS_ONE
    assert g.get(idx(3, 1), idx(3, 1)) == qpow(-2) - ONE
    assert h.get(idx(3, 3), idx(3, 3)) == MINUS_ONE
    assert h.get(idx(1, 2), idx(1, 2)) == qpow(-2) - ONE
    # e(f2 x v2) = -q (q^2 f1v1 + q f2v2 - f3v3)
    assert e.get(idx(1, 1), idx(2, 2)) == -Q * qpow(2)
    assert e.get(idx(2, 2), idx(2, 2)) == -(Q * Q)
    assert e.get(idx(3, 3), idx(2, 2)) == Q
    assert e.get(idx(1, 2), idx(1, 2)) is None


def test_quadratic_and_contraction_on_nine_dims():
    g, e, h = fundamental_ops()
    params = chain_params()
    ident = g.__class__.identity(9, ONE)
    for x in (g, h):
        quad = (x - ident.scale(params.gamma)) * (x - ident.scale(params.delta))
        assert quad.is_zero()
    # (theta + 1)/(gamma + delta) = -1
    coeff = (params.theta + ONE) / (params.gamma + params.delta)
    assert coeff == MINUS_ONE
    assert (e * e - e.scale(coeff)).is_zero()


def test_chain_operator_placement():
    ctx = ChainContext(2, 1)
    g1 = ctx.chain_operator("g", 1)
    assert (g1.nrows, g1.ncols) == (27, 27)
    with pytest.raises(IndexOutOfRange):
        ctx.chain_operator("g", 2)
    with pytest.raises(IndexOutOfRange):
        ctx.chain_operator("h", 1)
    ctx2 = ChainContext(1, 1)
    assert ctx2.chain_operator("e").nrows == 9


def test_braid_relation_on_three_zero():
    ctx = ChainContext(3, 0)
    res = dict((r.relation, r.ok) for r in check_qwb_relations(ctx))
    assert res["braid_g1"]
    assert all(res.values())


def test_contraction_sandwich_on_two_two():
    ctx = ChainContext(2, 2)
    res = {r.relation: r.ok for r in check_qwb_relations(ctx)}
    for name in ("ege", "ehe", "ee", "eghinv_left", "eghinv_right"):
        assert res[name], name
    assert all(res.values())


def test_qwb_relations_symbolic_small():
    for m, n in [(2, 0), (0, 2), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]:
        ctx = ChainContext(m, n)
        assert all(r.ok for r in check_qwb_relations(ctx)), (m, n)


def test_qwb_relations_eval_points():
    points = eval_points(seed=20177)
    for m, n in [(2, 2), (3, 2)]:
        ctx = ChainContext(m, n)
        for p in points:
            assert all(r.ok for r in check_qwb_relations(ctx, point=p)), (m, n, p)


def test_wrong_params_detected():
    # the checker is not vacuous: off-spec parameters break the relations
    bad = QwbParams(MINUS_ONE, qpow(-3), qpow(-2, -1))
    res = {r.relation: r.ok for r in check_qwb_relations(ChainContext(2, 1), bad)}
    assert res["quad_g1"] is False
    assert res["ee"] is False


def test_singular_params_raise():
    bad = QwbParams(MINUS_ONE, ONE, MINUS_ONE)
    ctx = ChainContext(1, 1)
    with pytest.raises(SingularParams):
        list(qwb_relation_residuals(ctx, bad))


def test_centralizer_small():
    for m, n in [(2, 0), (1, 1), (0, 2), (2, 1), (1, 2)]:
        ctx = ChainContext(m, n)
        assert all(r.ok for r in check_centralizer(ctx)), (m, n)


def test_centralizer_names_cover_all_generators():
    ctx = ChainContext(1, 1)
    names = {r.relation for r in check_centralizer(ctx)}
    assert names == {f"[e,{g}]" for g in ("E", "F", "K", "k", "B", "C")}


def test_chain_weights_are_products():
    from mixedchain.uqmod import THREE, THREE_BAR, build_simple, weight_multiset

    ctx = ChainContext(2, 1)
    Kd = ctx.quantum_group_action("K").diagonal()
    kd = ctx.quantum_group_action("k").diagonal()
    got = {}
    for a, b in zip(Kd, kd):
        got[(a, b)] = got.get((a, b), 0) + 1
    w3 = weight_multiset(build_simple(THREE))
    wb = weight_multiset(build_simple(THREE_BAR))
    expect = {}
    for (a1, b1), c1 in w3.items():
        for (a2, b2), c2 in w3.items():
            for (a3, b3), c3 in wb.items():
                key = (a1 * a2 * a3, b1 * b2 * b3)
                expect[key] = expect.get(key, 0) + c1 * c2 * c3
    assert got == expect
