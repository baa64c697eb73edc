import itertools

from mixedchain.fusion import (
    GrothVector,
    chain_decompose,
    dim_of_groth,
    fuse_with_f,
    fuse_with_v,
    fuse_vector,
    gv,
    label_str,
)
from mixedchain.uqmod import (
    R,
    THREE,
    THREE_BAR,
    Z,
    build_rep,
    dim_label,
    weight_multiset,
    weight_multiset_tensor,
)


def all_labels(s, rs=(-2, -1, 0, 1, 2, 5)):
    out = set()
    for al, be in itertools.product((1, -1), (1, -1)):
        for r in set(rs) | {s - 1, s, s + 1, s + 2}:
            try:
                out.add(Z(al, be, s, r))
            except ValueError:
                pass
        for r in (0, s):
            out.add(R(al, be, s, r))
    return sorted(out, key=str)


def test_fuse_f_exceptional_examples():
    assert fuse_with_f(Z(1, 1, 1, 0), 1, 1) == gv((Z(1, 1, 1, 1), 1))
    assert fuse_with_f(Z(1, 1, 1, -1), 1, 1) == gv((R(1, -1, 2, 0), 1))
    assert fuse_with_f(R(1, 1, 1, 1), 1, 1) == gv(
        (R(1, -1, 2, 2), 1), (Z(1, 1, 1, 2), 2), (Z(1, -1, 2, 3), 1))


def test_fuse_f_regular_examples():
    for s in (1, 2, 5):
        out = fuse_with_f(Z(1, 1, s, s), 1, 1)
        assert out == gv((Z(1, -1, s + 1, s + 1), 1), (Z(1, 1, s, s + 1), 1))


def test_fuse_v_exceptional_examples():
    assert fuse_with_v(Z(1, 1, 1, 2), 1, 1) == gv((R(1, -1, 1, 1), 1))
    assert fuse_with_v(Z(1, 1, 1, 1), 1, 1) == gv(
        (Z(1, -1, 1, 0), 1), (Z(1, 1, 2, 1), 1))
    assert fuse_with_v(R(1, 1, 1, 1), 1, 1) == gv(
        (R(1, -1, 1, 0), 1), (Z(1, 1, 2, 1), 2), (Z(1, -1, 3, 2), 1))


def test_chain_small_values():
    assert chain_decompose(1, 0) == gv((Z(1, -1, 1, 1), 1))
    assert chain_decompose(0, 1) == gv((Z(1, 1, 2, 0), 1))
    c11 = chain_decompose(1, 1)
    assert c11 == gv((Z(1, 1, 1, 0), 1), (Z(1, -1, 2, 1), 1))
    assert dim_of_groth(c11) == 9
    c21 = chain_decompose(2, 1)
    assert c21 == gv((Z(1, -1, 1, 1), 1), (Z(1, -1, 3, 2), 1), (R(1, -1, 1, 1), 1))
    assert dim_of_groth(c21) == 27


def test_chain_dims_to_twelve():
    for total in range(1, 13):
        for m in range(0, total + 1):
            n = total - m
            assert dim_of_groth(chain_decompose(m, n)) == 3 ** total


def test_rule_dimension_multiplicativity():
    for s in range(1, 41):
        for x in all_labels(s):
            assert dim_of_groth(fuse_with_f(x)) == 3 * dim_label(x), x
            assert dim_of_groth(fuse_with_v(x)) == 3 * dim_label(x), x


def test_fusion_order_independence():
    for s in range(1, 7):
        for x in all_labels(s):
            fv = fuse_vector(fuse_with_f(x), fuse_with_v)
            vf = fuse_vector(fuse_with_v(x), fuse_with_f)
            assert fv == vf, x


def test_weight_oracle_small():
    # independent brute-force check of a handful of rules via (K,k) weights
    targets = [Z(1, -1, 1, 1), Z(1, 1, 2, 0), Z(-1, 1, 2, 2), R(1, 1, 1, 0),
               R(1, -1, 2, 2), Z(1, 1, 3, 2), Z(-1, -1, 1, -2)]
    for x in targets:
        for fuse, fund in ((fuse_with_f, THREE), (fuse_with_v, THREE_BAR)):
            lhs = weight_multiset_tensor(build_rep(x), build_rep(fund))
            rhs = {}
            for label, mult in fuse(x).items():
                for w, c in weight_multiset(build_rep(label)).items():
                    rhs[w] = rhs.get(w, 0) + c * mult
            assert lhs == rhs, (x, fund)


def test_groth_vector_basics():
    v = GrothVector()
    v.add(Z(1, 1, 1, 0), 2)
    v.add(Z(1, 1, 1, 0), -2)
    assert not v
    assert dim_of_groth(gv((THREE, 2))) == 6
    assert dim_of_groth(GrothVector()) == 0


def test_label_str():
    assert label_str(Z(1, -1, 3, 2)) == "Z[1,-1;3,2]"
    assert label_str(R(1, -1, 1, 1)) == "R[1,-1;1,1]"
