import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedchain.partitions import (
    InvalidF,
    NotInLambda,
    add_boxes,
    atyp,
    atypical_bipartition,
    atypical_set,
    bip_str,
    classify_atypical,
    count_partitions,
    cross_set,
    gswap,
    gswap_label,
    is_cross21,
    is_hook,
    lambda_all,
    lambda_set,
    part_str,
    partitions_of,
    rem_boxes,
)


def test_lambda_set_examples():
    assert lambda_set(1, 1, 1) == [((), ())]
    assert lambda_set(2, 1, 1) == [((1,), ())]
    assert len(lambda_set(3, 2, 0)) == 6
    with pytest.raises(InvalidF):
        lambda_set(2, 1, 2)


def test_lambda_count():
    for m in range(0, 9):
        for n in range(0, 9):
            total = sum(count_partitions(m - f) * count_partitions(n - f)
                        for f in range(min(m, n) + 1))
            assert len(lambda_all(m, n)) == total


def test_boxes_examples():
    assert set(add_boxes((2, 1))) == {(3, 1), (2, 2), (2, 1, 1)}
    assert set(rem_boxes((2, 1))) == {(1, 1), (2,)}
    assert rem_boxes(()) == []


partition_strategy = st.integers(min_value=0, max_value=12).map(
    lambda k: partitions_of(k))


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=0, max_value=12), st.data())
def test_add_rem_duality(k, data):
    mu = data.draw(st.sampled_from(partitions_of(k)))
    for nu in add_boxes(mu):
        assert mu in rem_boxes(nu)
    for nu in rem_boxes(mu):
        assert mu in add_boxes(nu)


def test_hooks():
    assert is_hook((3, 1, 1), 1, 1)
    assert not is_hook((2, 2), 1, 1)
    assert is_hook((), 0, 0)


def test_cross_examples():
    assert is_cross21(((5,), (3,)))
    assert not is_cross21(((2, 2), (2, 2)))
    assert is_cross21(((), ()))


def test_classify_examples():
    # ((2),(1)) realizes no atypical label wherever it lives
    assert classify_atypical(((2,), (1,)), 3, 2) is None
    assert classify_atypical(((), ()), 2, 2) == atyp("delta", False, 0, 0)
    assert classify_atypical(((1, 1, 1), (1,)), 4, 2) is None
    assert classify_atypical(((2, 1, 1), (2,)), 4, 2) == atyp("delta", False, 2, 2)
    with pytest.raises(NotInLambda):
        classify_atypical(((2,), (1,)), 3, 1)
    with pytest.raises(NotInLambda):
        classify_atypical(((5,), ()), 2, 1)


def test_canonical_identifications():
    assert atyp("delta1", False, 3, 1) == atyp("delta", False, 3, 1)
    assert atyp("delta2", True, 0, 0) == atyp("delta2", False, 0, 0)
    assert atypical_bipartition(atyp("delta", False, 2, 1)) == ((2, 1), (1,))
    assert atypical_bipartition(atyp("delta2", False, 0, 0)) == ((1, 1), (1, 1))


def test_gswap():
    lam = ((2, 1), (3,))
    assert gswap(lam) == ((3,), (2, 1))
    assert gswap(gswap(lam)) == lam
    lab = atyp("delta", False, 2, 1)
    assert gswap_label(lab) == atyp("delta", True, 2, 1)
    assert atypical_bipartition(gswap_label(lab)) == gswap(atypical_bipartition(lab))


def test_atypical_subset_of_cross():
    for m in range(0, 9):
        for n in range(0, 9 - m):
            for lam, lab in atypical_set(m, n).items():
                assert is_cross21(lam), (m, n, lam)
                assert classify_atypical(lam, m, n) == lab


def test_classify_respects_gswap():
    for m in range(0, 9):
        for n in range(0, 9 - m):
            for lam, lab in atypical_set(m, n).items():
                assert classify_atypical(gswap(lam), n, m) == gswap_label(lab)


def test_cross_set_closed_under_swap():
    for m in range(0, 7):
        for n in range(0, 7 - m):
            assert sorted(gswap(x) for x in cross_set(m, n)) == cross_set(n, m)


def test_rendering():
    assert part_str((3, 1, 1, 1)) == "3,1^3"
    assert part_str(()) == "-"
    assert part_str((2, 2)) == "2^2"
    assert bip_str(((2, 1), ())) == "[2,1 | -]"
