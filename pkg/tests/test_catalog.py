"""Motive constructors for the classical-group catalog.

Oracles below were worked out by hand from the index-sequence description:
a subset I = {i_1 < ... < i_m} contributes the class (sum 2i_j - 1, sum i_j),
Grassmannians contribute (2N, N) for each weakly increasing bounded tuple.
"""

import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tatecalc.catalog import (
    check_signature,
    height_bijection,
    motive_a,
    motive_fl,
    motive_gl,
    motive_gr,
    motive_v,
    reduced_motive_x,
    splitting_pieces,
    verify_splitting,
)
from tatecalc.tate import (
    Bidegree,
    TateMotive,
    bidegree_d,
    cone_of_inclusion,
    height_filter,
    poincare,
    tensor,
    twist,
    Poly2,
)

GL3 = {
    (0, 0): 1,
    (1, 1): 1,
    (3, 2): 1,
    (5, 3): 1,
    (4, 3): 1,
    (6, 4): 1,
    (8, 5): 1,
    (9, 6): 1,
}

GR24 = {(0, 0): 1, (2, 1): 1, (4, 2): 2, (6, 3): 1, (8, 4): 1}

A23 = {
    (0, 0): 1,
    (1, 1): 1,
    (2, 1): 1,
    (3, 2): 2,
    (4, 2): 1,
    (4, 3): 1,
    (5, 3): 2,
    (6, 4): 1,
    (7, 4): 1,
    (8, 5): 1,
}


def as_dict(m):
    return {tuple(b): c for b, c in m.summands()}


def test_motive_gl_frozen():
    assert as_dict(motive_gl(3)) == GL3
    assert motive_gl(0) == TateMotive.unit()
    assert as_dict(motive_gl(1)) == {(0, 0): 1, (1, 1): 1}


@given(st.integers(min_value=0, max_value=10))
def test_motive_gl_rank_and_heights(n):
    m = motive_gl(n)
    assert m.total_rank() == 2**n
    for h in range(n + 1):
        assert height_filter(m, h, "eq").total_rank() == comb(n, h)


@pytest.mark.parametrize("n", range(1, 9))
def test_motive_gl_recursion(n):
    extra = Poly2.one() + Poly2.term(1, 2 * n - 1, n)
    assert poincare(motive_gl(n)) == poincare(motive_gl(n - 1)) * extra


def test_motive_gr_frozen():
    assert as_dict(motive_gr(2, 4)) == GR24
    assert as_dict(motive_gr(1, 3)) == {(0, 0): 1, (2, 1): 1, (4, 2): 1}
    assert motive_gr(0, 5) == TateMotive.unit()
    assert motive_gr(5, 5) == TateMotive.unit()


@given(
    st.tuples(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
    .filter(lambda t: t[0] <= t[1])
)
def test_motive_gr_rank_and_duality(mn):
    m, n = mn
    gr = motive_gr(m, n)
    assert gr.total_rank() == comb(n, m)
    # partitions in an m x (n-m) box match those in the transposed box
    assert gr == motive_gr(n - m, n)


def test_motive_fl_flag_of_line_then_plane():
    # full flags in 3-space: rank 3! with the classical weight distribution
    assert as_dict(motive_fl((1, 2, 3))) == {
        (0, 0): 1,
        (2, 1): 2,
        (4, 2): 2,
        (6, 3): 1,
    }


def test_motive_fl_is_product_of_steps():
    sig = (2, 4, 5)
    expected = tensor(motive_gr(2, 4), motive_gr(4, 5))
    assert motive_fl(sig) == expected
    assert motive_fl((3,)) == TateMotive.unit()


def test_signature_validation():
    assert check_signature((1, 2, 5)) == (1, 2, 5)
    # a leading zero step is allowed (it is the degenerate prepended stage)
    assert check_signature((0, 1)) == (0, 1)
    for bad in [(2, 2), (3, 1), (1, 0), (-1,), ()]:
        with pytest.raises(ValueError):
            check_signature(bad)


def test_motive_v_frozen():
    assert as_dict(motive_v(2, 3)) == {(0, 0): 1, (3, 2): 1, (5, 3): 1, (8, 5): 1}
    assert motive_v(0, 4) == TateMotive.unit()


@given(
    st.tuples(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
    .filter(lambda t: t[0] <= t[1])
)
def test_motive_v_rank_and_top_case(mn):
    m, n = mn
    v = motive_v(m, n)
    assert v.total_rank() == 2**m
    if m == n:
        assert v == motive_gl(n)


def test_motive_a_frozen():
    assert as_dict(motive_a((2, 3))) == A23


def test_motive_a_is_group_times_flag():
    sig = (1, 3, 4)
    assert motive_a(sig) == tensor(motive_gl(1), motive_fl(sig))


def test_reduced_x_is_high_height_part():
    # the index-subset grading: summands twisted by an m-element subset sit
    # in heights >= m exactly because flag summands all have height zero
    sig = (2, 3)
    for m in range(0, 3):
        assert reduced_motive_x(m, sig) == height_filter(motive_a(sig), m, "ge")
    assert reduced_motive_x(0, sig) == motive_a(sig)


def test_reduced_x_layers():
    sig = (2, 4)
    layer = cone_of_inclusion(reduced_motive_x(2, sig), reduced_motive_x(1, sig))
    expected = TateMotive.zero()
    for i in range(1, sig[0] + 1):
        expected = expected + twist(motive_fl(sig), bidegree_d([i]))
    assert layer == expected


def test_height_bijection_frozen():
    pairs = height_bijection(2, 4)
    assert pairs == [
        ((0, 0), (1, 2)),
        ((0, 1), (1, 3)),
        ((0, 2), (1, 4)),
        ((1, 1), (2, 3)),
        ((1, 2), (2, 4)),
        ((2, 2), (3, 4)),
    ]


@given(
    st.tuples(st.integers(min_value=0, max_value=5), st.integers(min_value=1, max_value=8))
    .filter(lambda t: t[0] <= t[1])
)
def test_height_bijection_hits_every_subset(mn):
    m, n1 = mn
    pairs = height_bijection(m, n1)
    images = {image for _, image in pairs}
    assert images == set(itertools.combinations(range(1, n1 + 1), m))
    base = bidegree_d(range(1, m + 1))
    for lam, image in pairs:
        shift = sum(lam)
        assert bidegree_d(image) == Bidegree(base.p + 2 * shift, base.q + shift)


@pytest.mark.parametrize("m,sig", [(0, (1,)), (1, (2,)), (1, (2, 3)), (2, (3, 4, 6))])
def test_height_filter_transfer(m, sig):
    # prepending a step to the signature does not change the height-m slice
    left = height_filter(motive_a((m,) + sig), m, "eq")
    right = height_filter(motive_a(sig), m, "eq")
    assert left == right


def test_verify_splitting_small():
    rep = verify_splitting(1)
    assert rep["pass"] and rep["total_summands"] == 1
    rep = verify_splitting(4)
    assert rep["pass"]
    assert rep["total_summands"] == 2**4 - 1
    assert [e["summands"] for e in rep["per_m"]] == [comb(4, m) for m in range(1, 5)]
    assert rep["mismatch"] is None


def test_splitting_pieces_cover_reduced_group_motive():
    n = 5
    total = TateMotive.zero()
    for piece in splitting_pieces(n):
        total = total + piece["motive"]
    assert total + TateMotive.unit() == motive_gl(n)


def test_splitting_piece_heights_are_constant():
    for piece in splitting_pieces(4):
        assert piece["heights"] == [piece["m"]]
