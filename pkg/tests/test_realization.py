"""Topological side: word-length ranks, Betti tables, binomial identities."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tatecalc.catalog import motive_gl, motive_gr
from tatecalc.realization import (
    gaussian_binomial,
    grassmannian_betti,
    q_series_identity,
    realize_motive,
    thom_decomposition_check,
    unitary_word_length_ranks,
)
from tatecalc.tate import Bidegree, poincare

mn_pairs = st.tuples(
    st.integers(min_value=0, max_value=9), st.integers(min_value=0, max_value=9)
).filter(lambda t: t[1] <= t[0])


def test_word_length_ranks_frozen_n3():
    # exterior algebra on classes in degrees 1, 3, 5
    assert unitary_word_length_ranks(3, 0) == {0: 1}
    assert unitary_word_length_ranks(3, 1) == {1: 1, 3: 1, 5: 1}
    assert unitary_word_length_ranks(3, 2) == {4: 1, 6: 1, 8: 1}
    assert unitary_word_length_ranks(3, 3) == {9: 1}


@given(mn_pairs)
def test_word_length_total_rank(nm):
    n, m = nm
    assert sum(unitary_word_length_ranks(n, m).values()) == comb(n, m)


def test_grassmannian_betti_frozen():
    assert grassmannian_betti(1, 3) == {0: 1, 2: 1, 4: 1}
    assert grassmannian_betti(2, 4) == {0: 1, 2: 1, 4: 2, 6: 1, 8: 1}
    assert grassmannian_betti(0, 6) == {0: 1}


@given(mn_pairs)
def test_betti_matches_motive_weights(nm):
    n, m = nm
    betti = grassmannian_betti(m, n)
    gr = motive_gr(m, n)
    assert betti == {2 * k: mult for (_, k), mult in _weights(gr).items()}


def _weights(motive):
    out = {}
    for b, mult in motive.summands():
        out[(b.p, b.q)] = mult
    return out


def test_gaussian_binomial_frozen():
    assert gaussian_binomial(4, 2) == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert gaussian_binomial(5, 0) == {0: 1}
    assert gaussian_binomial(3, 3) == {0: 1}


@given(mn_pairs)
def test_gaussian_three_routes_agree(nm):
    n, m = nm
    gauss = gaussian_binomial(n, m)
    # route 2: topological Betti numbers, halved degrees
    assert gauss == {k // 2: v for k, v in grassmannian_betti(m, n).items()}
    # route 3: motive summand multiplicities at (2k, k)
    gr = motive_gr(m, n)
    assert gauss == {
        k: gr.multiplicity(Bidegree(2 * k, k))
        for k in range(m * (n - m) + 1)
        if gr.multiplicity(Bidegree(2 * k, k))
    } or (m * (n - m) == 0 and gauss == {0: 1})


@given(mn_pairs)
def test_gaussian_counting_and_symmetry(nm):
    n, m = nm
    gauss = gaussian_binomial(n, m)
    assert sum(gauss.values()) == comb(n, m)
    top = m * (n - m)
    assert all(gauss.get(k, 0) == gauss.get(top - k, 0) for k in range(top + 1))


@pytest.mark.parametrize("n", range(1, 10))
def test_gaussian_pascal_recurrence(n):
    for m in range(1, n):
        lhs = gaussian_binomial(n, m)
        a = gaussian_binomial(n - 1, m - 1)
        b = gaussian_binomial(n - 1, m)
        combined = dict(a)
        for k, v in b.items():
            combined[k + m] = combined.get(k + m, 0) + v
        assert lhs == combined


def test_realize_collapses_to_first_degree():
    assert realize_motive(motive_gl(2)) == {0: 1, 1: 1, 3: 1, 4: 1}
    gr = motive_gr(2, 4)
    assert realize_motive(gr) == grassmannian_betti(2, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_thom_decomposition(n):
    rep = thom_decomposition_check(n)
    assert rep["pass"]
    for entry in rep["per_m"]:
        assert entry["shift"] == entry["m"] ** 2
        assert entry["equal"]


def test_thom_rejects_degenerate_rank():
    with pytest.raises(ValueError):
        thom_decomposition_check(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_q_series_identity_small(n):
    lhs, rhs = q_series_identity(n)
    assert lhs == rhs
    # the left side is the group motive's generating polynomial
    assert lhs == poincare(motive_gl(n))
