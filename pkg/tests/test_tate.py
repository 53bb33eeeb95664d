"""Core motive container and polynomial algebra."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tatecalc.tate import (
    Bidegree,
    NotASubmotive,
    Poly2,
    TateMotive,
    Tridegree,
    bidegree_d,
    chow_height,
    cone_of_inclusion,
    height_filter,
    poincare,
    tensor,
    total_chow_height,
    twist,
)

bidegrees = st.tuples(
    st.integers(min_value=0, max_value=9), st.integers(min_value=0, max_value=6)
).map(lambda t: Bidegree(*t))

motives = st.dictionaries(bidegrees, st.integers(min_value=1, max_value=3), max_size=6).map(
    TateMotive
)


def test_bidegree_d_frozen_values():
    # worked out by hand from the rule (sum of 2i-1, sum of i)
    assert bidegree_d([]) == Bidegree(0, 0)
    assert bidegree_d([1]) == Bidegree(1, 1)
    assert bidegree_d([2]) == Bidegree(3, 2)
    assert bidegree_d([1, 2]) == Bidegree(4, 3)
    assert bidegree_d([1, 2, 3]) == Bidegree(9, 6)
    assert bidegree_d([2, 5]) == Bidegree(12, 7)


def test_bidegree_d_rejects_bad_sequences():
    with pytest.raises(ValueError):
        bidegree_d([2, 2])
    with pytest.raises(ValueError):
        bidegree_d([3, 1])
    with pytest.raises(ValueError):
        bidegree_d([0, 1])


@given(st.lists(st.integers(min_value=1, max_value=12), unique=True, max_size=6))
def test_chow_height_of_index_class_is_length(indices):
    indices = sorted(indices)
    assert chow_height(bidegree_d(indices)) == len(indices)


def test_total_chow_height():
    assert total_chow_height(Tridegree(0, 1, 1)) == 1
    assert total_chow_height(Tridegree(1, 1, 1)) == 0
    assert total_chow_height(Tridegree(2, 0, 1)) == 0


def test_summands_canonical_order():
    m = TateMotive([Bidegree(4, 2), Bidegree(0, 0), Bidegree(3, 2), Bidegree(3, 2)])
    assert m.summands() == [
        (Bidegree(0, 0), 1),
        (Bidegree(3, 2), 2),
        (Bidegree(4, 2), 1),
    ]
    assert m.total_rank() == 4


def test_zero_and_unit():
    assert TateMotive.zero().is_zero()
    assert not TateMotive.unit().is_zero()
    assert TateMotive.unit().summands() == [(Bidegree(0, 0), 1)]


@given(motives, motives)
def test_direct_sum_adds_multiplicities(a, b):
    s = a + b
    keys = {bid for bid, _ in s.summands()}
    assert keys == {bid for bid, _ in a.summands()} | {bid for bid, _ in b.summands()}
    for bid in keys:
        assert s.multiplicity(bid) == a.multiplicity(bid) + b.multiplicity(bid)


@given(motives, motives)
def test_tensor_commutes(a, b):
    assert tensor(a, b) == tensor(b, a)


@settings(max_examples=40)
@given(motives, motives, motives)
def test_tensor_associates_and_distributes(a, b, c):
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))
    assert tensor(a, b + c) == tensor(a, b) + tensor(a, c)


@given(motives)
def test_unit_is_tensor_identity(a):
    assert tensor(a, TateMotive.unit()) == a


@given(motives, bidegrees)
def test_twist_is_tensor_with_single_class(a, b):
    assert twist(a, b) == tensor(a, TateMotive([b]))


@given(motives, motives)
def test_poincare_is_ring_homomorphism(a, b):
    assert poincare(a + b) == poincare(a) + poincare(b)
    assert poincare(tensor(a, b)) == poincare(a) * poincare(b)


@given(motives)
def test_poincare_is_complete_invariant(a):
    # rebuild the motive from the polynomial's coefficient table
    rebuilt = TateMotive({Bidegree(p, q): c for (p, q), c in poincare(a).items()})
    assert rebuilt == a


@given(motives)
def test_height_filter_partition(a):
    heights = {chow_height(bid) for bid, _ in a.summands()}
    total = TateMotive.zero()
    for h in heights:
        total = total + height_filter(a, h, "eq")
    assert total == a
    if heights:
        assert height_filter(a, min(heights), "ge") == a


def test_height_filter_rejects_bad_mode():
    with pytest.raises(ValueError):
        height_filter(TateMotive.unit(), 0, "le")


def test_cone_of_inclusion():
    small = TateMotive([Bidegree(0, 0)])
    big = TateMotive([Bidegree(0, 0), Bidegree(2, 1)])
    assert cone_of_inclusion(small, big) == TateMotive([Bidegree(2, 1)])
    with pytest.raises(NotASubmotive) as err:
        cone_of_inclusion(big, small)
    assert "multiplicity" in str(err.value)


@given(motives, motives)
def test_cone_inverts_direct_sum(a, b):
    assert cone_of_inclusion(a, a + b) == b


def test_poly_rendering():
    assert str(Poly2.one()) == "1"
    assert str(Poly2.term(1, 1, 1)) == "t*u"
    assert str(Poly2.term(2, 3, 2)) == "2*t^3*u^2"
    p = Poly2.one() + Poly2.term(1, 1, 1) + Poly2.term(1, 3, 2) + Poly2.term(1, 4, 3)
    assert str(p) == "1 + t*u + t^3*u^2 + t^4*u^3"
    assert str(Poly2.term(-1, 2, 1) + Poly2.one()) == "1 - t^2*u"
    assert str(Poly2()) == "0"


def test_poly_truncate_weight():
    p = Poly2.term(1, 0, 0) + Poly2.term(2, 1, 3) + Poly2.term(1, 5, 2)
    t = p.truncate_weight(2)
    assert t.coefficient(1, 3) == 0
    assert t.coefficient(5, 2) == 1


def test_poly_substitute_tu():
    # one-variable polynomial in x recorded on the p-axis; substitute x = t^2 u
    p = Poly2.term(1, 0, 0) + Poly2.term(3, 2, 0)
    q = p.substitute_tu(2, 1)
    assert q.coefficient(4, 2) == 3
    assert q.coefficient(0, 0) == 1
    with pytest.raises(ValueError):
        (Poly2.term(1, 1, 1)).substitute_tu(2, 1)


def test_json_round_trip():
    m = TateMotive([Bidegree(0, 0), Bidegree(3, 2), Bidegree(3, 2)])
    blob = json.dumps(m.to_json_dict())
    assert TateMotive.from_json_dict(json.loads(blob)) == m


def test_json_shape():
    m = TateMotive([Bidegree(1, 1)])
    assert m.to_json_dict() == {"summands": [{"p": 1, "q": 1, "mult": 1}]}
