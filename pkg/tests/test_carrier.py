import pytest
from hypothesis import given, strategies as st

from fingroups import (
    Carrier,
    ElemSet,
    Relation,
    class_count,
    class_roots,
    empty_set,
    full_set,
    image,
    preimage,
    root,
    set_of,
    singleton,
)
from fingroups.errors import CarrierMismatch, PointOutOfRange

C6 = Carrier(6)


def bitset(points):
    return set_of(C6, points)


def test_membership_and_card():
    a = bitset([0, 3])
    assert 0 in a and 3 in a
    assert 1 not in a
    assert a.card == 2
    assert len(a) == 2
    assert list(a) == [0, 3]  # iteration is ascending


def test_subset():
    assert bitset([0, 3]).issubset(bitset([0, 1, 3]))
    assert not bitset([0, 3]).issubset(bitset([0, 1, 2]))
    assert empty_set(C6).issubset(bitset([4]))
    assert bitset([2]).issubset(bitset([2]))


def test_boolean_algebra():
    a, b = bitset([0, 1]), bitset([1, 2])
    assert (a & b).indices() == (1,)
    assert (a | b).indices() == (0, 1, 2)
    assert (a - b).indices() == (0,)
    assert (a ^ b).indices() == (0, 2)
    assert (a & empty_set(C6)).card == 0
    assert full_set(C6).complement().card == 0
    assert singleton(C6, 5).indices() == (5,)


def test_carrier_mismatch_rejected():
    with pytest.raises(CarrierMismatch):
        bitset([0]) | set_of(Carrier(7), [0])


def test_out_of_range_points_rejected():
    with pytest.raises(PointOutOfRange):
        set_of(C6, [6])
    with pytest.raises(PointOutOfRange):
        singleton(C6, -1)


bits6 = st.integers(min_value=0, max_value=63)


@given(bits6, bits6)
def test_inclusion_exclusion(x, y):
    a, b = ElemSet(C6, x), ElemSet(C6, y)
    assert (a | b).card + (a & b).card == a.card + b.card


@given(bits6, bits6)
def test_subset_iff_union_absorbs(x, y):
    a, b = ElemSet(C6, x), ElemSet(C6, y)
    assert a.issubset(b) == ((a | b).bits == b.bits)


@given(bits6)
def test_complement_involution(x):
    a = ElemSet(C6, x)
    assert a.complement().complement().bits == a.bits
    assert (a & a.complement()).card == 0
    assert (a | a.complement()).card == 6


@given(bits6)
def test_iteration_sorted_and_consistent(x):
    a = ElemSet(C6, x)
    pts = list(a)
    assert pts == sorted(pts)
    assert all(p in a for p in pts)
    assert len(pts) == a.card


# -- image / preimage ---------------------------------------------------


def test_image_identity():
    a = bitset([0, 1, 2])
    assert image(lambda x: x, a, C6).indices() == (0, 1, 2)


def test_image_shift():
    a = bitset([0, 3])
    assert image(lambda x: (x + 1) % 6, a, C6).indices() == (1, 4)


def test_image_constant_collapses():
    a = bitset([1, 3, 5])
    assert image(lambda x: 2, a, C6).indices() == (2,)


def test_image_range_checked():
    with pytest.raises(PointOutOfRange):
        image(lambda x: x + 10, bitset([0]), C6)


def test_preimage_full_and_empty():
    assert preimage(lambda x: x, full_set(C6), C6).card == 6
    assert preimage(lambda x: x, empty_set(C6), C6).card == 0


def test_preimage_mod_map():
    # f: Z6 -> Z3, x mod 3; the fibre over 0 is {0, 3}
    c3 = Carrier(3)
    assert preimage(lambda x: x % 3, singleton(c3, 0), C6).indices() == (0, 3)


# -- canonical representatives ------------------------------------------


def test_single_class():
    rel = Relation(C6, lambda x, y: True)
    assert root(rel, 4) == 0
    assert class_count(rel, full_set(C6)) == 1


def test_mod3_classes():
    rel = Relation(C6, lambda x, y: x % 3 == y % 3)
    assert [root(rel, x) for x in range(6)] == [0, 1, 2, 0, 1, 2]
    assert class_roots(rel, full_set(C6)).indices() == (0, 1, 2)
    assert class_count(rel, full_set(C6)) == 3


def test_root_is_class_minimum():
    rel = Relation(C6, lambda x, y: x % 2 == y % 2)
    for x in range(6):
        members = [y for y in range(6) if rel(x, y)]
        assert root(rel, x) == min(members)


def test_roots_restricted_to_domain():
    rel = Relation(C6, lambda x, y: x % 3 == y % 3)
    dom = bitset([2, 4, 5])
    # 4 and 2 sit alone in their classes within the domain, 5 joins 2
    assert class_count(rel, dom) == 2
