import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fingroups import (
    Carrier,
    ElemSet,
    closure,
    conjugate_set,
    conjugation_action,
    conjugation_action_on_subsets,
    fixed_points,
    left_translation_action,
    make_action,
    mod_p_fixed_point_check,
    orbit,
    orbit_stabilizer_check,
    set_of,
    singleton,
    stabilizer,
    subgroup_sample,
    symmetric_elements,
)
from fingroups.errors import (
    FamilyNotClosed,
    NotBijective,
    NotMorphism,
    NotPPower,
    NotPrime,
)


def members(g, pts):
    return set_of(g.carrier, pts)


def trivial_action(g, n_points):
    return make_action(g, g.full_set(), Carrier(n_points),
                       lambda x, z: z)


# -- validation ----------------------------------------------------------


def test_trivial_action_valid(s3):
    act = trivial_action(s3, 5)
    assert act.table.shape == (6, 5)


def test_constant_map_not_bijective(s3):
    with pytest.raises(NotBijective) as exc:
        make_action(s3, s3.full_set(), Carrier(3), lambda x, z: 0)
    # every row of a constant table is constant, so the scan reports the
    # first acting element
    assert exc.value.x == 0


def test_non_morphism_detected(z2):
    # each row a permutation, but the nonunit row squares to a 3-cycle
    # instead of the identity
    table = np.array([[0, 1, 2], [1, 2, 0]])
    with pytest.raises(NotMorphism):
        make_action(z2, z2.full_set(), Carrier(3), table)


def test_validation_restricted_to_acting_subgroup(s3):
    # rows outside the acting subgroup may be garbage; only H's rows count
    table = np.zeros((6, 3), dtype=np.int64)
    table[0] = [0, 1, 2]
    act = make_action(s3, singleton(s3.carrier, s3.unit), Carrier(3), table)
    assert act.apply(0, 1) == 1


def test_action_table_read_only(s3):
    act = trivial_action(s3, 4)
    with pytest.raises(ValueError):
        act.table[0, 0] = 1


# -- orbits, stabilizers, fixed points -----------------------------------


def test_trivial_action_orbits(s3):
    act = trivial_action(s3, 4)
    assert all(orbit(act, a).indices() == (a,) for a in range(4))
    assert all(stabilizer(act, a).card == 6 for a in range(4))
    assert fixed_points(act).card == 4


def test_unit_subgroup_acts_trivially(s3):
    act = conjugation_action(s3, singleton(s3.carrier, s3.unit))
    assert all(orbit(act, a).card == 1 for a in s3.elements())


def test_conjugation_orbit_of_transposition(s3):
    act = conjugation_action(s3, s3.full_set())
    assert orbit(act, 1).indices() == (1, 2, 5)  # the transpositions
    st_ = stabilizer(act, 1)
    assert st_.indices() == (0, 1)  # identity and the transposition itself
    assert fixed_points(act).indices() == (0,)  # trivial center


def test_conjugation_on_abelian_fixes_everything(z12):
    act = conjugation_action(z12, z12.full_set())
    assert fixed_points(act).card == 12


def test_orbit_stabilizer_s3(s3):
    act = conjugation_action(s3, s3.full_set())
    checks = orbit_stabilizer_check(act, 1)
    assert [c.name for c in checks] == ["orbit_stabilizer", "orbit_divides"]
    assert all(c.ok for c in checks)
    assert checks[0].lhs == 3  # orbit size = index of the stabilizer


def test_orbit_stabilizer_s4_three_cycle(s4):
    perms = symmetric_elements(4)
    a = perms.index((1, 2, 0, 3))
    act = conjugation_action(s4, s4.full_set())
    assert orbit(act, a).card == 8
    assert stabilizer(act, a).card == 3
    assert all(c.ok for c in orbit_stabilizer_check(act, a))


def test_orbits_partition_the_points(s4):
    act = conjugation_action(s4, s4.full_set())
    seen = set()
    total = 0
    for a in s4.elements():
        if a not in seen:
            orb = set(orbit(act, a).indices())
            assert not (orb & seen)
            seen |= orb
            total += len(orb)
    assert total == 24


@given(st.integers(0, 23))
@settings(max_examples=30, deadline=None)
def test_orbit_size_divides_acting_order(s4, a):
    h = closure(s4, [1, 8])
    act = conjugation_action(s4, h)
    assert h.card % orbit(act, a).card == 0


# -- the mod-p fixed point congruence ------------------------------------


def test_mpl_translation_cosets_of_self(s3):
    h = members(s3, [0, 2])
    act = left_translation_action(s3, h, h, s3.full_set())
    assert act.points.size == 3
    assert fixed_points(act).card == 1
    chk = mod_p_fixed_point_check(act, 2)
    assert chk.ok and (chk.lhs, chk.rhs) == (1, 1)


def test_mpl_requires_prime(s3):
    act = conjugation_action(s3, members(s3, [0, 3, 4]))
    with pytest.raises(NotPrime):
        mod_p_fixed_point_check(act, 4)


def test_mpl_requires_p_power(s3):
    act = conjugation_action(s3, s3.full_set())  # |H| = 6 is not a 2-power
    with pytest.raises(NotPPower):
        mod_p_fixed_point_check(act, 2)


def test_mpl_trivial_acting_group(s3):
    act = conjugation_action(s3, singleton(s3.carrier, s3.unit))
    chk = mod_p_fixed_point_check(act, 3)  # p^0 case
    assert chk.ok and chk.lhs == chk.rhs


def test_mpl_across_p_subgroups(s4):
    full = s4.full_set()
    for h in subgroup_sample(s4):
        if h.card in (2, 4, 8):
            act = left_translation_action(s4, h, h, full)
            assert mod_p_fixed_point_check(act, 2).ok


# -- coset translation ---------------------------------------------------


def test_translation_action_z12(z12):
    act = left_translation_action(
        z12, members(z12, [0, 6]), members(z12, [0, 4, 8]), z12.full_set()
    )
    assert act.point_labels == (0, 1, 2, 3)
    assert [act.apply(6, i) for i in range(4)] == [2, 3, 0, 1]
    assert fixed_points(act).card == 0


def test_translation_by_trivial_group(s3):
    h = singleton(s3.carrier, s3.unit)
    l = members(s3, [0, 2])
    act = left_translation_action(s3, h, l, s3.full_set())
    assert act.points.size == 3
    assert fixed_points(act).card == 3


def test_translation_matches_coset_arithmetic(s4):
    rows = s4.rows()
    h = closure(s4, [3])
    l = closure(s4, [1, 2])
    act = left_translation_action(s4, h, l, s4.full_set())
    lset = frozenset(l.indices())
    for x in h:
        for i, r in enumerate(act.point_labels):
            got = act.point_labels[act.apply(x, i)]
            want = min(rows[rows[x][r]][m] for m in lset)
            assert got == want


# -- conjugation on families of sets -------------------------------------


def test_normal_singleton_family(s3):
    fam = [members(s3, A3) for A3 in [(0, 3, 4)]]
    act = conjugation_action_on_subsets(s3, s3.full_set(), fam)
    assert fixed_points(act).card == 1


def test_s3_order_two_family_single_orbit(s3):
    fam = [members(s3, [0, t]) for t in (1, 2, 5)]
    act = conjugation_action_on_subsets(s3, s3.full_set(), fam)
    assert orbit(act, 0).card == 3


def test_family_not_closed(s3):
    fam = [members(s3, [0, 1])]  # conjugates escape the family
    with pytest.raises(FamilyNotClosed) as exc:
        conjugation_action_on_subsets(s3, s3.full_set(), fam)
    assert exc.value.index == 0


def test_subset_action_matches_conjugate_set(s4):
    base = closure(s4, [1])
    fam_bits = sorted({conjugate_set(s4, base, x).bits for x in s4.elements()})
    fam = [ElemSet(s4.carrier, b) for b in fam_bits]
    act = conjugation_action_on_subsets(s4, s4.full_set(), fam)
    for x in (0, 5, 17):
        for i, f in enumerate(fam):
            assert fam[act.apply(x, i)].bits == conjugate_set(s4, f, x).bits
