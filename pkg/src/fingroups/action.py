"""Group actions as validated tables, orbits, stabilizers, and the mod-p
fixed-point count.

An Action materializes to(x, z) as a full table over the whole group times
the point carrier, but only the acting subgroup is constrained: each of its
elements must act bijectively and the composition law must hold across it.
Rows for elements outside the acting subgroup merely have to stay in range
(the stock constructors use the identity there).

The counting results: the orbit of a point has the same size as the index
of its stabilizer, hence divides the acting order; and when the acting
order is a prime power p^a, the total point count is congruent mod p to the
number of fixed points.  Both are computed from scratch on both sides, not
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .carrier import Carrier, ElemSet
from .conjnormal import conjugate_set
from .errors import (
    FamilyNotClosed,
    InternalInvariant,
    InvalidSubgroup,
    NotBijective,
    NotMorphism,
    NotPPower,
    NotPrime,
    PointOutOfRange,
)
from .group import Group
from .numutil import is_prime
from .report import Check
from .subgroup import SubgroupSet, left_coset_roots, left_index, subgroup_set


@dataclass(eq=False)
class Action:
    """A validated action of ``acting`` (a subgroup of ``group``) on the
    abstract point carrier ``points``.  ``point_labels``, when present,
    says what each point stands for (a coset root, a subgroup, ...)."""

    group: Group
    acting: SubgroupSet
    points: Carrier
    table: np.ndarray
    point_labels: tuple | None = None

    def apply(self, x: int, z: int) -> int:
        return int(self.table[x, z])


def make_action(
    g: Group,
    acting: ElemSet | SubgroupSet,
    points: Carrier,
    to: Callable[[int, int], int] | np.ndarray,
    point_labels: tuple | None = None,
) -> Action:
    """Materialize and validate an action table.

    Raises NotBijective(x) when some acting element fails to permute the
    points, and NotMorphism(x, y, z) with the first violating triple when
    the composition law to(x*y, z) == to(x, to(y, z)) breaks on the acting
    subgroup.
    """
    hs = acting if isinstance(acting, SubgroupSet) else subgroup_set(g, acting)
    s = points.size
    if isinstance(to, np.ndarray):
        table = to.astype(np.int64, copy=True)
        if table.shape != (g.order, s):
            raise PointOutOfRange(
                f"table shape {table.shape} does not match ({g.order}, {s})"
            )
    else:
        table = np.asarray(
            [[to(x, z) for z in range(s)] for x in g.elements()], dtype=np.int64
        ).reshape(g.order, s)
    if s and table.size and (table.min() < 0 or table.max() >= s):
        raise PointOutOfRange("action table leaves the point carrier")

    m = hs.members.as_array()
    pts = np.arange(s, dtype=np.int64)
    for x in m:
        if not np.array_equal(np.sort(table[int(x)]), pts):
            raise NotBijective(int(x))
    for x in m:
        lhs = table[g.mul[int(x), m]]
        rhs = table[int(x)][table[m]]
        if not np.array_equal(lhs, rhs):
            yi, z = np.argwhere(lhs != rhs)[0]
            raise NotMorphism(int(x), int(m[yi]), int(z))

    # The unit acts trivially as a consequence of bijectivity plus the
    # composition law; keep the assertion anyway.
    if s and not np.array_equal(table[g.unit], pts):
        raise InternalInvariant("unit fails to act as the identity")

    table.setflags(write=False)
    return Action(g, hs, points, table, point_labels)


def orbit(act: Action, a: int) -> ElemSet:
    """Image of the point under every acting element (a direct image, not
    a reachability search: the acting set is closed anyway)."""
    act.points.check_point(a)
    bits = 0
    for z in np.unique(act.table[act.acting.members.as_array(), a]):
        bits |= 1 << int(z)
    return ElemSet(act.points, bits)


def stabilizer(act: Action, a: int) -> ElemSet:
    """The acting elements fixing the point; always a subgroup."""
    act.points.check_point(a)
    m = act.acting.members.as_array()
    keep = m[act.table[m, a] == a]
    bits = 0
    for x in keep:
        bits |= 1 << int(x)
    return ElemSet(act.group.carrier, bits)


def fixed_points(act: Action) -> ElemSet:
    """Points fixed by the entire acting subgroup."""
    m = act.acting.members.as_array()
    s = act.points.size
    grid = act.table[m] == np.arange(s, dtype=np.int64)[None, :]
    bits = 0
    for z in np.nonzero(grid.all(axis=0))[0]:
        bits |= 1 << int(z)
    return ElemSet(act.points, bits)


def orbit_stabilizer_check(act: Action, a: int) -> list[Check]:
    """card(orbit) equals the index of the stabilizer in the acting
    subgroup, hence divides its order."""
    orb = orbit(act, a)
    stab = stabilizer(act, a)
    idx = left_index(act.group, stab, act.acting.members)
    return [
        Check("orbit_stabilizer", orb.card == idx, orb.card, idx,
              {"point": a, "stabilizer_order": stab.card}),
        Check("orbit_divides", act.acting.card % orb.card == 0,
              act.acting.card % orb.card, 0, {"point": a}),
    ]


def mod_p_fixed_point_check(act: Action, p: int) -> Check:
    """For a p-power acting order: |points| is congruent to |fixed points|
    modulo p.  Both counts are computed outright."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    m = act.acting.card
    while m % p == 0:
        m //= p
    if m != 1:
        raise NotPPower(f"acting order {act.acting.card} is not a power of {p}")
    s = act.points.size
    s0 = fixed_points(act).card
    return Check("mod_p_fixed_points", s % p == s0 % p, s % p, s0 % p,
                 {"points": s, "fixed": s0, "p": p})


def left_translation_action(g: Group, h: ElemSet, l: ElemSet, k: ElemSet) -> Action:
    """H acting on the left cosets of L inside K by translation.

    Points are the minimum-index coset representatives; x sends the coset
    of r to the coset of x*r.  Elements outside K act as the identity, so
    the table is total without constraining anything that matters.
    """
    for name, s in (("h", h), ("l", l), ("k", k)):
        if not s.issubset(k):
            raise InvalidSubgroup(f"{name} must be contained in k")
    hs = subgroup_set(g, h)
    subgroup_set(g, l)
    subgroup_set(g, k)

    root_of = left_coset_roots(g, l, k)
    roots = sorted({int(root_of[x]) for x in k})
    pos = np.full(g.order, -1, dtype=np.int64)
    pos[roots] = np.arange(len(roots))
    roots_arr = np.asarray(roots, dtype=np.int64)

    table = np.empty((g.order, len(roots)), dtype=np.int64)
    ident = np.arange(len(roots), dtype=np.int64)
    kmask = k.mask()
    for x in g.elements():
        if kmask[x]:
            table[x] = pos[root_of[g.mul[x, roots_arr]]]
        else:
            table[x] = ident
    return make_action(g, hs, Carrier(len(roots)), table, tuple(roots))


def conjugation_action(g: Group, h: ElemSet) -> Action:
    """H acting on the whole carrier by z -> x * z * x^-1.  (Conjugation
    written with x^-1 on the left would compose contravariantly.)"""
    hs = subgroup_set(g, h)
    idx = np.arange(g.order, dtype=np.int64)
    table = np.empty((g.order, g.order), dtype=np.int64)
    for x in g.elements():
        table[x] = g.mul[g.mul[x, idx], g.inv[x]]
    return make_action(g, hs, g.carrier, table)


def conjugation_action_on_subsets(
    g: Group, acting: ElemSet | SubgroupSet, family: Sequence[ElemSet]
) -> Action:
    """H permuting an indexed family of subsets by L -> x L x^-1.

    The family must be closed under conjugation by acting elements; raises
    FamilyNotClosed(x, i) otherwise.  Conjugates by non-acting elements
    that fall outside the family are replaced by the identity so the table
    stays total.
    """
    hs = acting if isinstance(acting, SubgroupSet) else subgroup_set(g, acting)
    index: dict[int, int] = {}
    for i, member in enumerate(family):
        if member.bits in index:
            raise ValueError("family members must be distinct")
        index[member.bits] = i

    hmask = hs.members.mask()
    table = np.empty((g.order, len(family)), dtype=np.int64)
    for x in g.elements():
        for i, member in enumerate(family):
            conj = conjugate_set(g, member, x)
            j = index.get(conj.bits)
            if j is None:
                if hmask[x]:
                    raise FamilyNotClosed(x, i)
                j = i
            table[x, i] = j
    return make_action(g, hs, Carrier(len(family)), table, tuple(family))
