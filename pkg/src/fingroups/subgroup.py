"""Subgroups as carrier subsets, cosets, and the counting form of Lagrange.

A subgroup is just an ElemSet that happens to contain the unit and be
closed under y * x^-1.  Cosets are sets too; the index of H in K is the
number of distinct minimum-index coset representatives found inside K.
It is never computed by dividing cardinalities, so lagrange_check remains
a falsifiable statement rather than a restatement of its own definition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .carrier import ElemSet, Relation, set_of
from .errors import CarrierMismatch, InvalidSubgroup
from .group import Group
from .report import Check


def _require_same_carrier(g: Group, s: ElemSet) -> None:
    if s.carrier != g.carrier:
        raise CarrierMismatch("set does not live on the group's carrier")


def is_subgroup(g: Group, h: ElemSet) -> bool:
    """Unit membership plus closure under y * x^-1 for members x, y."""
    _require_same_carrier(g, h)
    if g.unit not in h:
        return False
    m = h.as_array()
    prods = g.mul[np.ix_(m, g.inv[m])]
    return bool(h.mask()[prods].all())


@dataclass(frozen=True)
class SubgroupSet:
    """An ElemSet validated to be a subgroup at construction time."""

    group: Group
    members: ElemSet

    @property
    def card(self) -> int:
        return self.members.card


def subgroup_set(g: Group, members: ElemSet) -> SubgroupSet:
    if not is_subgroup(g, members):
        raise InvalidSubgroup(f"{members!r} is not a subgroup")
    return SubgroupSet(g, members)


def closure(g: Group, gens) -> ElemSet:
    """Smallest multiplication-closed subset containing the generators and
    the unit: breadth-first expansion by left-multiplying with generators.
    The carrier is finite, so the loop is fuel-bounded by its size."""
    gens = [int(x) for x in gens]
    if not gens:
        raise ValueError("closure needs at least one generator")
    for x in gens:
        g.carrier.check_point(x)
    rows = g.rows()
    bits = 1 << g.unit
    frontier = [g.unit]
    while frontier:
        nxt = []
        for y in frontier:
            for gen in gens:
                z = rows[gen][y]
                if not (bits >> z) & 1:
                    bits |= 1 << z
                    nxt.append(z)
        frontier = nxt
    return ElemSet(g.carrier, bits)


def left_coset(g: Group, h: ElemSet, a: int) -> ElemSet:
    """aH, i.e. the x with a^-1 * x in H."""
    _require_same_carrier(g, h)
    g.carrier.check_point(a)
    bits = 0
    row = g.rows()[a]
    for x in h:
        bits |= 1 << row[x]
    return ElemSet(g.carrier, bits)


def right_coset(g: Group, h: ElemSet, a: int) -> ElemSet:
    """Ha, i.e. the x with x * a^-1 in H."""
    _require_same_carrier(g, h)
    g.carrier.check_point(a)
    bits = 0
    rows = g.rows()
    for x in h:
        bits |= 1 << rows[x][a]
    return ElemSet(g.carrier, bits)


def left_coset_relation(g: Group, h: ElemSet) -> Relation:
    """rel(x, y) holds when y lies in xH."""
    _require_same_carrier(g, h)
    return Relation(g.carrier, lambda x, y: g.op(g.invert(x), y) in h)


def right_coset_relation(g: Group, h: ElemSet) -> Relation:
    """rel(x, y) holds when y lies in Hx."""
    _require_same_carrier(g, h)
    return Relation(g.carrier, lambda x, y: g.op(y, g.invert(x)) in h)


def left_coset_roots(g: Group, h: ElemSet, domain: ElemSet) -> np.ndarray:
    """Minimum-index representative of xH for each x in the domain, -1
    elsewhere.  Requires h to be a subgroup and the domain to be a union of
    left cosets (as any subgroup containing h is); then the first unseen
    point in ascending order is the minimum of its own coset."""
    table = np.full(g.order, -1, dtype=np.int64)
    m = h.as_array()
    for x in domain:
        if table[x] == -1:
            table[g.mul[x, m]] = x
    return table


def left_index(g: Group, h: ElemSet, k: ElemSet) -> int:
    """Number of distinct left cosets of h meeting k, counted by collecting
    minimum-index representatives inside k."""
    if not is_subgroup(g, h):
        raise InvalidSubgroup("h must be a subgroup")
    if not is_subgroup(g, k):
        raise InvalidSubgroup("k must be a subgroup")
    if not h.issubset(k):
        raise InvalidSubgroup("h must be contained in k")
    roots = left_coset_roots(g, h, k)
    return int(np.count_nonzero(np.unique(roots) >= 0))


def right_index(g: Group, h: ElemSet, k: ElemSet) -> int:
    """Right-coset count, computed independently of left_index."""
    if not is_subgroup(g, h):
        raise InvalidSubgroup("h must be a subgroup")
    if not is_subgroup(g, k):
        raise InvalidSubgroup("k must be a subgroup")
    if not h.issubset(k):
        raise InvalidSubgroup("h must be contained in k")
    m = h.as_array()
    seen = np.zeros(g.order, dtype=bool)
    count = 0
    for x in k:
        if not seen[x]:
            seen[g.mul[m, x]] = True
            count += 1
    return count


def lagrange_check(g: Group, h: ElemSet, k: ElemSet) -> list[Check]:
    """card(H) * [K : H] == card(K), with the divisibility corollary."""
    idx = left_index(g, h, k)
    checks = [
        Check("lagrange", h.card * idx == k.card, h.card * idx, k.card,
              {"subgroup_order": h.card, "index": idx}),
        Check("lagrange_divides", k.card % h.card == 0, k.card % h.card, 0),
    ]
    return checks


def set_product(g: Group, h: ElemSet, k: ElemSet) -> ElemSet:
    """HK = {x * y : x in H, y in K} for arbitrary sets."""
    _require_same_carrier(g, h)
    _require_same_carrier(g, k)
    bits = 0
    m = k.as_array()
    for x in h:
        for z in g.mul[x, m]:
            bits |= 1 << int(z)
    return ElemSet(g.carrier, bits)


def product_subgroup_checks(g: Group, h: ElemSet, k: ElemSet) -> list[Check]:
    """For subgroups H and K: HK is a subgroup exactly when HK == KH, and
    HK and KH are subgroups together."""
    if not is_subgroup(g, h) or not is_subgroup(g, k):
        raise InvalidSubgroup("set_product criterion needs two subgroups")
    hk = set_product(g, h, k)
    kh = set_product(g, k, h)
    hk_sub = is_subgroup(g, hk)
    kh_sub = is_subgroup(g, kh)
    return [
        Check("product_subgroup_iff_commutes", hk_sub == (hk == kh),
              int(hk_sub), int(hk == kh)),
        Check("product_subgroup_symmetric", hk_sub == kh_sub,
              int(hk_sub), int(kh_sub)),
    ]


def subgroup_sample(g: Group) -> list[ElemSet]:
    """Deduplicated closures of every singleton and every unordered pair,
    plus the full group; ascending by (cardinality, membership)."""
    seen: dict[int, ElemSet] = {}

    def add(s: ElemSet):
        seen.setdefault(s.bits, s)

    n = g.order
    for x in range(n):
        add(closure(g, [x]))
    for x in range(n):
        for y in range(x + 1, n):
            add(closure(g, [x, y]))
    add(g.full_set())
    return sorted(seen.values(), key=lambda s: (s.card, s.indices()))


def members_named(g: Group, names) -> ElemSet:
    return set_of(g.carrier, names)
