"""Conjugation, normality, normalizers, and quotient groups.

Conventions: conjugate(g, x, y) is x^-1 * y * x (the image of y under
conjugation by x), while conjugate_set(g, h, x) is the set x H x^-1, i.e.
the y whose conjugate by x lands in H.  Normality of H in K only demands
H contained in every x H x^-1 for x in K; equality then follows because
conjugation preserves cardinality.

Quotients are concrete groups: the carrier re-indexes the minimum-index
coset representatives, multiplication is multiply-then-take-root, and the
whole table goes back through the group validator rather than being
trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .carrier import ElemSet
from .errors import InternalInvariant, InvalidSubgroup, NotNormal
from .group import Group, from_cayley_table
from .report import Check
from .subgroup import (
    SubgroupSet,
    is_subgroup,
    left_coset_roots,
    left_index,
    subgroup_set,
)


def conjugate(g: Group, x: int, y: int) -> int:
    """y conjugated by x: x^-1 * y * x."""
    return int(g.mul[g.mul[g.inv[x], y], x])


def conjugate_set(g: Group, h: ElemSet, x: int) -> ElemSet:
    """x H x^-1, equivalently the y with x^-1 * y * x in H."""
    g.carrier.check_point(x)
    bits = 0
    if h.bits:
        m = h.as_array()
        for z in g.mul[g.mul[x, m], g.inv[x]]:
            bits |= 1 << int(z)
    return ElemSet(h.carrier, bits)


def is_normal(g: Group, h: ElemSet, k: ElemSet) -> bool:
    """H contained in x H x^-1 for every x in K.  Containment one way is
    enough: conjugation is a bijection, so the cardinalities match."""
    if not h.bits or not k.bits:
        return not h.bits
    hm = h.as_array()
    km = k.as_array()
    # grid of x^-1 * y * x over (x, y)
    inner = g.mul[np.ix_(g.inv[km], hm)]
    conj = g.mul[inner, km[:, None]]
    return bool(h.mask()[conj].all())


def normalizer(g: Group, h: ElemSet, k: ElemSet) -> ElemSet:
    """The x in K for which x H x^-1 agrees with H at every point of K.
    The agreement test is quantified over K, matching the containment
    context in which the normalizer gets used."""
    if not is_subgroup(g, h):
        raise InvalidSubgroup("h must be a subgroup")
    if not is_subgroup(g, k):
        raise InvalidSubgroup("k must be a subgroup")
    if not h.issubset(k):
        raise InvalidSubgroup("h must be contained in k")
    km = k.as_array()
    hmask = h.mask()
    h_on_k = hmask[km]
    bits = 0
    for x in k:
        z = g.mul[g.mul[g.inv[x], km], x]
        if np.array_equal(hmask[z], h_on_k):
            bits |= 1 << x
    return ElemSet(g.carrier, bits)


@dataclass(eq=False)
class QuotientGroup:
    """K/H realized on the carrier of coset roots.

    ``roots[i]`` is the ambient point representing quotient point i, and
    ``project`` sends each ambient member of K to its coset's quotient
    point.  ``group`` is a fully validated Group on the root carrier.
    """

    base: Group
    normal_sub: SubgroupSet
    ambient: SubgroupSet
    roots: tuple[int, ...]
    group: Group
    proj_table: np.ndarray

    def project(self, x: int) -> int:
        self.base.carrier.check_point(x)
        q = int(self.proj_table[x])
        if q < 0:
            raise InvalidSubgroup(f"point {x} is outside the ambient subgroup")
        return q

    def embed(self, i: int) -> int:
        self.group.carrier.check_point(i)
        return self.roots[i]


def quotient_group(g: Group, h: ElemSet, k: ElemSet) -> QuotientGroup:
    """Build K/H.  Raises NotNormal if H is not normal in K."""
    hs = subgroup_set(g, h)
    ks = subgroup_set(g, k)
    if not h.issubset(k):
        raise InvalidSubgroup("h must be contained in k")
    if not is_normal(g, h, k):
        raise NotNormal("subgroup is not normal in the ambient group")

    root_of = left_coset_roots(g, h, k)
    roots = tuple(sorted({int(root_of[x]) for x in k}))
    pos = {r: i for i, r in enumerate(roots)}

    m = len(roots)
    table = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(roots):
        prods = root_of[g.mul[a, np.asarray(roots)]]
        table[i] = [pos[int(r)] for r in prods]
    qgroup = from_cayley_table(m, table)

    if qgroup.order != left_index(g, h, k):
        raise InternalInvariant("quotient order differs from the subgroup index")

    proj = np.full(g.order, -1, dtype=np.int64)
    for x in k:
        proj[x] = pos[int(root_of[x])]
    proj.setflags(write=False)
    return QuotientGroup(g, hs, ks, roots, qgroup, proj)


def quotient_morphism_check(q: QuotientGroup) -> list[Check]:
    """The projection is a group morphism, kills exactly the kernel coset,
    and sends each element to a representative of its own coset."""
    g = q.base
    k = q.ambient.members
    h = q.normal_sub.members
    km = k.as_array()
    proj = q.proj_table

    lhs = proj[g.mul[np.ix_(km, km)]]
    rhs = q.group.mul[np.ix_(proj[km], proj[km])]
    morph_ok = np.array_equal(lhs, rhs)
    witness = None
    if not morph_ok:
        i, j = np.argwhere(lhs != rhs)[0]
        witness = [int(km[i]), int(km[j])]

    unit_img = {int(proj[x]) for x in h}
    kernel_ok = unit_img == {q.group.unit}

    # embed(project(x)) must lie in xH, i.e. x^-1 * root in H
    root_pts = np.asarray([q.embed(int(proj[x])) for x in k])
    in_coset = h.mask()[g.mul[g.inv[km], root_pts]]
    coset_ok = bool(in_coset.all())

    return [
        Check("quotient_morphism", bool(morph_ok),
              int(np.count_nonzero(lhs == rhs)), int(lhs.size), witness),
        Check("quotient_kernel_to_unit", kernel_ok,
              sorted(unit_img), [q.group.unit]),
        Check("quotient_root_in_own_coset", coset_ok,
              int(np.count_nonzero(in_coset)), int(in_coset.size)),
    ]


def image_subgroup(q: QuotientGroup, l: ElemSet) -> ElemSet:
    """Image in K/H of a subgroup L sandwiched between H and K."""
    g = q.base
    if not is_subgroup(g, l):
        raise InvalidSubgroup("l must be a subgroup")
    if not q.normal_sub.members.issubset(l) or not l.issubset(q.ambient.members):
        raise InvalidSubgroup("l must sit between the kernel and the ambient group")
    bits = 0
    for x in l:
        bits |= 1 << int(q.proj_table[x])
    return ElemSet(q.group.carrier, bits)


def preimage_subgroup(q: QuotientGroup, l1: ElemSet) -> ElemSet:
    """Pullback in K of a subgroup of the quotient."""
    if not is_subgroup(q.group, l1):
        raise InvalidSubgroup("l1 must be a subgroup of the quotient")
    bits = 0
    for x in q.ambient.members:
        if int(q.proj_table[x]) in l1:
            bits |= 1 << x
    return ElemSet(q.base.carrier, bits)
