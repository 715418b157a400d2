"""Constructive Cauchy and Sylow: existence with certificates, conjugacy,
and the counting congruences.

Cauchy's theorem is run as a computation.  For a prime p dividing |H|,
form the family of length-p tuples over H whose product is the unit; it
has |H|^(p-1) members, since the first component is determined by the rest.
The cyclic group of order p acts on it by index rotation, the fixed points
are exactly the constant tuples (h, ..., h) with h^p = 1, and the mod-p
fixed-point count forces a nonunit such h to exist.  The element returned
is the smallest-index nonunit diagonal value, a deterministic tie-break.

A Sylow subgroup is then grown order by order: given a p-subgroup of order
p^i below the maximum, translate its own cosets, read off the fixed-coset
count as the index of its normalizer, apply Cauchy inside the quotient of
that normalizer, and pull the resulting order-p subgroup back.  Every step
of the chain is re-verified; the whole run is logged in a certificate.

Conjugacy (every p-subgroup embeds in a conjugate of any Sylow subgroup)
falls out of translating the Sylow subgroup's cosets, and both counting
facts about the family of Sylow subgroups are re-derived from their own
actions rather than divided out of cardinalities.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product as iter_product

import numpy as np

from .action import (
    Action,
    conjugation_action_on_subsets,
    fixed_points,
    left_translation_action,
    make_action,
    mod_p_fixed_point_check,
    orbit,
    orbit_stabilizer_check,
)
from .carrier import Carrier, ElemSet
from .conjnormal import (
    conjugate_set,
    is_normal,
    normalizer,
    preimage_subgroup,
    quotient_group,
)
from .cyclic import cyclic, order, power
from .errors import (
    BadArg,
    BadBase,
    DoesNotDivide,
    InternalInvariant,
    InvalidSubgroup,
    NotPPower,
    NotPrime,
    PDoesNotDivide,
)
from .group import Group, GroupSpec, build
from .numutil import is_prime
from .report import Check
from .subgroup import is_subgroup, left_index, subgroup_set

TUPLE_CAP_ENV = "GRP_MAX_TUPLE_CARRIER"
DEFAULT_TUPLE_CAP = 10**6


def tuple_cap() -> int:
    """Size bound for materializing the product-one tuple family;
    overridable through the environment."""
    raw = os.environ.get(TUPLE_CAP_ENV)
    return int(raw) if raw else DEFAULT_TUPLE_CAP


def padic_val(p: int, u: int) -> int:
    """Largest e with p^e dividing u, by repeated division."""
    if p < 2:
        raise BadBase(f"base must be at least 2, got {p}")
    if u < 1:
        raise BadArg(f"argument must be at least 1, got {u}")
    e = 0
    while u % p == 0:
        u //= p
        e += 1
    return e


def _note(trace: list[str] | None, line: str) -> None:
    if trace is not None:
        trace.append(line)


@dataclass(eq=False)
class TupleCarrier:
    """Length-p tuples over a subgroup, restricted to product == unit.

    Conceptually the points of H^p are ranked in mixed radix over the
    subgroup's member list; only the product-one family is materialized
    (its size is |H|^(p-1)), in ascending rank order of the trailing p-1
    coordinates.
    """

    group: Group
    members: tuple[int, ...]
    length: int
    tuples: tuple[tuple[int, ...], ...]
    index: dict[tuple[int, ...], int]

    @property
    def base_card(self) -> int:
        return len(self.members)

    @property
    def power_size(self) -> int:
        return len(self.members) ** self.length

    def rank(self, t: tuple[int, ...]) -> int:
        """Mixed-radix rank of a tuple within the full power H^p."""
        pos = {m: i for i, m in enumerate(self.members)}
        r = 0
        for c in t:
            r = r * len(self.members) + pos[c]
        return r

    def in_power(self, t: tuple[int, ...]) -> bool:
        memb = set(self.members)
        return len(t) == self.length and all(c in memb for c in t)

    def in_product_one(self, t: tuple[int, ...]) -> bool:
        if not self.in_power(t):
            return False
        rows = self.group.rows()
        x = self.group.unit
        for c in t:
            x = rows[x][c]
        return x == self.group.unit


def product_one_tuples(g: Group, h: ElemSet, p: int) -> TupleCarrier:
    """Materialize the product-one tuple family over a subgroup.  Each of
    the |H|^(p-1) choices of trailing coordinates determines the head."""
    members = h.indices()
    rows = g.rows()
    inv = g.inv
    tuples: list[tuple[int, ...]] = []
    for combo in iter_product(members, repeat=p - 1):
        x = g.unit
        for c in combo:
            x = rows[x][c]
        tuples.append((int(inv[x]), *combo))
    index = {t: i for i, t in enumerate(tuples)}
    return TupleCarrier(g, members, p, tuple(tuples), index)


def rotation_action(tc: TupleCarrier) -> Action:
    """The cyclic group of order p acting on the tuple family by index
    rotation.  Rotating preserves the product-one condition."""
    p = tc.length
    zp = build(GroupSpec.cyclic(p))
    table = np.empty((p, len(tc.tuples)), dtype=np.int64)
    for shift in range(p):
        for i, t in enumerate(tc.tuples):
            rotated = tuple(t[(j + shift) % p] for j in range(p))
            j = tc.index.get(rotated)
            if j is None:
                raise InternalInvariant("rotation left the product-one family")
            table[shift, i] = j
    return make_action(zp, zp.full_set(), Carrier(len(tc.tuples)), table)


def cauchy_element(g: Group, h: ElemSet, p: int, trace: list[str] | None = None) -> int:
    """An element of order exactly p inside a subgroup whose order p
    divides.  Uses the tuple-family construction when it fits under the
    size cap and a direct ascending order scan otherwise; both choose the
    smallest-index qualifying element, so the answer does not depend on
    the route taken."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    subgroup_set(g, h)
    if h.card % p != 0:
        raise DoesNotDivide(f"{p} does not divide the subgroup order {h.card}")

    family_size = h.card ** (p - 1)
    cap = tuple_cap()
    if family_size <= cap:
        tc = product_one_tuples(g, h, p)
        act = rotation_action(tc)
        congruence = mod_p_fixed_point_check(act, p)
        s0 = fixed_points(act)
        if not congruence.ok:
            raise InternalInvariant("fixed-point congruence failed on the tuple family")
        if s0.card % p != 0:
            raise InternalInvariant("fixed tuple count is not divisible by p")
        diagonal = []
        for i in s0:
            t = tc.tuples[i]
            if any(c != t[0] for c in t):
                raise InternalInvariant("fixed tuple is not constant")
            if power(g, t[0], p) != g.unit:
                raise InternalInvariant("fixed tuple diagonal has wrong order")
            diagonal.append(t[0])
        candidates = sorted(x for x in diagonal if x != g.unit)
        if not candidates:
            raise InternalInvariant("no nonunit fixed tuple despite the congruence")
        a = candidates[0]
        _note(trace, f"cauchy p={p}: {family_size} product-one tuples, "
                     f"{s0.card} fixed, nonunit diagonal min {a}")
    else:
        a = -1
        for x in h:
            if x != g.unit and power(g, x, p) == g.unit:
                a = x
                break
        if a < 0:
            raise InternalInvariant("no element of order p found by direct scan")
        _note(trace, f"cauchy p={p}: tuple family size {family_size} exceeds cap "
                     f"{cap}, fell back to direct element-order scan, min {a}")

    if order(g, a) != p:
        raise InternalInvariant(f"candidate {a} does not have order {p}")
    return a


def is_sylow(g: Group, k: ElemSet, p: int, h: ElemSet) -> bool:
    """H is a subgroup of K of order exactly p^(val_p |K|)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not is_subgroup(g, k):
        raise InvalidSubgroup("k must be a subgroup")
    n = padic_val(p, k.card)
    return is_subgroup(g, h) and h.issubset(k) and h.card == p**n


@dataclass(frozen=True)
class SylowCertificate:
    """Proof-carrying output of the Sylow existence run: the subgroup, the
    full tower of intermediate p-subgroups, and a human-readable log."""

    subgroup: ElemSet
    p: int
    n: int
    chain: tuple[ElemSet, ...]
    trace: tuple[str, ...]

    def to_certificate_dict(self) -> dict:
        return {
            "kind": "sylow",
            "p": self.p,
            "n": self.n,
            "elements": [int(i) for i in self.subgroup.indices()],
            "trace": list(self.trace),
        }


def extend_p_subgroup(
    g: Group, k: ElemSet, p: int, hi: ElemSet, i: int, trace: list[str] | None = None
) -> ElemSet:
    """Grow a p-subgroup of order p^i (i below the maximum) to one of
    order p^(i+1) containing it as a normal subgroup.

    The fixed cosets of hi translating its own cosets in K are the cosets
    inside the normalizer N; their count is the index [N : hi], which the
    congruence forces to be divisible by p.  Cauchy inside N/hi then yields
    an order-p subgroup whose pullback is the extension.
    """
    n = padic_val(p, k.card)
    if not 1 <= i < n:
        raise ValueError(f"step index {i} outside [1, {n})")
    if not is_subgroup(g, hi) or not hi.issubset(k):
        raise InvalidSubgroup("hi must be a subgroup of k")
    if hi.card != p**i:
        raise InvalidSubgroup(f"expected order {p**i}, got {hi.card}")

    act = left_translation_action(g, hi, hi, k)
    s0 = fixed_points(act)
    nrm = normalizer(g, hi, k)
    index_in_normalizer = left_index(g, hi, nrm)
    if s0.card != index_in_normalizer:
        raise InternalInvariant("fixed cosets do not match the normalizer index")
    if not mod_p_fixed_point_check(act, p).ok:
        raise InternalInvariant("fixed-point congruence failed on coset translation")
    if index_in_normalizer % p != 0:
        raise InternalInvariant("p does not divide the normalizer index")

    quot = quotient_group(g, hi, nrm)
    aq = cauchy_element(quot.group, quot.group.full_set(), p)
    lifted = preimage_subgroup(quot, cyclic(quot.group, aq))

    if lifted.card != p ** (i + 1):
        raise InternalInvariant("extension has the wrong order")
    if not hi.issubset(lifted) or not lifted.issubset(k):
        raise InternalInvariant("extension broke the containment chain")
    if not is_subgroup(g, lifted):
        raise InternalInvariant("extension is not a subgroup")
    if not is_normal(g, hi, lifted):
        raise InternalInvariant("previous stage is not normal in the extension")

    _note(trace, f"step {i}: normalizer order {nrm.card}, quotient order "
                 f"{quot.group.order}, extended to order {lifted.card}")
    return lifted


def sylow_subgroup(g: Group, k: ElemSet, p: int) -> SylowCertificate:
    """Construct a Sylow p-subgroup of K with a step-by-step certificate."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    subgroup_set(g, k)
    n = padic_val(p, k.card)
    if n == 0:
        raise PDoesNotDivide(f"{p} does not divide the group order {k.card}")

    trace: list[str] = []
    a = cauchy_element(g, k, p, trace)
    h = cyclic(g, a)
    _note(trace, f"base subgroup: cyclic({a}) of order {h.card}")
    chain = [h]
    for i in range(1, n):
        h = extend_p_subgroup(g, k, p, h, i, trace)
        chain.append(h)

    cert = SylowCertificate(subgroup=h, p=p, n=n, chain=tuple(chain), trace=tuple(trace))
    if not is_sylow(g, k, p, h):
        raise InternalInvariant("constructed subgroup fails the Sylow predicate")
    return cert


def sylow_conjugator(g: Group, k: ElemSet, p: int, h: ElemSet, l: ElemSet) -> int:
    """For a p-subgroup H and a Sylow subgroup L of K: an x in K with
    H contained in x L x^-1 (equality when H is Sylow too).

    H translates the cosets of L; the coset count is coprime to p, so some
    coset is fixed, and its minimum-index root is the conjugator.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    subgroup_set(g, k)
    if not is_subgroup(g, h) or not h.issubset(k):
        raise InvalidSubgroup("h must be a subgroup of k")
    rest = h.card
    while rest % p == 0:
        rest //= p
    if rest != 1:
        raise NotPPower(f"h has order {h.card}, not a power of {p}")
    if not is_sylow(g, k, p, l):
        raise InvalidSubgroup("l must be a Sylow subgroup of k")

    act = left_translation_action(g, h, l, k)
    if act.points.size % p == 0:
        raise InternalInvariant("coset count of a Sylow subgroup divisible by p")
    s0 = fixed_points(act)
    if not mod_p_fixed_point_check(act, p).ok:
        raise InternalInvariant("fixed-point congruence failed on Sylow translation")
    if not s0:
        raise InternalInvariant("no fixed coset despite the congruence")
    x = min(act.point_labels[i] for i in s0)
    if not h.issubset(conjugate_set(g, l, x)):
        raise InternalInvariant("fixed-coset root does not conjugate over h")
    return int(x)


def _conjugacy_family(g: Group, k: ElemSet, base: ElemSet) -> list[ElemSet]:
    seen: dict[int, ElemSet] = {}
    for x in k:
        c = conjugate_set(g, base, x)
        seen.setdefault(c.bits, c)
    return sorted(seen.values(), key=lambda s: s.indices())


def sylow_family(g: Group, k: ElemSet, p: int, cert: SylowCertificate | None = None) -> list[ElemSet]:
    """All Sylow p-subgroups of K, as the conjugation orbit of the
    constructed one, deduplicated by indicator and deterministically
    ordered by membership list."""
    if cert is None:
        cert = sylow_subgroup(g, k, p)
    return _conjugacy_family(g, k, cert.subgroup)


def sylow_count_divides_check(
    g: Group, k: ElemSet, p: int, cert: SylowCertificate | None = None
) -> list[Check]:
    """The number of Sylow p-subgroups divides |K|, re-derived from the
    conjugation action: the family is a single orbit whose size equals a
    stabilizer index."""
    if cert is None:
        cert = sylow_subgroup(g, k, p)
    family = sylow_family(g, k, p, cert)
    count = len(family)
    act = conjugation_action_on_subsets(g, subgroup_set(g, k), family)
    base_index = next(i for i, s in enumerate(family) if s == cert.subgroup)
    orb = orbit(act, base_index)
    checks = [
        Check("sylow_family_single_orbit", orb.card == count, orb.card, count),
        *orbit_stabilizer_check(act, base_index),
        Check("sylow_count_divides", k.card % count == 0, k.card % count, 0,
              {"count": count, "group_order": k.card}),
    ]
    return checks


def sylow_count_mod_p_check(
    g: Group, k: ElemSet, p: int, cert: SylowCertificate | None = None
) -> list[Check]:
    """The number of Sylow p-subgroups is congruent to 1 mod p, re-derived
    by letting the constructed Sylow subgroup conjugate the family: it
    fixes itself and nothing else, and the congruence transfers the count."""
    if cert is None:
        cert = sylow_subgroup(g, k, p)
    family = sylow_family(g, k, p, cert)
    count = len(family)
    base_index = next(i for i, s in enumerate(family) if s == cert.subgroup)

    act = conjugation_action_on_subsets(g, subgroup_set(g, cert.subgroup), family)
    s0 = fixed_points(act)
    congruence = mod_p_fixed_point_check(act, p)

    # Every fixed family member shares a normalizer in which both it and
    # the constructed subgroup are Sylow; that is what collapses the fixed
    # set to the subgroup itself.
    nrm_ok = True
    for i in s0:
        nrm = normalizer(g, family[i], k)
        if not (is_sylow(g, nrm, p, cert.subgroup) and is_sylow(g, nrm, p, family[i])):
            nrm_ok = False
    return [
        Check("sylow_fixed_only_self", s0.indices() == (base_index,),
              list(s0.indices()), [base_index]),
        Check("sylow_in_fixed_normalizers", nrm_ok, int(nrm_ok), 1),
        congruence,
        Check("sylow_count_mod_p", count % p == 1, count % p, 1, {"count": count}),
    ]
