"""Validated finite groups given by Cayley tables, plus a standard catalog.

A Group is a carrier together with a unit element, an inverse table and a
multiplication table.  Construction goes through from_cayley_table, which
accepts exactly the tables satisfying the three defining axioms

    unit * x == x              (left unit)
    inv(x) * x == unit         (left inverse)
    (x * y) * z == x * (y * z) (associativity, checked exhaustively)

with the unit located as the unique two-sided identity and inverses derived
from the table.  All the usual right-sided laws are consequences; they are
re-verified, not assumed, by check_identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .carrier import Carrier, ElemSet, full_set
from .errors import (
    MalformedTable,
    NoIdentity,
    NoInverse,
    NonAssociative,
    UnsupportedSpec,
)
from .report import Check

TABLE_DTYPE = np.int32

# Permutation groups beyond this degree are out of scope (the carriers get
# big and nothing downstream needs them).
MAX_SYMMETRIC_DEGREE = 6


class Group:
    """A finite group on an enumerated carrier.  Immutable once built."""

    def __init__(self, carrier: Carrier, unit: int, inv: np.ndarray, mul: np.ndarray):
        self.carrier = carrier
        self.unit = int(unit)
        self.inv = inv
        self.mul = mul
        inv.setflags(write=False)
        mul.setflags(write=False)
        self._rows: list[list[int]] | None = None

    @property
    def order(self) -> int:
        return self.carrier.size

    def elements(self) -> range:
        return range(self.carrier.size)

    def full_set(self) -> ElemSet:
        return full_set(self.carrier)

    def op(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def invert(self, a: int) -> int:
        return int(self.inv[a])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def rows(self) -> list[list[int]]:
        """The multiplication table as plain lists; cached.  Handy for hot
        Python loops where numpy scalar indexing is too slow."""
        if self._rows is None:
            self._rows = self.mul.tolist()
        return self._rows

    def export_table(self) -> list[list[int]]:
        """The Cayley table, suitable to feed back into from_cayley_table."""
        return self.mul.tolist()

    def __repr__(self) -> str:
        return f"Group(order={self.order}, unit={self.unit})"


def from_cayley_table(n: int, table) -> Group:
    """Validate an n-by-n multiplication table and return the group.

    Raises MalformedTable for shape or range problems, NoIdentity if no
    element is a two-sided identity, NoInverse(x) if some x has no left
    inverse, and NonAssociative(x1, x2, x3) with the first violating triple
    in lexicographic order.
    """
    if n < 1:
        raise MalformedTable(f"carrier size must be at least 1, got {n}")
    t = np.asarray(table)
    if t.ndim != 2 or t.shape != (n, n):
        raise MalformedTable(f"expected shape ({n}, {n}), got {t.shape}")
    if not np.issubdtype(t.dtype, np.integer):
        raise MalformedTable(f"entries must be integers, got dtype {t.dtype}")
    if t.size and (t.min() < 0 or t.max() >= n):
        raise MalformedTable(f"entries must lie in [0, {n})")
    t = t.astype(TABLE_DTYPE)

    idx = np.arange(n, dtype=TABLE_DTYPE)
    unit = -1
    for e in range(n):
        if np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx):
            unit = e
            break
    if unit < 0:
        raise NoIdentity("no two-sided identity in the table")

    inv = np.empty(n, dtype=TABLE_DTYPE)
    for x in range(n):
        left = np.nonzero(t[:, x] == unit)[0]
        if left.size == 0:
            raise NoInverse(x)
        inv[x] = left[0]

    # Row-sliced associativity scan: for fixed x1, t[t[x1]] holds
    # (x1*x2)*x3 and t[x1][t] holds x1*(x2*x3).  Row-major argwhere keeps
    # the first reported triple lexicographic.
    for x1 in range(n):
        lhs = t[t[x1]]
        rhs = t[x1][t]
        if not np.array_equal(lhs, rhs):
            x2, x3 = np.argwhere(lhs != rhs)[0]
            raise NonAssociative(x1, int(x2), int(x3))

    return Group(Carrier(n), unit, inv, t)


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class GroupSpec:
    """Structural description of a catalog group."""

    kind: str
    n: int = 0
    parts: tuple["GroupSpec", ...] = ()
    path: str = ""

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls("cyclic", n=n)

    @classmethod
    def dihedral(cls, n: int) -> "GroupSpec":
        return cls("dihedral", n=n)

    @classmethod
    def symmetric(cls, n: int) -> "GroupSpec":
        return cls("symmetric", n=n)

    @classmethod
    def q8(cls) -> "GroupSpec":
        return cls("q8")

    @classmethod
    def product(cls, a: "GroupSpec", b: "GroupSpec") -> "GroupSpec":
        return cls("product", parts=(a, b))

    @classmethod
    def from_file(cls, path: str) -> "GroupSpec":
        return cls("file", path=path)

    def describe(self) -> str:
        if self.kind == "product":
            return f"product:({self.parts[0].describe()},{self.parts[1].describe()})"
        if self.kind == "file":
            return self.path
        if self.kind == "q8":
            return "q8"
        return f"{self.kind}:{self.n}"


def _cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n, dtype=TABLE_DTYPE)
    return (idx[:, None] + idx[None, :]) % n


def _dihedral_table(n: int) -> np.ndarray:
    # Order 2n.  Index i < n is the rotation r^i, index n+i is s*r^i, with
    # the relations r^n = 1, s^2 = 1, r*s = s*r^(-1).
    m = 2 * n
    t = np.empty((m, m), dtype=TABLE_DTYPE)
    for a in range(m):
        ref_a, i = divmod(a, n)
        for b in range(m):
            ref_b, j = divmod(b, n)
            if not ref_a and not ref_b:
                t[a, b] = (i + j) % n
            elif not ref_a and ref_b:
                t[a, b] = n + (j - i) % n
            elif ref_a and not ref_b:
                t[a, b] = n + (i + j) % n
            else:
                t[a, b] = (j - i) % n
    return t


def _symmetric_table(n: int) -> np.ndarray:
    # Permutations of 0..n-1 in lexicographic order; mul(p, q) applies q
    # first and then p, i.e. (p*q)(i) = p[q[i]].
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    t = np.empty((m, m), dtype=TABLE_DTYPE)
    for a, p in enumerate(perms):
        for b, q in enumerate(perms):
            t[a, b] = index[tuple(p[q[k]] for k in range(n))]
    return t


def symmetric_elements(n: int) -> list[tuple[int, ...]]:
    """The permutation underlying each carrier point of symmetric(n)."""
    return list(permutations(range(n)))


_Q8_SYMS = "1ijk"
_Q8_MUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _quaternion_table() -> np.ndarray:
    # Index 2*s + b encodes (+/-)(1, i, j, k)[s] with b = 1 for the negative.
    def decode(a):
        s, b = divmod(a, 2)
        return (-1 if b else 1), _Q8_SYMS[s]

    def encode(sign, sym):
        return 2 * _Q8_SYMS.index(sym) + (1 if sign < 0 else 0)

    t = np.empty((8, 8), dtype=TABLE_DTYPE)
    for a in range(8):
        sa, xa = decode(a)
        for b in range(8):
            sb, xb = decode(b)
            sp, xp = _Q8_MUL[(xa, xb)]
            t[a, b] = encode(sa * sb * sp, xp)
    return t


def _product_table(g1: Group, g2: Group) -> np.ndarray:
    # Pair (i1, i2) is enumerated as i1 * |G2| + i2.
    n2 = g2.order
    m1 = g1.mul.astype(np.int64)
    m2 = g2.mul.astype(np.int64)
    t = m1[:, None, :, None] * n2 + m2[None, :, None, :]
    return t.reshape(g1.order * n2, g1.order * n2).astype(TABLE_DTYPE)


def build(spec: GroupSpec) -> Group:
    """Construct a catalog group.  Every table goes back through
    from_cayley_table, so built groups are validated by construction."""
    if spec.kind == "cyclic":
        if spec.n < 1:
            raise UnsupportedSpec(f"cyclic order must be positive, got {spec.n}")
        return from_cayley_table(spec.n, _cyclic_table(spec.n))
    if spec.kind == "dihedral":
        if spec.n < 1:
            raise UnsupportedSpec(f"dihedral parameter must be positive, got {spec.n}")
        return from_cayley_table(2 * spec.n, _dihedral_table(spec.n))
    if spec.kind == "symmetric":
        if spec.n < 1:
            raise UnsupportedSpec(f"symmetric degree must be positive, got {spec.n}")
        if spec.n > MAX_SYMMETRIC_DEGREE:
            raise UnsupportedSpec(
                f"symmetric degree capped at {MAX_SYMMETRIC_DEGREE}, got {spec.n}"
            )
        t = _symmetric_table(spec.n)
        return from_cayley_table(len(t), t)
    if spec.kind == "q8":
        return from_cayley_table(8, _quaternion_table())
    if spec.kind == "product":
        a, b = spec.parts
        g1, g2 = build(a), build(b)
        return from_cayley_table(g1.order * g2.order, _product_table(g1, g2))
    if spec.kind == "file":
        from .cli import parse_cayley_file  # deferred: cli owns the parser

        n, table = parse_cayley_file(spec.path)
        return from_cayley_table(n, table)
    raise UnsupportedSpec(f"unknown group kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# derived one-sided laws


def check_identities(g: Group) -> list[Check]:
    """Re-verify the right-sided laws that follow from the three axioms.

    These are consequences, so on any validated group every check passes;
    running them is the point, since the construction never assumed them.
    """
    n = g.order
    t = g.mul
    inv = g.inv
    idx = np.arange(n, dtype=TABLE_DTYPE)
    checks: list[Check] = []

    def law(name: str, ok_grid) -> None:
        grid = np.atleast_1d(np.asarray(ok_grid))
        total = int(grid.size)
        good = int(np.count_nonzero(grid))
        witness = None
        if good != total:
            witness = [int(v) for v in np.argwhere(~grid)[0]]
        checks.append(Check(f"identity:{name}", good == total, good, total, witness))

    law("right_unit", t[idx, g.unit] == idx)
    law("unit_self_inverse", np.asarray(inv[g.unit] == g.unit))
    law("right_inverse", t[idx, inv] == g.unit)
    law("inverse_involution", inv[inv] == idx)
    # (x2*x1)^-1 == x1^-1 * x2^-1, laid out over (x2, x1)
    law("inverse_of_product", inv[t] == t[np.ix_(inv, inv)].T)
    law("left_cancellation", np.sort(t, axis=1) == idx[None, :])
    law("right_cancellation", np.sort(t, axis=0) == idx[:, None])
    # (b * a^-1) * a == b and (b * a) * a^-1 == b, laid out over (a, b)
    law("solve_right_inverse", t[t[:, inv].T, idx[:, None]] == idx[None, :])
    law("solve_right_multiply", t[t.T, inv[:, None]] == idx[None, :])
    return checks


def latin_square_check(g: Group) -> Check:
    """Every row and column of the table is a permutation of the carrier."""
    n = g.order
    idx = np.arange(n, dtype=TABLE_DTYPE)
    rows_ok = bool((np.sort(g.mul, axis=1) == idx[None, :]).all())
    cols_ok = bool((np.sort(g.mul, axis=0) == idx[:, None]).all())
    return Check("latin_square", rows_ok and cols_ok, int(rows_ok), int(cols_ok))
