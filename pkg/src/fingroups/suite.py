"""The standard group catalog and the theorem-suite runner.

verify_group re-derives, for one group, everything this package claims to
know: the defining axioms and their one-sided consequences, Lagrange over
a generated subgroup sample, orbit counting for conjugation and coset
translation, the fixed-point congruence where a p-power acts, Cauchy and
the full Sylow battery for every prime divisor, and the totient theorems.
Checks are aggregated per theorem (counts of passing instances) so reports
stay readable; the per-instance loops live in the test suite.
"""

from __future__ import annotations

import time

from .action import (
    conjugation_action,
    left_translation_action,
    mod_p_fixed_point_check,
    orbit_stabilizer_check,
)
from .cyclic import order, phi_theorem_checks
from .errors import GroupTheoryError
from .group import (
    Group,
    GroupSpec,
    build,
    check_identities,
    from_cayley_table,
    latin_square_check,
)
from .numutil import prime_divisors
from .report import Check, Report
from .subgroup import lagrange_check, subgroup_sample
from .sylow import (
    cauchy_element,
    sylow_count_divides_check,
    sylow_count_mod_p_check,
    sylow_subgroup,
)


def catalog_specs() -> list[GroupSpec]:
    """The built-in groups every suite run covers: all small cyclics,
    dihedrals and symmetric groups, the quaternions, and a spread of
    direct products up to order 48."""
    specs: list[GroupSpec] = []
    specs += [GroupSpec.cyclic(n) for n in range(1, 25)]
    specs += [GroupSpec.dihedral(n) for n in range(1, 13)]
    specs += [GroupSpec.symmetric(n) for n in range(1, 6)]
    specs.append(GroupSpec.q8())
    c = GroupSpec.cyclic
    specs += [
        GroupSpec.product(c(2), c(2)),
        GroupSpec.product(c(2), c(3)),
        GroupSpec.product(c(2), GroupSpec.product(c(2), c(2))),
        GroupSpec.product(c(3), c(3)),
        GroupSpec.product(c(2), GroupSpec.symmetric(3)),
        GroupSpec.product(GroupSpec.q8(), c(2)),
        GroupSpec.product(c(4), c(6)),
        GroupSpec.product(GroupSpec.dihedral(4), c(3)),
        GroupSpec.product(c(5), c(5)),
        GroupSpec.product(GroupSpec.symmetric(3), GroupSpec.symmetric(3)),
        GroupSpec.product(GroupSpec.symmetric(4), c(2)),
    ]
    return specs


def catalog() -> list[tuple[str, Group]]:
    return [(spec.describe(), build(spec)) for spec in catalog_specs()]


def _aggregate(name: str, results: list[tuple[bool, object]]) -> Check:
    good = sum(1 for ok, _ in results if ok)
    witness = next((w for ok, w in results if not ok), None)
    return Check(name, good == len(results), good, len(results), witness)


def _is_prime_power(n: int) -> int | None:
    """The prime p with n a power of p, if there is one (n > 1)."""
    ps = prime_divisors(n)
    return ps[0] if len(ps) == 1 else None


def verify_group(g: Group, label: str, phi_bound: int | None = None) -> Report:
    rep = Report(group=label, order=g.order)
    full = g.full_set()

    def add(check: Check, t0: float) -> None:
        check.ms = (time.perf_counter() - t0) * 1000.0
        rep.checks.append(check)

    t0 = time.perf_counter()
    for c in check_identities(g):
        add(c, t0)
        t0 = time.perf_counter()
    add(latin_square_check(g), t0)

    t0 = time.perf_counter()
    try:
        from_cayley_table(g.order, g.export_table())
        add(Check("table_roundtrip", True, 1, 1), t0)
    except GroupTheoryError as e:
        add(Check("table_roundtrip", False, 0, 1, str(e)), t0)

    t0 = time.perf_counter()
    sample = subgroup_sample(g)
    lagrange_results = []
    for h in sample:
        checks = lagrange_check(g, h, full)
        lagrange_results.append(
            (all(c.ok for c in checks), {"subgroup": list(h.indices())})
        )
    add(_aggregate("lagrange", lagrange_results), t0)

    t0 = time.perf_counter()
    conj = conjugation_action(g, full)
    os_results = []
    for a in range(conj.points.size):
        checks = orbit_stabilizer_check(conj, a)
        os_results.append((all(c.ok for c in checks), {"point": a}))
    add(_aggregate("orbit_stabilizer:conjugation", os_results), t0)
    p_whole = _is_prime_power(g.order)
    if p_whole is not None and g.order > 1:
        t0 = time.perf_counter()
        c = mod_p_fixed_point_check(conj, p_whole)
        c.name = "mod_p_fixed_points:conjugation"
        add(c, t0)

    t0 = time.perf_counter()
    trans_results = []
    congruence_results = []
    for h in sample:
        act = left_translation_action(g, h, h, full)
        for a in range(act.points.size):
            checks = orbit_stabilizer_check(act, a)
            trans_results.append(
                (all(c.ok for c in checks),
                 {"subgroup": list(h.indices()), "point": a})
            )
        p = _is_prime_power(h.card)
        if p is not None:
            c = mod_p_fixed_point_check(act, p)
            congruence_results.append((c.ok, {"subgroup": list(h.indices())}))
    add(_aggregate("orbit_stabilizer:translation", trans_results), t0)
    t0 = time.perf_counter()
    add(_aggregate("mod_p_fixed_points:translation", congruence_results), t0)

    for p in prime_divisors(g.order):
        t0 = time.perf_counter()
        trace: list[str] = []
        a = cauchy_element(g, full, p, trace)
        add(Check(f"cauchy_order[p={p}]", order(g, a) == p, order(g, a), p), t0)
        rep.certificates.append(
            {"kind": "cauchy", "p": p, "n": 1, "elements": [int(a)],
             "trace": list(trace)}
        )

        t0 = time.perf_counter()
        cert = sylow_subgroup(g, full, p)
        add(Check(f"sylow_order[p={p}]",
                  cert.subgroup.card == p**cert.n,
                  cert.subgroup.card, p**cert.n), t0)
        rep.certificates.append(cert.to_certificate_dict())

        t0 = time.perf_counter()
        for c in sylow_count_divides_check(g, full, p, cert):
            c.name = f"{c.name}[p={p}]"
            add(c, t0)
            t0 = time.perf_counter()
        for c in sylow_count_mod_p_check(g, full, p, cert):
            c.name = f"{c.name}[p={p}]"
            add(c, t0)
            t0 = time.perf_counter()

    t0 = time.perf_counter()
    for c in phi_theorem_checks(phi_bound or max(2, g.order)):
        add(c, t0)
        t0 = time.perf_counter()

    return rep
