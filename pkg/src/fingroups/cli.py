"""Command line interface.

Group references are either catalog grammar

    cyclic:N | dihedral:N | symmetric:N | q8 | product:(REF,REF)

with shorthands zN, dN, sN, or a path to a Cayley-table file.  The file
format: first significant line holds the carrier size n, the next n lines
hold n whitespace-separated indices each (row i, column j is i*j), with
'#' starting a comment and blank lines ignored.

Exit codes: 0 when every check passes, 1 when a mathematical cross-check
fails (that is a bug trap, not a user error), 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time

from .action import (
    conjugation_action,
    conjugation_action_on_subsets,
    left_translation_action,
    orbit,
    orbit_stabilizer_check,
)
from .carrier import ElemSet
from .conjnormal import conjugate_set, quotient_group, quotient_morphism_check
from .cyclic import order
from .errors import GroupTheoryError, InternalInvariant, ParseError
from .group import Group, GroupSpec, build, from_cayley_table
from .report import Check, Report
from .subgroup import closure
from .suite import catalog_specs, verify_group
from . import oracle as oracle_mod
from .sylow import (
    cauchy_element,
    sylow_count_divides_check,
    sylow_count_mod_p_check,
    sylow_family,
    sylow_subgroup,
)


# ---------------------------------------------------------------------------
# input parsing


def parse_cayley_file(path: str) -> tuple[int, list[list[int]]]:
    """Read a Cayley-table file; returns (n, rows).  Raises ParseError with
    1-based line and column on the first offending token."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()

    lines: list[tuple[int, list[tuple[int, str]]]] = []
    last_line = 1
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if toks:
            lines.append((lineno, toks))

    def want_int(lineno: int, col: int, tok: str) -> int:
        try:
            return int(tok, 10)
        except ValueError:
            raise ParseError(lineno, col, f"expected an integer, got {tok!r}") from None

    if not lines:
        raise ParseError(last_line, 1, "no table found")

    header_line, header_toks = lines[0]
    if len(header_toks) != 1:
        col, tok = header_toks[1]
        raise ParseError(header_line, col, f"size line must hold one integer, got {tok!r}")
    n = want_int(header_line, header_toks[0][0], header_toks[0][1])
    if n < 1:
        raise ParseError(header_line, header_toks[0][0], f"size must be positive, got {n}")

    body_lines = lines[1:]
    if len(body_lines) < n:
        raise ParseError(last_line, 1, f"expected {n} table rows, found {len(body_lines)}")
    if len(body_lines) > n:
        lineno, toks = body_lines[n]
        raise ParseError(lineno, toks[0][0], "unexpected content after the table")

    rows: list[list[int]] = []
    for lineno, toks in body_lines:
        if len(toks) != n:
            col = toks[min(n, len(toks) - 1)][0]
            raise ParseError(lineno, col, f"row has {len(toks)} entries, expected {n}")
        row = []
        for col, tok in toks:
            v = want_int(lineno, col, tok)
            if not 0 <= v < n:
                raise ParseError(lineno, col, f"entry {v} out of range [0, {n})")
            row.append(v)
        rows.append(row)
    return n, rows


_SHORTHAND = {"z": "cyclic", "d": "dihedral", "s": "symmetric"}


def parse_group_ref(ref: str) -> GroupSpec:
    """Parse catalog grammar; raises ValueError when the text is not
    grammar at all (the caller may then try it as a path)."""
    ref = ref.strip()
    if ref == "q8":
        return GroupSpec.q8()
    m = re.fullmatch(r"([zds])(\d+)", ref)
    if m:
        return GroupSpec(_SHORTHAND[m.group(1)], n=int(m.group(2)))
    m = re.fullmatch(r"(cyclic|dihedral|symmetric):(\d+)", ref)
    if m:
        return GroupSpec(m.group(1), n=int(m.group(2)))
    m = re.fullmatch(r"product:\((.*)\)", ref)
    if m:
        inner = m.group(1)
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return GroupSpec.product(
                    parse_group_ref(inner[:i]), parse_group_ref(inner[i + 1:])
                )
        raise ValueError(f"product needs two comma-separated refs: {ref!r}")
    raise ValueError(f"not catalog grammar: {ref!r}")


def resolve_group(ref: str) -> tuple[str, Group]:
    """Catalog grammar first, then the filesystem."""
    try:
        spec = parse_group_ref(ref)
        return spec.describe(), build(spec)
    except ValueError:
        pass
    if os.path.exists(ref):
        n, rows = parse_cayley_file(ref)
        return ref, from_cayley_table(n, rows)
    raise GroupTheoryError(
        f"{ref!r} is neither catalog grammar (try 'fingroups catalog') nor a file"
    )


def _parse_points(g: Group, csv: str) -> list[int]:
    try:
        pts = [int(tok) for tok in csv.split(",") if tok.strip() != ""]
    except ValueError:
        raise GroupTheoryError(f"generator list {csv!r} is not comma-separated integers")
    if not pts:
        raise GroupTheoryError("generator list is empty")
    for x in pts:
        g.carrier.check_point(x)
    return pts


# ---------------------------------------------------------------------------
# commands


def _emit(rep: Report, as_json: bool) -> int:
    if as_json:
        print(rep.to_json())
    else:
        print(rep.render_text())
    return 0 if rep.ok else 1


def cmd_verify(args) -> int:
    label, g = resolve_group(args.group)
    rep = verify_group(g, label)
    return _emit(rep, args.json)


def cmd_sylow(args) -> int:
    label, g = resolve_group(args.group)
    full = g.full_set()
    p = args.p
    rep = Report(group=label, order=g.order)

    t0 = time.perf_counter()
    cert = sylow_subgroup(g, full, p)
    c = Check(f"sylow_order[p={p}]", cert.subgroup.card == p**cert.n,
              cert.subgroup.card, p**cert.n)
    c.ms = (time.perf_counter() - t0) * 1000.0
    rep.checks.append(c)
    rep.certificates.append(cert.to_certificate_dict())

    family = sylow_family(g, full, p, cert)
    for c in sylow_count_divides_check(g, full, p, cert):
        rep.checks.append(c)
    for c in sylow_count_mod_p_check(g, full, p, cert):
        rep.checks.append(c)

    if args.oracle:
        t0 = time.perf_counter()
        brute = oracle_mod.sylow_family_bruteforce(g, full, p)
        agree = [s.indices() for s in family] == [s.indices() for s in brute]
        diff = None
        if not agree:
            ours = {s.bits for s in family}
            theirs = {s.bits for s in brute}
            diff = {
                "only_constructed": [list(ElemSet(g.carrier, b).indices())
                                     for b in sorted(ours - theirs)],
                "only_bruteforce": [list(ElemSet(g.carrier, b).indices())
                                    for b in sorted(theirs - ours)],
            }
        c = Check("oracle_family_agreement", agree, len(family), len(brute), diff)
        c.ms = (time.perf_counter() - t0) * 1000.0
        rep.checks.append(c)

    if args.json:
        print(rep.to_json())
    else:
        print(rep.render_text())
        count = len(family)
        print(f"  {count} Sylow {p}-subgroup(s); {count} ≡ {count % p} (mod {p}); "
              f"{count} | {g.order}")
    return 0 if rep.ok else 1


def cmd_cauchy(args) -> int:
    label, g = resolve_group(args.group)
    p = args.p
    rep = Report(group=label, order=g.order)
    trace: list[str] = []
    t0 = time.perf_counter()
    a = cauchy_element(g, g.full_set(), p, trace)
    got = order(g, a)
    c = Check(f"cauchy_order[p={p}]", got == p, got, p, {"element": int(a)})
    c.ms = (time.perf_counter() - t0) * 1000.0
    rep.checks.append(c)
    rep.certificates.append(
        {"kind": "cauchy", "p": p, "n": 1, "elements": [int(a)], "trace": list(trace)}
    )
    if args.json:
        print(rep.to_json())
    else:
        print(rep.render_text())
        print(f"  element {a} has order {p}")
    return 0 if rep.ok else 1


def cmd_orbits(args) -> int:
    label, g = resolve_group(args.group)
    acting = closure(g, _parse_points(g, args.acting_gens)) if args.acting_gens \
        else g.full_set()

    if args.action == "conjugation":
        act = conjugation_action(g, acting)
    elif args.action == "translation":
        if not args.gens:
            raise GroupTheoryError("translation orbits need --gens for the coset subgroup")
        sub = closure(g, _parse_points(g, args.gens))
        act = left_translation_action(g, acting, sub, g.full_set())
    else:  # subsets
        if not args.gens:
            raise GroupTheoryError("subset orbits need --gens for the base subgroup")
        base = closure(g, _parse_points(g, args.gens))
        family = sorted({conjugate_set(g, base, x).bits for x in g.elements()})
        family_sets = [ElemSet(g.carrier, b) for b in family]
        family_sets.sort(key=lambda s: s.indices())
        act = conjugation_action_on_subsets(g, acting, family_sets)

    rep = Report(group=label, order=g.order)
    seen: set[int] = set()
    orbits: list[list[int]] = []
    results = []
    t0 = time.perf_counter()
    for a in range(act.points.size):
        if a not in seen:
            orb = orbit(act, a)
            seen.update(orb)
            orbits.append(list(orb.indices()))
        checks = orbit_stabilizer_check(act, a)
        results.append((all(c.ok for c in checks), {"point": a}))
    good = sum(1 for ok, _ in results if ok)
    c = Check("orbit_stabilizer", good == len(results), good, len(results),
              {"orbits": orbits})
    c.ms = (time.perf_counter() - t0) * 1000.0
    rep.checks.append(c)

    if args.json:
        print(rep.to_json())
    else:
        print(rep.render_text())
        for i, orb in enumerate(orbits):
            if act.point_labels is not None:
                names = [repr(act.point_labels[z]) for z in orb]
                print(f"  orbit {i}: points {orb} = {names}")
            else:
                print(f"  orbit {i}: {orb}")
    return 0 if rep.ok else 1


def cmd_quotient(args) -> int:
    label, g = resolve_group(args.group)
    h = closure(g, _parse_points(g, args.gens))
    quot = quotient_group(g, h, g.full_set())
    rep = Report(group=label, order=g.order)
    table = quot.group.export_table()
    rep.checks.append(
        Check("quotient_order", quot.group.order * h.card == g.order,
              quot.group.order * h.card, g.order,
              {"table": table, "roots": list(quot.roots)})
    )
    for c in quotient_morphism_check(quot):
        rep.checks.append(c)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.render_text())
        print(f"  quotient order {quot.group.order}, coset roots {list(quot.roots)}")
        for row in table:
            print("  " + " ".join(f"{v:3d}" for v in row))
    return 0 if rep.ok else 1


def cmd_catalog(args) -> int:
    entries = []
    for spec in catalog_specs():
        entries.append({"ref": spec.describe(), "order": build(spec).order})
    if args.json:
        print(json.dumps(entries, sort_keys=True, separators=(",", ": ")))
    else:
        print("group reference grammar: cyclic:N dihedral:N symmetric:N q8 "
              "product:(REF,REF), shorthands zN dN sN, or a Cayley table file")
        for e in entries:
            print(f"  {e['ref']}  (order {e['order']})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fingroups",
        description="finite group theorem checks with certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("group", help="group reference (see 'fingroups catalog')")
        sp.add_argument("--json", action="store_true", help="emit a JSON report")

    sp = sub.add_parser("verify", help="run the full theorem suite")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sylow", help="construct a Sylow subgroup and count the family")
    common(sp)
    sp.add_argument("-p", type=int, required=True, help="prime")
    sp.add_argument("--oracle", action="store_true",
                    help="cross-check the family against brute-force enumeration")
    sp.set_defaults(func=cmd_sylow)

    sp = sub.add_parser("cauchy", help="find an element of prime order")
    common(sp)
    sp.add_argument("-p", type=int, required=True, help="prime")
    sp.set_defaults(func=cmd_cauchy)

    sp = sub.add_parser("orbits", help="print an action's orbit partition")
    common(sp)
    sp.add_argument("--action", choices=["conjugation", "translation", "subsets"],
                    default="conjugation")
    sp.add_argument("--gens", help="comma-separated generators of the coset or base subgroup")
    sp.add_argument("--acting-gens", dest="acting_gens",
                    help="comma-separated generators of the acting subgroup (default: all)")
    sp.set_defaults(func=cmd_orbits)

    sp = sub.add_parser("quotient", help="build and print a quotient group")
    common(sp)
    sp.add_argument("--gens", required=True,
                    help="comma-separated generators of the normal subgroup")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("catalog", help="list built-in group references")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariant as e:
        print(f"theorem check failed: {e}", file=sys.stderr)
        return 1
    except GroupTheoryError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
