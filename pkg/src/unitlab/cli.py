"""Command-line front end.

Exit codes: 0 success, 2 invalid input or capacity error, 3 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .checks import (
    DEFAULT_GRID_CAP,
    Check,
    all_passed,
    char2_checks,
    closed_form_checks,
    invariant_suites,
    oracle_grid,
    residue_checks,
)
from .decomposition import CyclicDecomposition
from .errors import CapacityError, InconsistencyError, InvalidInput
from .field import construct_field, prime_power_parts
from .group import AbelianGroup, parse_group_spec
from .mixed import unit_group
from .oracle import abelian_invariants_from_units, enumerate_units, enumeration_cap
from .reference import THEOREMS, witnesses
from .semisimple import unit_group_semisimple, wedderburn_degrees

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _field_from_args(args):
    if args.q is not None:
        if args.p is not None or args.n is not None:
            raise InvalidInput("--q is mutually exclusive with --p/--n")
        p, n = prime_power_parts(args.q)
    else:
        if args.p is None:
            raise InvalidInput("give --p (and optionally --n) or --q")
        p, n = args.p, args.n or 1
    return construct_field(p, n)


def _payload(dec: CyclicDecomposition, G: AbelianGroup, p=None, n=None) -> dict:
    data = dec.to_json(G.divisors, p, n)
    if dec.q is not None:
        ev = dec.evaluate()
        data["evaluated"] = ev.to_json()["factors"]
        data["order"] = dec.total_order()
    return data


def _print_decomposition(dec: CyclicDecomposition, G: AbelianGroup, label: str) -> None:
    print(f"G = {G}  ({label})")
    print(f"U(FG) = {dec.symbolic()}")
    if dec.q is not None:
        print(f"at q={dec.q}: {dec.substitute().symbolic()}")
        print(f"prime-power form: {dec.evaluate().symbolic()}")
        print(f"|U(FG)| = {dec.total_order()}")


def cmd_compute(args) -> int:
    G = parse_group_spec(args.group)
    F = _field_from_args(args)
    dec = unit_group(F, G)
    if args.json:
        print(json.dumps(_payload(dec, G, F.p, F.n)))
    else:
        _print_decomposition(dec, G, f"F = {F!r}")
    return EXIT_OK


def _parse_q_mod(text: str, G: AbelianGroup) -> int:
    try:
        r, m = (int(x) for x in text.split(":"))
    except ValueError as exc:
        raise InvalidInput(f"--q-mod expects r:m, got {text!r}") from exc
    if m < 1 or m % G.exponent:
        raise InvalidInput(f"modulus {m} must be a multiple of exp(G) = {G.exponent}")
    if math.gcd(r, m) != 1:
        raise InvalidInput(f"residue {r} is not coprime to {m}")
    return r % m


def cmd_symbolic(args) -> int:
    G = parse_group_spec(args.group)
    r = _parse_q_mod(args.q_mod, G)
    dec = unit_group_semisimple(G, r)
    if args.json:
        data = _payload(dec, G)
        data["q_mod"] = args.q_mod
        print(json.dumps(data))
    else:
        print(f"G = {G}  (q = {args.q_mod})")
        print(f"FG = {wedderburn_degrees(G, r)}")
        print(f"U(FG) = {dec.symbolic()}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = parse_group_spec(args.group)
    F = _field_from_args(args)
    units = enumerate_units(F, G, enumeration_cap(args.cap), method=args.method)
    dec = abelian_invariants_from_units(units)
    if args.json:
        print(json.dumps(_payload(dec, G, F.p, F.n)))
    else:
        _print_decomposition(dec, G, f"F = {F!r}, brute force")
    return EXIT_OK


def _report(title: str, checks: list[Check], as_json: bool, out: list) -> None:
    if as_json:
        out.append({"suite": title, "checks": [c.__dict__ for c in checks]})
        return
    print(f"== {title}")
    for c in checks:
        print("  " + c.line())


def cmd_paper_tables(args) -> int:
    suites = [
        ("characteristic 2, n = 1, 2, 3", char2_checks()),
        ("odd characteristic residue classes", residue_checks(witness_count=2)),
    ]
    out: list = []
    for title, checks in suites:
        _report(title, checks, args.json, out)
    if not args.json:
        print("== published case lists")
        for th in THEOREMS:
            for case in th.cases:
                qs = witnesses(case.modulus, case.residues[0], th.group.order)
                print(f"  {th.label:10s} q = {case.label():22s} {case.expected_decomposition()}  witnesses {qs}")
            for r, like in th.unlisted:
                m = th.cases[0].modulus
                print(f"  {th.label:10s} q = {r} mod {m} (not listed): {unit_group_semisimple(th.group, r)}"
                      f"  same as q = {like} mod {m}")
    else:
        print(json.dumps(out))
    ok = all(all_passed(c) for _, c in suites)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    cap = args.cap if args.cap is not None else DEFAULT_GRID_CAP
    suites = [("oracle equivalence grid", oracle_grid(cap, inject_fault=args.inject_fault))]
    if not args.grid_only:
        suites.append(("closed forms", closed_form_checks()))
        suites.append(("invariants", invariant_suites(max_order=32)))
    out: list = []
    for title, checks in suites:
        if args.verbose or args.json:
            _report(title, checks, args.json, out)
        else:
            failed = [c for c in checks if not c.passed]
            print(f"== {title}: {len(checks) - len(failed)}/{len(checks)} passed")
            for c in failed:
                print("  " + c.line())
    if args.json:
        print(json.dumps(out))
    return EXIT_OK if all(all_passed(c) for _, c in suites) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unitlab", description="Unit groups of finite abelian group algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def field_args(sp):
        sp.add_argument("--group", required=True, help='e.g. "32", "8x2x2", "2^5", "16,2"')
        sp.add_argument("--p", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--q", type=int, help="field size p^n (instead of --p/--n)")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("compute", help="unit group of FG")
    field_args(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("symbolic", help="semisimple unit group for a residue class of q")
    sp.add_argument("--group", required=True)
    sp.add_argument("--q-mod", required=True, help="r:m, q = r mod m; m a multiple of exp(G)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_symbolic)

    sp = sub.add_parser("oracle", help="brute-force unit group by enumeration")
    field_args(sp)
    sp.add_argument("--cap", type=int, help="enumeration cap (default UNITLAB_CAP or 2^20)")
    sp.add_argument("--method", choices=("rank", "scan", "both"), default="rank")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("paper-tables", help="reproduce the order-32 tables")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_paper_tables)

    sp = sub.add_parser("verify", help="oracle grid and invariant suites")
    sp.add_argument("--cap", type=int, help=f"grid covers q^|G| <= cap (default {DEFAULT_GRID_CAP})")
    sp.add_argument("--grid-only", action="store_true")
    sp.add_argument("--verbose", "-v", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, CapacityError) as exc:
        print(f"unitlab: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InconsistencyError as exc:
        print(f"unitlab: inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
