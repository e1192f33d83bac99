"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 disagreement between
the criterion and the brute-force oracle.
"""

from __future__ import annotations

import argparse
import sys

from .errors import DomainError
from .ext_field import format_element, format_field, make_field, parse_element, parse_field
from .oracle import brute_roots
from .polynomial import find_irreducible, format_poly, parse_poly
from .power_residues import (
    constant_power_in_extension,
    count_rth_powers,
    euler_division_identity,
    is_rth_power,
    list_rth_powers,
    rth_root,
)
from .prime_field import PrimeModulus

EXIT_USAGE, EXIT_DOMAIN, EXIT_DISAGREE = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _cmd_field(args):
    prime = PrimeModulus(args.p)
    spec = make_field(prime, args.n, args.modulus)
    default = find_irreducible(prime, args.n)
    yield {
        "field": format_field(spec),
        "p": str(spec.p),
        "n": str(spec.n),
        "q": str(spec.q),
        "modulus": format_poly(spec.modulus, descending=True),
        "default_modulus": format_poly(default, descending=True),
        "modulus_is_default": _bool(spec.modulus == default),
    }


def _cmd_is_power(args):
    spec = parse_field(args.field)
    a = parse_element(spec, args.element)
    report = is_rth_power(a, args.r)
    rec = report.to_record()
    if args.oracle:
        roots = brute_roots(spec, a, args.r)
        rec["oracle_is_power"] = _bool(bool(roots))
        rec["oracle_num_roots"] = str(len(roots))
        agree = (bool(roots) == report.is_power
                 and len(roots) == report.num_roots
                 and (not roots or roots[0] == report.canonical_root))
        rec["oracle"] = "AGREE" if agree else "DISAGREE"
    yield rec


def _cmd_count(args):
    spec = parse_field(args.field)
    counts = count_rth_powers(spec, args.r)
    rec = {"field": format_field(spec), "r": str(args.r), "total": str(counts.total)}
    if counts.nontrivial_squares is not None:
        rec["nontrivial"] = str(counts.nontrivial_squares)
        if counts.outside_hypothesis:
            rec["outside_hypothesis"] = "true"
    yield rec


def _cmd_table(args):
    spec = parse_field(args.field)
    powers = list_rth_powers(spec, args.r)
    if args.limit is not None:
        powers = powers[: args.limit]
    for x in powers:
        yield {"index": str(x.index), "element": format_element(x)}


def _cmd_root(args):
    spec = parse_field(args.field)
    a = parse_element(spec, args.element)
    root, count = rth_root(a, args.r)
    yield {
        "field": format_field(spec),
        "element": format_element(a),
        "r": str(args.r),
        "root": "NONE" if root is None else format_element(root),
        "num_roots": str(count),
    }


def _cmd_verify_identity(args):
    spec = parse_field(args.field)
    a = parse_element(spec, args.element)
    ident = euler_division_identity(spec, a, args.r)
    yield {
        "field": format_field(spec),
        "element": format_element(a),
        "r": str(args.r),
        "h": ident.format_h(),
        "remainder_coeff": format_element(ident.remainder_coeff),
        "verified": "skipped" if ident.verified is None else _bool(ident.verified),
    }


def _cmd_tower(args):
    prime = PrimeModulus(args.p)
    for n in range(1, args.max_n + 1):
        yield {"n": str(n), "is_power": _bool(constant_power_in_extension(prime, args.c, n, args.r))}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fqpower", description="Powers and Euler criteria in finite fields.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true",
                        help="tab-separated key=value records, one per line")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("field", parents=[common], help="construct F_{p^n}")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--modulus")
    p.set_defaults(func=_cmd_field)

    def with_field(name, help, element=False, r=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("--field", required=True, help='e.g. "F(13^3; t^3+2*t+11)"')
        if element:
            sp.add_argument("--element", required=True, help='e.g. "5+t+8*t^2" or "[5,1,8]"')
        if r:
            sp.add_argument("--r", type=int, required=True)
        return sp

    sp = with_field("is-power", "Euler criterion for r-th powers", element=True)
    sp.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    sp.set_defaults(func=_cmd_is_power)
    with_field("count", "number of r-th powers").set_defaults(func=_cmd_count)
    sp = with_field("table", "list the r-th powers")
    sp.add_argument("--limit", type=int)
    sp.set_defaults(func=_cmd_table)
    with_field("root", "canonical r-th root", element=True).set_defaults(func=_cmd_root)
    with_field("verify-identity", "check the division identity",
               element=True).set_defaults(func=_cmd_verify_identity)

    sp = sub.add_parser("tower", parents=[common], help="is c an r-th power in F_{p^n}, n = 1..N")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.set_defaults(func=_cmd_tower)
    return parser


def _render(records: list[dict[str, str]], machine: bool) -> str:
    if machine:
        return "".join("\t".join(f"{k}={v}" for k, v in rec.items()) + "\n" for rec in records)
    if not records:
        return ""
    if len(records) == 1:
        width = max(map(len, records[0]))
        return "".join(f"{k.ljust(width)} : {v}\n" for k, v in records[0].items())
    keys = list(records[0])
    widths = [max(len(k), *(len(rec[k]) for rec in records)) for k in keys]
    lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip()]
    lines += ["  ".join(rec[k].ljust(w) for k, w in zip(keys, widths)).rstrip() for rec in records]
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_USAGE if exc.code else 0
    try:
        records = list(args.func(args))
    except (DomainError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    stdout.write(_render(records, args.machine))
    if any(rec.get("oracle") == "DISAGREE" for rec in records):
        return EXIT_DISAGREE
    return 0


def main():
    sys.exit(run())
