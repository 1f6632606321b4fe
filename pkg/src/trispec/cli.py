"""Command-line front end.

Exit codes: 0 success or match, 1 verification mismatch, 2 usage or range error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from trispec import catalog, eigclass
from trispec.core import CentralType, OutOfRange, ParseError, dumps, parse_central_type, parse_rational
from trispec.exact import CapExceeded, dimension_cap
from trispec.oracle import NoOracle, diagram_matrix, exact_spectrum, verify_srg
from trispec.srg import params_from_spectrum

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ct(text: str) -> CentralType:
    try:
        return parse_central_type(text)
    except (ParseError, OutOfRange) as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, obj: dict, lines: list[str]) -> None:
    if args.quiet:
        return
    if args.format == "json":
        print(dumps(obj))
    else:
        print("\n".join(lines))


def cmd_spectrum(args) -> int:
    ct = _ct(args.central_type)
    spec = catalog.spectrum(ct)
    n = catalog.size(ct)
    obj = {
        "central_type": str(ct),
        "names": list(ct.alias_names),
        "size": n,
        "spectrum": spec.to_json_obj(),
        "min_eigenvalue": int(spec.min_eigenvalue),
        "diagram_only": catalog.diagram_only(ct),
        "symplectic_type": catalog.symplectic_type(ct),
    }
    lines = [
        f"central type   {ct}",
        f"name           {' = '.join(ct.alias_names)}",
        f"size           {n}",
        f"spectrum       {spec}",
        f"min eigenvalue {int(spec.min_eigenvalue)}",
    ]
    if catalog.diagram_only(ct):
        lines.append("note           diagram only, outside the classification ranges")
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_params(args) -> int:
    ct = _ct(args.central_type)
    try:
        p = catalog.extended_params(ct, args.side)
    except catalog.NotRank3 as exc:
        raise UsageError(str(exc)) from exc
    obj = {"central_type": str(ct), "side": args.side, "params": p.to_json_obj()}
    lines = [f"{ct} {args.side}: {p.render()}", f"complement side: l={p.l}, lambda'={p.lam_c}, mu'={p.mu_c}"]
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    ct = _ct(args.central_type)
    try:
        m = diagram_matrix(ct, cap=args.cap)
    except NoOracle as exc:
        raise UsageError(f"{exc}: no oracle at this scale") from exc
    except CapExceeded as exc:
        raise UsageError(str(exc)) from exc
    expected = catalog.spectrum(ct)
    got = exact_spectrum(m, cap=args.cap)
    ok = got == expected
    srg_note = None
    if ok and catalog.is_rank3(ct) and expected.degree is not None:
        brute = verify_srg(m)
        ok = brute == catalog.extended_params(ct) == params_from_spectrum(got, m.n)
        srg_note = brute.render()
    obj = {
        "central_type": str(ct),
        "n": m.n,
        "match": ok,
        "catalog": expected.to_json_obj(),
        "oracle": got.to_json_obj(),
    }
    if srg_note:
        obj["srg"] = srg_note
    lines = [f"{ct}: {'match' if ok else 'MISMATCH'} on {m.n} vertices"]
    if not ok or args.verbose:
        lines += [f"  catalog {expected}", f"  oracle  {got}"]
    if srg_note:
        lines.append(f"  srg     {srg_note}")
    _emit(args, obj, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    if args.t < 1:
        raise UsageError("t must be a positive integer")
    report = eigclass.enumerate_min_eig(args.t)
    lines = [f"minimal eigenvalue >= -{args.t}: S={report.S}, I={report.I}, Moufang class included"]
    for row in report.symmetric_families:
        lines.append(f"  rho={row.rho:>5}  family      {row}  {row.name}")
    for rho, names in report.individuals.items():
        for name in names:
            ct = parse_central_type(name)
            lines.append(f"  rho={rho:>5}  individual  {name}  {ct.name}")
    _emit(args, report.to_json_obj(), lines)
    return EXIT_OK


def cmd_matsuo(args) -> int:
    try:
        eta = parse_rational(args.eta)
        report = eigclass.matsuo_candidates(eta, symplectic_only=args.symplectic)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    lines = [f"eta={args.eta}: rho >= -{report.t}; Moufang {', '.join(report.moufang) or '-'}"]
    for row in report.families:
        lines.append(f"  family      {row}  {row.name}  {report.statuses[str(row)]}")
    for name in report.individuals:
        lines.append(f"  individual  {name}  {parse_central_type(name).name}  {report.statuses[name]}")
    lines.append(f"  S={len(report.families)} I={len(report.individuals)}")
    _emit(args, report.to_json_obj(), lines)
    return EXIT_OK


def cmd_catalog(args) -> int:
    entries = catalog.catalog_entries()
    lines = [
        f"{e.family:<5} params={e.parameters or '-':<8} symplectic={e.symplectic_type}  "
        + "; ".join(e.aliases)
        for e in entries
    ]
    if args.format == "json" and not args.quiet:
        print(dumps([e.to_json_obj() for e in entries]))
    elif not args.quiet:
        print("\n".join(lines))
    return EXIT_OK


def cmd_export(args) -> int:
    ct = _ct(args.central_type)
    try:
        m = diagram_matrix(ct, cap=args.cap)
    except (NoOracle, CapExceeded) as exc:
        raise UsageError(str(exc)) from exc
    text = m.to_edge_list() if args.edges else m.to_dimacs()
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    elif not args.quiet:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cap", type=int, default=None, help="dimension cap for explicit matrices")
    common.add_argument("--quiet", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="trispec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="closed-form size and spectrum")
    p.add_argument("central_type")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("params", parents=[common], help="extended rank 3 parameters")
    p.add_argument("central_type")
    p.add_argument("--side", choices=("diagram", "codiagram"), default="diagram")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify", parents=[common], help="compare catalog with an explicit construction")
    p.add_argument("central_type")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="central types with minimal eigenvalue >= -t")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("matsuo", parents=[common], help="Matsuo Gram matrix candidates")
    p.add_argument("--eta", required=True, help="rational p/q")
    p.add_argument("--symplectic", action="store_true", help="restrict to symplectic type")
    p.set_defaults(func=cmd_matsuo)

    p = sub.add_parser("catalog", parents=[common], help="registry queries")
    p.add_argument("action", choices=("list",))
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("export-graph", parents=[common], help="write an explicit diagram")
    p.add_argument("central_type")
    p.add_argument("--edges", action="store_true", help="plain 0-based edge list instead of DIMACS")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is None:
        args.cap = dimension_cap()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"trispec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
