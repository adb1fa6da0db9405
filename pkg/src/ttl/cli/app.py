"""Command-line entry point: ttl analyze|synthesize|hodge|h2|lie|permgrp|verify."""

from __future__ import annotations

import argparse
import json
import sys

from ..errors import ReduciblePolynomial, TTLError, VerificationFailed
from ..galois import DEFAULT_MAX_DEGREE, poly_to_json
from . import reports
from .parse import parse_poly
from .verify import verify_payload

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_CERT = 0, 2, 3, 4


def dump_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def render_text(value, indent: int = 0) -> str:
    """Plain-text rendering of a JSON payload."""
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return "\n".join(lines)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="emit JSON (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="emit plain text")
    common.add_argument("--verify", action="store_true", help="re-check every certificate before emitting")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, metavar="N")

    ap = argparse.ArgumentParser(prog="ttl", description="Invariants of 2-simple complex tori.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="analyze a defining polynomial")
    p.add_argument("poly")
    p.add_argument("--g", type=int)

    p = sub.add_parser("synthesize", parents=[common], help="build a certified field")
    for name in ("n", "r", "s", "g", "d"):
        p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("hodge", parents=[common], help="enumerate Hodge multiplicity vectors")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)

    p = sub.add_parser("h2", parents=[common], help="decompose H^2 along Galois orbits")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--case", choices=["degree_g", "degree_2g"], required=True)
    p.add_argument("--group", required=True, help="generators in cycle notation, separated by ';'")

    p = sub.add_parser("lie", parents=[common], help="Lie-theoretic tables")
    p.add_argument("action", choices=["minuscule", "weyl", "wedge2", "wedge2-scan", "bor-tabs", "spectrum", "balanced", "sp-wedge2"])
    p.add_argument("--type", choices=["A", "B", "C", "D"])
    p.add_argument("--rank", type=int)
    p.add_argument("--weight", help="comma-separated fundamental coefficients")
    p.add_argument("--m", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--allow-power", action="store_true", help="skip the perfect-power guard")
    for name in ("p", "q", "j"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--a")
    p.add_argument("--b")

    p = sub.add_parser("permgrp", parents=[common], help="orbit profile of a permutation group")
    p.add_argument("group", help="S<n>, C<n>, 'affine-half <q>' or cycle generators '(0 1 2); (0 1)@n'")

    p = sub.add_parser("verify", parents=[common], help="re-check a JSON report")
    p.add_argument("report", help="path to a JSON report, or - for stdin")
    return ap


_LIE_REQUIRED = {
    "minuscule": ("type", "rank"),
    "weyl": ("rank", "weight"),
    "wedge2": ("m",),
    "wedge2-scan": ("m_max",),
    "bor-tabs": ("g",),
    "spectrum": ("p", "q", "j"),
    "balanced": ("p", "q", "j"),
    "sp-wedge2": ("g",),
}


def run(args) -> dict:
    if args.command == "analyze":
        return reports.cmd_analyze(parse_poly(args.poly), g=args.g, max_degree=args.max_degree)
    if args.command == "synthesize":
        return reports.cmd_synthesize(args.n, args.r, args.s, args.g, args.d, max_degree=args.max_degree)
    if args.command == "hodge":
        return reports.cmd_hodge(args.g, args.degree, args.r, args.s)
    if args.command == "h2":
        return reports.cmd_h2(args.g, args.case, args.group)
    if args.command == "permgrp":
        return reports.cmd_permgrp(args.group)
    if args.command == "lie":
        missing = [k for k in _LIE_REQUIRED[args.action] if getattr(args, k) is None]
        if missing:
            raise reports.BadParameter(f"lie {args.action} needs " + ", ".join("--" + k.replace("_", "-") for k in missing))
        weight = None
        if args.weight is not None:
            try:
                weight = [int(t) for t in args.weight.split(",")]
            except ValueError:
                raise reports.BadParameter("--weight takes comma-separated integers") from None
        return reports.cmd_lie(
            args.action, type=args.type, rank=args.rank, weight=weight, m=args.m, m_max=args.m_max,
            g=args.g, allow_power=args.allow_power or None, p=args.p, q=args.q, j=args.j, a=args.a, b=args.b,
        )
    if args.command == "verify":
        text = sys.stdin.read() if args.report == "-" else open(args.report, encoding="utf-8").read()
        try:
            checked = verify_payload(json.loads(text))
        except (ValueError, json.JSONDecodeError) as exc:
            raise VerificationFailed(f"malformed report: {exc}") from None
        results = {"checked": checked, "verified": all(c["ok"] for c in checked)}
        return reports.make_report("verify", {"report": args.report}, results, [])
    raise AssertionError(args.command)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = run(args)
        if args.command == "verify":
            ok = report["results"]["verified"]
        elif args.verify:
            ok = all(c["ok"] for c in verify_payload(report))
            report["results"]["self_verified"] = ok
        else:
            ok = True
    except ReduciblePolynomial as exc:
        print(f"error: {exc}", file=sys.stderr)
        for f in exc.factors:
            print(f"  factor: {f}  {poly_to_json(f)}", file=sys.stderr)
        return exc.exit_code
    except TTLError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = render_text(report) + "\n" if args.fmt == "text" else dump_json(report)
    sys.stdout.write(out)
    return EXIT_OK if ok else EXIT_CERT
