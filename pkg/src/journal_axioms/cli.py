"""Command-line interface.

Exit status: 0 when nothing was found, 1 when violations or certificates
were found (or a replay did not reproduce), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import formats
from .axioms import certify_impossibility, check_ia, check_sc_method, validate_certificate
from .core import CLASS_NAMES, Problem, aggregate, classify, extremal_transform
from .decomp import SearchBounds
from .methods import METHODS, induced_order
from .sc import sc_admissible_set
from .search import FamilySpec, sweep_impossibility, sweep_violations

# options that never affect results and are not stored in reports
_VOLATILE = {"input", "format", "output", "replay", "handler", "workers"}


def _pair(text: str) -> tuple[str, str]:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"expected two journal names separated by a comma, got {text!r}")
    return parts[0], parts[1]


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("granularity must be positive")
    return value


def _bounds(args) -> SearchBounds:
    return SearchBounds(Fraction(args.granularity), args.max_layers, args.cap)


def _rows_text(p: Problem) -> list[str]:
    return formats.problem_to_csv(p).rstrip("\n").split("\n")


# -- handlers: (args, problem) -> (text lines, structured result, found) ------


def cmd_classify(args, p):
    flags = classify(p).as_dict()
    return [f"{k}: {str(v).lower()}" for k, v in flags.items()], flags, False


def cmd_transform(args, p):
    q = extremal_transform(p)
    return _rows_text(q), formats.problem_to_dict(q), False


def cmd_aggregate(args, p):
    q = aggregate(p, *args.merge)
    return _rows_text(q), formats.problem_to_dict(q), False


def cmd_rank(args, p):
    scores = METHODS[args.method](p)
    order = induced_order(scores, args.tie_tolerance)
    width = max(len(j) for j in p.journals)
    lines = [f"{name:<{width}}  {score:+.6f}" for name, score in zip(p.journals, scores)]
    lines.append(f"order: {order.format(p.journals)}")
    if scores.note:
        lines.append(f"note: {scores.note}")
    result = {
        "method": scores.method,
        "scores": {name: score for name, score in zip(p.journals, scores)},
        "order": formats.order_to_dict(order, p.journals),
        "note": scores.note,
    }
    return lines, result, False


def cmd_sc_enumerate(args, p):
    orders = sc_admissible_set(p, _bounds(args))
    lines = [o.format(p.journals) for o in orders]
    lines.append(f"{len(orders)} self-consistent weak order(s)")
    return lines, {"count": len(orders), "orders": [formats.order_to_dict(o, p.journals) for o in orders]}, False


def cmd_check(args, p):
    method = METHODS[args.method]
    if args.axiom == "sc":
        v = check_sc_method(method, p, _bounds(args), args.tie_tolerance)
        found = [] if v is None else [formats.sc_violation_to_dict(v, p.journals)]
        lines = [f"violation: {d['description']}" for d in found]
        if v is not None:
            for layer in v.witness.bijections:
                lines.append("  bijection: " + ", ".join(f"{p.journals[k]}->{p.journals[g]}" for k, g in layer))
    else:
        vs = check_ia(method, p, args.axiom[3:], args.tie_tolerance)
        found = [formats.ia_violation_to_dict(v) for v in vs]
        lines = [f"violation: {v.describe()}" for v in vs]
    lines.append(f"{len(found)} violation(s) of {args.axiom} for method {args.method}")
    return lines, {"violations": found}, bool(found)


def cmd_certify(args, p):
    cert = certify_impossibility(p, args.target, args.merge, _bounds(args))
    if cert is None:
        return ["no certificate for this target/merge pair"], {"certificate": None}, False
    q = cert.merged_problem
    lines = ["CERTIFICATE: " + cert.describe(), "before merge:"]
    lines += [f"  {o.format(p.journals)}" for o in cert.before_set]
    lines.append("after merge:")
    lines += [f"  {o.format(q.journals)}" for o in cert.after_set]
    lines.append(f"refutes weak IA as well: {str(cert.refutes_weak_ia).lower()}")
    return lines, {"certificate": formats.certificate_to_dict(cert)}, True


def cmd_search(args, p):
    spec = FamilySpec(args.n, frozenset(args.family), up_to_isomorphism=args.up_to_isomorphism)
    bounds = _bounds(args)
    workers = getattr(args, "workers", 1)
    if args.axiom == "impossibility":
        certs = sweep_impossibility(spec, bounds, workers)
        items = [formats.certificate_to_dict(c) for c in certs]
        lines = [
            f"certificate: target {','.join(c['target'])} merge {','.join(c['merge'])} on "
            + json.dumps(c["problem"]["citations"])
            for c in items
        ]
        lines.append(f"{len(items)} certificate(s)")
        return lines, {"certificates": items}, bool(items)
    reports = sweep_violations(METHODS[args.method], spec, args.axiom, bounds, args.tie_tolerance, workers)
    items = []
    for r in reports:
        if args.axiom == "sc":
            vs = [formats.sc_violation_to_dict(v, r.problem.journals) for v in r.violations]
        else:
            vs = [formats.ia_violation_to_dict(v) for v in r.violations]
        items.append({"instance": r.index, "problem": formats.problem_to_dict(r.problem), "violations": vs})
    lines = [f"instance {it['instance']}: {len(it['violations'])} violation(s)" for it in items]
    lines.append(f"{len(items)} instance(s) with violations of {args.axiom} for method {args.method}")
    return lines, {"reports": items}, bool(items)


# -- replay -------------------------------------------------------------------


def _same(a, b, tol=1e-9) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return isinstance(a, (int, float)) and isinstance(b, (int, float)) and math.isclose(a, b, abs_tol=tol)
    if isinstance(a, dict) and isinstance(b, dict):
        return a.keys() == b.keys() and all(_same(a[k], b[k], tol) for k in a)
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(_same(x, y, tol) for x, y in zip(a, b))
    return a == b


def replay(path: str | Path) -> tuple[bool, str]:
    """Re-run the command recorded in a structured report and compare results."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if doc.get("schema") != formats.SCHEMA:
        raise ValueError(f"not a {formats.SCHEMA} report")
    command = doc["command"]
    params = dict(doc["params"])
    for key in ("merge", "target"):
        if params.get(key) is not None:
            params[key] = tuple(params[key])
    args = argparse.Namespace(**params)
    p = formats.problem_from_dict(doc["problem"]) if "problem" in doc else None
    _, result, _ = HANDLERS[command](args, p)
    result = json.loads(formats.dumps(result))
    ok = _same(result, doc["result"])
    if ok and command == "certify" and doc["result"]["certificate"] is not None:
        cert = formats.certificate_from_dict(doc["result"]["certificate"])
        ok = validate_certificate(cert, _bounds(args))
    return ok, command


HANDLERS = {
    "classify": cmd_classify,
    "transform": cmd_transform,
    "aggregate": cmd_aggregate,
    "rank": cmd_rank,
    "sc-enumerate": cmd_sc_enumerate,
    "check": cmd_check,
    "certify": cmd_certify,
    "search": cmd_search,
}

NEEDS_INPUT = set(HANDLERS) - {"search"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="problem file (CSV or JSON)")
    common.add_argument("--format", choices=["csv", "structured"], help="input format (default: by file suffix)")
    common.add_argument("--output", choices=["text", "structured"], default="text")
    common.add_argument("--tie-tolerance", type=float, default=1e-8)
    common.add_argument("--granularity", type=_fraction, default=Fraction(1, 2))
    common.add_argument("--max-layers", type=int, default=None)
    common.add_argument("--cap", type=int, default=10_000)

    parser = argparse.ArgumentParser(
        prog="journal-axioms",
        description="Journal ranking problems: classes, scoring methods, and axiom checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    methods = sorted(METHODS)

    sub.add_parser("classify", parents=[common], help="report the four domain classes")
    sub.add_parser("transform", parents=[common], help="rewrite into the extremal form")
    agg = sub.add_parser("aggregate", parents=[common], help="unite two journals")
    agg.add_argument("--merge", type=_pair, required=True, metavar="A,B")
    rank = sub.add_parser("rank", parents=[common], help="score journals with a method")
    rank.add_argument("--method", choices=methods, default="ls")
    sub.add_parser("sc-enumerate", parents=[common], help="list all self-consistent weak orders")
    check = sub.add_parser("check", parents=[common], help="check a method against an axiom")
    check.add_argument("--axiom", choices=["ia-weak", "ia-strict", "sc"])
    check.add_argument("--method", choices=methods, default="ls")
    check.add_argument("--replay", metavar="REPORT", help="re-validate a structured report instead")
    cert = sub.add_parser("certify", parents=[common], help="build an impossibility certificate")
    cert.add_argument("--target", type=_pair, required=True, metavar="A,B")
    cert.add_argument("--merge", type=_pair, required=True, metavar="C,D")
    search = sub.add_parser("search", parents=[common], help="sweep a family of small problems")
    search.add_argument("--n", type=int, required=True)
    search.add_argument(
        "--family",
        type=lambda s: [c.strip() for c in s.split(",") if c.strip() and c.strip() != "all"],
        default=[],
        help=f"comma-separated class constraints from {','.join(CLASS_NAMES)}",
    )
    search.add_argument("--axiom", choices=["impossibility", "ia-weak", "ia-strict", "sc"], default="impossibility")
    search.add_argument("--method", choices=methods, default="ls")
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--up-to-isomorphism", action="store_true")
    return parser


def _params(args) -> dict:
    params = {k: v for k, v in vars(args).items() if k not in _VOLATILE}
    params["granularity"] = str(params["granularity"])
    return params


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check" and args.replay:
            ok, command = replay(args.replay)
            print(f"replay of {command} report: {'consistent' if ok else 'MISMATCH'}")
            return 0 if ok else 1
        if args.command == "check" and args.axiom is None:
            parser.error("check needs --axiom (or --replay)")
        p = None
        if args.command in NEEDS_INPUT:
            if not args.input:
                parser.error(f"{args.command} needs --input")
            p = formats.parse_problem(args.input, args.format)
        lines, result, found = HANDLERS[args.command](args, p)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output == "structured":
        print(formats.dumps(formats.report(args.command, p, _params(args), result)))
    else:
        print("\n".join(lines))
    return 1 if found else 0


if __name__ == "__main__":
    sys.exit(main())
