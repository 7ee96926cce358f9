"""Command-line driver.

Exit statuses: 0 success, 1 usage or input error, 2 size cap exceeded,
3 internal oracles disagree with each other. A closed-formula mismatch is
a finding and exits 0.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .classify import classify_2_1, classify_system
from .enumeration import enumerate_classes, enumerate_feasible, enumerate_patterns, verify_counts
from .feasibility import is_feasible
from .formats import UniverseDocument, default_order, from_internal, to_internal
from .model import DEFAULT_CAP, GuardExceeded, SystemShape, schema_digits
from .simulate import check_personal_universe, run_agreement_simulation
from .symmetry import canonical_form, orbit

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_ORACLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _observable(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _shape_args(p: argparse.ArgumentParser, required: bool = True):
    # commands that take a bare pattern default to the 2+1 system
    if required:
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
    else:
        p.add_argument("--m", type=int, default=2)
        p.add_argument("--n", type=int, default=1)
    p.add_argument("--observable", type=_observable, default=None,
                   help="comma-separated observable object indices (default: all)")


def _order_arg(p):
    p.add_argument("--order", choices=["paper", "internal"], default=None,
                   help="digit order (default: paper for 2+1, internal otherwise)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="universes", description=__doc__.splitlines()[0])
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap in digits")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="stream digit patterns")
    _shape_args(p)
    _order_arg(p)
    p.add_argument("--feasible-only", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("classes", help="stream isomorphism classes")
    _shape_args(p)
    _order_arg(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("classify", help="reality class of a 2+1 pattern or a labeled system")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern")
    g.add_argument("--labels", help="universe document with labels")
    _order_arg(p)
    p.add_argument("--dogmatic", action="store_true",
                   help="do not assume subjects and objects exist")

    p = sub.add_parser("verify-counts", help="audit the closed counting formulas")
    _shape_args(p)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("canonical", help="canonical form and orbit of a pattern")
    p.add_argument("--pattern", required=True)
    _shape_args(p, required=False)
    _order_arg(p)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("simulate", help="run a two-subject agreement scenario")
    p.add_argument("--scenario", required=True)

    p = sub.add_parser("export-dot", help="write a universe as a DOT graph")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern")
    g.add_argument("--labels", help="universe document (labels or pattern)")
    _shape_args(p, required=False)
    _order_arg(p)
    p.add_argument("--out", required=True)
    return parser


def _shape(args) -> SystemShape:
    return SystemShape(args.m, args.n, None if args.observable is None else tuple(args.observable))


def _order(args, shape) -> str:
    return args.order or default_order(shape)


def _emit(records, fmt, fields, out):
    if fmt == "csv":
        formats.write_csv(records, fields, out)
    else:
        for r in records:
            out.write(json.dumps(r, sort_keys=True) + "\n")


def cmd_enumerate(args, out):
    shape = _shape(args)
    s = schema_digits(shape)
    order = _order(args, shape)
    if args.feasible_only:
        pats = ((p, True) for p in enumerate_feasible(s, args.cap, args.workers))
    else:
        pats = ((p, is_feasible(p, s)) for p in enumerate_patterns(s, args.cap))
    records = (
        {"pattern": str(from_internal(p, shape, order)), "order": order, "feasible": f}
        for p, f in pats
    )
    _emit(records, args.format, ["pattern", "order", "feasible"], out)
    return EXIT_OK


def cmd_classes(args, out):
    shape = _shape(args)
    s = schema_digits(shape)
    order = _order(args, shape)
    records = (formats.class_record(c, shape, order) for c in enumerate_classes(s, args.cap, args.workers))
    _emit(records, args.format, ["canonical", "order", "orbit_size", "feasible", "name"], out)
    return EXIT_OK


def cmd_classify(args, out):
    if args.labels:
        with open(args.labels) as fh:
            doc = UniverseDocument.loads(fh.read())
        if doc.labels is None:
            raise UsageError("--labels needs a document with labels")
        out.write(formats.dumps(classify_system(doc.labels, dogmatic=args.dogmatic).as_dict()))
        return EXIT_OK
    out.write(f"{classify_2_1(args.pattern, order=args.order or 'paper')}\n")
    return EXIT_OK


def cmd_verify_counts(args, out):
    report = verify_counts(_shape(args), args.cap, args.workers)
    out.write(formats.dumps(formats.report_dict(report)))
    if not report.oracles_consistent:
        print("internal oracle disagreement", file=sys.stderr)
        return EXIT_ORACLE
    if "enumeration" in report.skipped:
        print(f"cap exceeded: {report.digit_count} digits > {args.cap}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def cmd_canonical(args, out):
    shape = _shape(args)
    s = schema_digits(shape)
    order = _order(args, shape)
    p = to_internal(args.pattern, shape, order)
    if len(p) != len(s):
        raise UsageError(f"pattern needs {len(s)} digits for {shape}")
    canon = str(from_internal(canonical_form(p, s), shape, order))
    members = sorted(str(from_internal(q, shape, order)) for q in orbit(p, s))
    if args.format == "json":
        out.write(formats.dumps({"canonical": canon, "order": order, "orbit": members}))
    else:
        out.write(f"{canon}\norbit: {' '.join(members)}\n")
    return EXIT_OK


def cmd_simulate(args, out):
    with open(args.scenario) as fh:
        sc = json.load(fh)
    t = run_agreement_simulation(sc["events"], sc["perceptions"], sc["languages"], sc.get("alphabet"))
    out.write(formats.dumps({"transcript": t.as_dict(), "verdict": str(check_personal_universe(t))}))
    return EXIT_OK


def cmd_export_dot(args, out):
    if args.labels:
        with open(args.labels) as fh:
            doc = UniverseDocument.loads(fh.read())
        item = doc.labels if doc.labels is not None else doc.pattern()
        shape = doc.shape
    else:
        shape = _shape(args)
        item = to_internal(args.pattern, shape, _order(args, shape))
    text = formats.export_dot(item, schema_digits(shape))
    with open(args.out, "w") as fh:
        fh.write(text)
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "classes": cmd_classes,
    "classify": cmd_classify,
    "verify-counts": cmd_verify_counts,
    "canonical": cmd_canonical,
    "simulate": cmd_simulate,
    "export-dot": cmd_export_dot,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except GuardExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
