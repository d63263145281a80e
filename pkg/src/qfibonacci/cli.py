"""Command line front end.

Verbs:
  enumerate     members of a pattern-restricted class (or W1/W2/W3)
  distribution  q-distribution of a statistic over a filtered class
  qfib          a q-Fibonacci family polynomial by oracle / recursion /
                closed form
  verify        identity verification reports (JSON)
  table         polynomial table for n = 0..max-n (text, CSV or LaTeX)

Exit codes: 0 success (verify: every instance holds under some cataloged
reading), 1 verification found an instance failing all readings, 2 usage
error, 3 enumeration bound exceeded.  Data goes to stdout, diagnostics to
stderr.  There is no configuration beyond the flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import partitions, permstats, qfib
from .permstats import BoundExceeded
from .polyring import MultiPoly

USAGE_EXIT = 2
BOUND_EXIT = 3

_STATS = {
    "inv": permstats.inv,
    "maj": permstats.maj,
    "des": lambda p: len(permstats.descent_set(p)),
    "cycles": lambda p: permstats.cycle_decomposition(p).cycle_count,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qfib",
                     description="Pattern-restricted permutation classes, "
                                 "their q-Fibonacci distributions, and the "
                                 "identity verifier.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_enum = sub.add_parser("enumerate", parents=[], help="list class members")
    p_enum.add_argument("--class", dest="cls", required=True,
                        help="comma-separated patterns (e.g. 123,132,213) or "
                             "a West class name W1/W2/W3")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--format", choices=("text", "json"), default="text")

    p_dist = sub.add_parser("distribution",
                            help="q-distribution of a statistic over a class")
    p_dist.add_argument("--kind", choices=("perms", "partitions"),
                        default="perms")
    p_dist.add_argument("--patterns", required=True,
                        help="comma-separated patterns; permutations as digit "
                             "strings, partitions in slash notation separated "
                             "by commas (e.g. '13/2,123')")
    p_dist.add_argument("--stat", default="inv",
                        help="inv, maj, des, cycles (perms) or rb (partitions)")
    p_dist.add_argument("--n", type=int, required=True)
    p_dist.add_argument("--format", choices=("text", "json"), default="text")

    p_qfib = sub.add_parser("qfib", help="a q-Fibonacci family polynomial")
    p_qfib.add_argument("--family", required=True,
                        help=f"one of {', '.join(qfib.FAMILIES)}")
    p_qfib.add_argument("--n", type=int, required=True)
    p_qfib.add_argument("--method",
                        choices=("oracle", "recursion", "closed-form"),
                        default="oracle")
    p_qfib.add_argument("--format", choices=("text", "json", "latex"),
                        default="text")

    p_ver = sub.add_parser("verify", help="verify cataloged identities")
    group = p_ver.add_mutually_exclusive_group(required=True)
    group.add_argument("--identity", help="catalog id, e.g. T4.3a")
    group.add_argument("--all", action="store_true",
                       help="verify the whole catalog")
    group.add_argument("--list", action="store_true",
                       help="print the identity catalog")
    p_ver.add_argument("--max-n", type=int, default=None)
    p_ver.add_argument("--max-m", type=int, default=None)

    p_tab = sub.add_parser("table",
                           help="family polynomials for n = 0..max-n")
    p_tab.add_argument("--family", required=True)
    p_tab.add_argument("--max-n", type=int, required=True)
    p_tab.add_argument("--method",
                       choices=("oracle", "recursion", "closed-form"),
                       default="oracle")
    p_tab.add_argument("--format", choices=("text", "csv", "latex"),
                       default="text")
    return parser


def _parse_perm_patterns(text: str) -> list[tuple[int, ...]]:
    pats = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        pats.append(permstats.perm_from_text(tok))
    return pats


def _poly_payload(p: MultiPoly, fmt: str, **meta) -> str:
    if fmt == "json":
        return json.dumps({**meta, "text": p.canonical_text(),
                           "terms": p.to_json_terms()})
    if fmt == "latex":
        return p.latex_text()
    return p.canonical_text()


def _family_poly(family: str, n: int, method: str) -> MultiPoly:
    if method == "closed-form":
        if family != "I":
            raise ValueError("closed form is available for family I only")
        return qfib.closed_form_I(n)
    if method == "recursion":
        return qfib.qfib_recursive(family, n)
    return qfib.qfib_oracle(family, n)


def _cmd_enumerate(args) -> int:
    cls = args.cls.strip()
    if cls in permstats.WEST_PATTERNS:
        members = permstats.west_class(args.n, cls)
    else:
        members = permstats.enumerate_avoiders(args.n, _parse_perm_patterns(cls))
    if args.format == "json":
        print(json.dumps([list(p) for p in members]))
    else:
        for p in members:
            print(permstats.perm_to_text(p))
    return 0


def _cmd_distribution(args) -> int:
    n = args.n
    if args.kind == "partitions":
        if args.stat != "rb":
            raise ValueError("partition distributions support --stat rb")
        pats = [partitions.partition_from_text(t) for t in
                args.patterns.split(",") if t.strip()]
        members = partitions.enumerate_partitions_avoiding(n, pats)
        poly = MultiPoly.zero()
        for alpha in members:
            poly = poly + MultiPoly.term(1, q=partitions.rb(alpha))
    else:
        if args.stat not in _STATS:
            raise ValueError(f"unknown statistic {args.stat!r}; choose from "
                             f"{', '.join(sorted(_STATS))} (or rb with "
                             "--kind partitions)")
        stat = _STATS[args.stat]
        members = permstats.enumerate_avoiders(n, _parse_perm_patterns(args.patterns))
        poly = MultiPoly.zero()
        for p in members:
            poly = poly + MultiPoly.term(1, q=stat(p))
    print(_poly_payload(poly, args.format, kind=args.kind, stat=args.stat,
                        n=n, size=len(members)))
    return 0


def _cmd_qfib(args) -> int:
    if args.family not in qfib.FAMILIES:
        raise ValueError(f"unknown family {args.family!r}; choose from "
                         f"{', '.join(qfib.FAMILIES)}")
    poly = _family_poly(args.family, args.n, args.method)
    print(_poly_payload(poly, args.format, family=args.family, n=args.n,
                        method=args.method))
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        print(json.dumps(qfib.identity_catalog(), indent=2))
        return 0
    if args.all:
        reports = qfib.verify_all(max_n=args.max_n)
    else:
        if args.identity not in qfib.IDENTITY_IDS:
            raise ValueError(
                f"unknown identity {args.identity!r}; valid ids: "
                f"{', '.join(qfib.IDENTITY_IDS)}")
        reports = [qfib.verify_identity(args.identity, max_n=args.max_n,
                                        max_m=args.max_m)]
    print(json.dumps([r.to_json() for r in reports], indent=2))
    return 0 if all(r.holds for r in reports) else 1


def _cmd_table(args) -> int:
    if args.family not in qfib.FAMILIES:
        raise ValueError(f"unknown family {args.family!r}; choose from "
                         f"{', '.join(qfib.FAMILIES)}")
    rows = []
    for n in range(args.max_n + 1):
        poly = _family_poly(args.family, n, args.method)
        rows.append((n, poly))
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "polynomial"])
        for n, poly in rows:
            writer.writerow([n, poly.canonical_text()])
        sys.stdout.write(buf.getvalue())
    elif args.format == "latex":
        print(r"\begin{tabular}{rl}")
        print(rf"$n$ & $F_n^{{{args.family}}}$ \\ \hline")
        for n, poly in rows:
            print(rf"{n} & ${poly.latex_text()}$ \\")
        print(r"\end{tabular}")
    else:
        for n, poly in rows:
            print(f"{n}\t{poly.canonical_text()}")
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "distribution": _cmd_distribution,
    "qfib": _cmd_qfib,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return _COMMANDS[args.verb](args)
    except BoundExceeded as exc:
        print(f"qfib: {exc}", file=sys.stderr)
        return BOUND_EXIT
    except (ValueError, KeyError) as exc:
        print(f"qfib: error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
