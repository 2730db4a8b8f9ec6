"""Command line entry point: ``intervalmono <command> ...``.

Errors are reported on stderr as a single JSON line
``{"error": <kind>, "message": <text>}`` with a non-zero exit status
(2 usage, 3 resource cap, 4 bad relation file, 1 failed verification).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas
from .chain import format_transformation, parse
from .enumeration import FILTER_MAX_N, enumerate_constructive, enumerate_filter, froidure_pin
from .exceptions import RelationFileError, ResourceGuardError
from .nilpotents import enumerate_nilpotents, nilpotents_by_domain, nonclosure_witness
from .presentation import (
    BoundExceeded,
    Presentation,
    check_relations_hold,
    fp_enumerate,
    load_relations,
    relations_N,
    standard_alphabet,
    standard_assignment,
)
from .rank import DEFAULT_SEARCH_CAP, certify_rank_exhaustive, certify_rank_structural, generating_set


class CommandError(Exception):
    def __init__(self, kind, message, status=1):
        super().__init__(message)
        self.kind = kind
        self.status = status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandError("usage", f"{self.prog}: {message}", status=2)


_COUNTS = {
    "IM": (formulas.card_IM, lambda n: len(enumerate_constructive(n, "IM")), lambda n: len(enumerate_filter(n, "IM"))),
    "PIM": (formulas.card_PIM, lambda n: len(enumerate_constructive(n, "PIM")), lambda n: len(enumerate_filter(n, "PIM"))),
    "IO": (formulas.card_IO, lambda n: len(enumerate_constructive(n, "IO")), lambda n: len(enumerate_filter(n, "IO"))),
    "PIO": (formulas.card_PIO, lambda n: len(enumerate_constructive(n, "PIO")), lambda n: len(enumerate_filter(n, "PIO"))),
    "N_PIM": (formulas.card_N_PIM, lambda n: len(enumerate_nilpotents(n)), None),
    "N_PIO": (formulas.card_N_PIO, lambda n: len(enumerate_nilpotents(n, "PIO")), None),
}


def _n_values(args):
    if args.n_range:
        try:
            lo, hi = (int(x) for x in args.n_range.split(":"))
        except ValueError:
            raise CommandError("usage", f"--n-range expects LO:HI, got {args.n_range!r}", 2) from None
        values = list(range(lo, hi + 1))
    elif args.n is not None:
        values = [args.n]
    else:
        raise CommandError("usage", "give --n or --n-range", 2)
    if not values or min(values) < 1:
        raise CommandError("usage", "chain sizes must be at least 1", 2)
    return values


def cmd_count(args, out):
    formula, enumerated, oracle = _COUNTS[args.family]
    reports = []
    for n in _n_values(args):
        rep = formulas.CountReport(n, args.family, formula(n))
        if args.enumerate:
            rep.enumerated = enumerated(n)
        if args.oracle:
            if oracle is None:
                raise CommandError("usage", f"no filter oracle for {args.family}", 2)
            if n > FILTER_MAX_N:
                raise CommandError("resource-guard", f"filter oracle is limited to n <= {FILTER_MAX_N}", 3)
            rep.oracle = oracle(n)
        reports.append(rep)
    if args.format == "json":
        out.write(formulas.reports_to_json(reports) + "\n")
    elif args.format == "csv":
        out.write(formulas.reports_to_csv(reports))
    else:
        for rep in reports:
            if rep.enumerated is None and rep.oracle is None:
                out.write(f"{rep.formula}\n")
            else:
                extra = "".join(
                    f" {k}={v}" for k, v in (("enumerated", rep.enumerated), ("oracle", rep.oracle)) if v is not None
                )
                out.write(f"{rep.n} {rep.family} formula={rep.formula}{extra} agree={rep.agree}\n")
    if not all(rep.agree for rep in reports):
        return 1
    return 0


def cmd_enumerate(args, out):
    n = args.n
    if args.method == "filter":
        elems = enumerate_filter(n, args.family, max_n=args.max_filter_n)
    elif args.method == "froidure-pin":
        gens, _ = generating_set(n, args.family)
        elems = froidure_pin(gens, n).element_set()
    else:
        elems = enumerate_constructive(n, args.family)
    for a in sorted(elems):
        out.write(format_transformation(a) + "\n")
    return 0


def cmd_nilpotents(args, out):
    n = args.n
    doc = {
        "n": n,
        "count": len(enumerate_nilpotents(n)),
        "formula": formulas.card_N_PIM(n),
        "by_domain": [
            {"j": j, "r": r, "count": c, "formula": formulas.nilpotent_count_for_domain(n, j, r)}
            for (j, r), c in sorted(nilpotents_by_domain(n).items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ],
    }
    if args.witness:
        pair = nonclosure_witness(n)
        doc["witness"] = None if pair is None else [format_transformation(a) for a in pair]
    out.write(json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_rank(args, out):
    if args.method == "exhaustive":
        cert = certify_rank_exhaustive(args.n, args.family, cap=args.cap)
    else:
        if args.n < 3:
            raise CommandError("usage", "the structural certificate needs n >= 3", 2)
        cert = certify_rank_structural(args.n, args.family)
    doc = cert.as_dict()
    if not args.timing:
        doc.pop("wall_time")
    out.write(json.dumps(doc, indent=2) + "\n")
    return 0 if cert.valid else 1


def cmd_verify_presentation(args, out):
    n, family = args.n, args.family
    if n < 2:
        raise CommandError("usage", "presentations are considered for n >= 2", 2)
    base = load_relations(args.relations)
    base_letters = standard_alphabet(n, family, with_h=False)
    try:
        Presentation(base_letters, base)
    except ValueError as exc:
        raise RelationFileError(str(exc)) from None
    groups = relations_N(n)
    added = groups["N0"] + groups["N1"] + groups["N2"]
    if family == "PIM":
        added += groups["N1'"]
    full = Presentation(standard_alphabet(n, family), base + added)
    violations = check_relations_hold(full, standard_assignment(n, family), n)
    expected = formulas.card_IM(n) if family == "IM" else formulas.card_PIM(n)
    size = fp_enumerate(full, args.bound)
    doc = {
        "n": n,
        "family": family,
        "generators": len(full.alphabet),
        "base_relations": len(base),
        "added_relations": len(added),
        "total_relations": len(full.relations),
        "violations": [str(v) for v in violations],
        "quotient_size": None if isinstance(size, BoundExceeded) else size,
        "bound_exceeded": size.reason if isinstance(size, BoundExceeded) else None,
        "expected_size": expected,
    }
    doc["defines_monoid"] = not violations and doc["quotient_size"] == expected
    out.write(json.dumps(doc, indent=2) + "\n")
    return 0 if doc["defines_monoid"] else 1


def cmd_cayley_dot(args, out):
    if args.generators:
        gens = [parse(t, args.n) for t in args.generators]
        labels = [f"x{k + 1}" for k in range(len(gens))]
    else:
        gens, labels = generating_set(args.n, args.family)
    table = froidure_pin(gens, args.n, labels)
    out.write(table.to_dot())
    return 0


def cmd_table(args, out):
    ns = range(1, args.max_n + 1)
    rows = [
        ("IM_n", formulas.card_IM, lambda n: len(enumerate_constructive(n, "IM"))),
        ("PIM_n", formulas.card_PIM, lambda n: len(enumerate_constructive(n, "PIM"))),
        ("N(PIM_n)", formulas.card_N_PIM, lambda n: len(enumerate_nilpotents(n))),
    ]
    out.write(",".join(["n"] + [str(n) for n in ns]) + "\n")
    status = 0
    for name, formula, enumerated in rows:
        values = [formula(n) for n in ns]
        if args.check and values != [enumerated(n) for n in ns]:
            status = 1
        out.write(",".join([name] + [str(v) for v in values]) + "\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="intervalmono", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="closed-form counts, optionally cross-checked")
    p.add_argument("--family", required=True, choices=sorted(_COUNTS))
    p.add_argument("--n", type=int)
    p.add_argument("--n-range", help="inclusive range LO:HI")
    p.add_argument("--enumerate", action="store_true", help="also count by constructive enumeration")
    p.add_argument("--oracle", action="store_true", help=f"also count by brute-force filtering (n <= {FILTER_MAX_N})")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list elements in two-row notation")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("constructive", "filter", "froidure-pin"), default="constructive")
    p.add_argument("--max-filter-n", type=int, default=FILTER_MAX_N)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("nilpotents", help="nilpotent counts of PIM_n as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="include a pair of nilpotents with non-nilpotent product")
    p.set_defaults(func=cmd_nilpotents)

    p = sub.add_parser("rank", help="rank certificate as JSON")
    p.add_argument("--family", required=True, choices=("IM", "PIM"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("exhaustive", "structural"), default="exhaustive")
    p.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP)
    p.add_argument("--timing", action="store_true", help="include wall time (output no longer reproducible)")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("verify-presentation", help="add the h-relations to a base relation file and enumerate")
    p.add_argument("--family", choices=("IM", "PIM"), default="IM")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--relations", required=True, help="base relations over a_i, b_i (and e_i, f_i for PIM)")
    p.add_argument("--bound", type=int, default=100_000)
    p.set_defaults(func=cmd_verify_presentation)

    p = sub.add_parser("cayley-dot", help="right Cayley graph in DOT format")
    p.add_argument("--family", choices=("IM", "PIM"), default="IM")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generators", nargs="+", metavar="TWO_ROW", help="e.g. '[1 2 3 / 3 2 1]'")
    p.set_defaults(func=cmd_cayley_dot)

    p = sub.add_parser("table", help="CSV of |IM_n|, |PIM_n|, |N(PIM_n)|")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--check", action="store_true", help="compare against constructive enumeration")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except CommandError as exc:
        kind, status, msg = exc.kind, exc.status, str(exc)
    except ResourceGuardError as exc:
        kind, status, msg = "resource-guard", 3, str(exc)
    except RelationFileError as exc:
        kind, status, msg = "relation-file", 4, str(exc)
    except OSError as exc:
        kind, status, msg = "io", 4, str(exc)
    except (ValueError, IndexError) as exc:
        kind, status, msg = "invalid-argument", 2, str(exc)
    err.write(json.dumps({"error": kind, "message": msg}) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
