"""Command-line front end.

Exit status: 0 success, 1 invalid input, 2 verification failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import analysis
from .closure import closure_trace, density_report, iterated_closure, s_param
from .constructions import KINDS, ConstructionSpec
from .errors import CriterionMismatch, DisagreementFound, FamilyError
from .relative import has_closure_root
from .setcore import (
    SetFamily,
    canonical_iso_form,
    elements_of,
    format_family,
    mask_of,
    parse_family,
)
from .verification import CHECKS, run_checks

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64

VERIFY_TARGETS = {
    "lift": ["lift"],
    "path": ["path"],
    # alternate target names
    "sec3": ["lift"],
    "sec4": ["path"],
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_family_file(path) -> SetFamily:
    return parse_family(Path(path).read_text())


def _parse_generators(text: str) -> tuple[int, ...]:
    gens = []
    for chunk in text.split(";"):
        elems = [int(t) for t in chunk.replace(",", " ").split()]
        if elems:
            gens.append(mask_of(elems))
    return tuple(gens)


def _spec_from_args(args, kind: str) -> ConstructionSpec:
    if args.n is None:
        raise UsageError("constructions need --n")
    base = parse_family_file(args.base) if getattr(args, "base", None) else None
    gens = _parse_generators(args.gen) if getattr(args, "gen", None) else ()
    return ConstructionSpec(kind, args.n, k=args.k, c=args.c, base=base, generators=gens)


def _load_input(args) -> SetFamily:
    if args.construct:
        return _spec_from_args(args, args.construct).build()
    if args.family is None:
        raise UsageError("give a family file or --construct KIND")
    return parse_family_file(args.family)


def _emit(args, text: str, report: dict) -> None:
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command}
        doc.update(report)
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _family_report(F: SetFamily) -> dict:
    return {"n": F.n, "size": len(F), "members": [elements_of(m) for m in F.members]}


# -- subcommands -------------------------------------------------------------


def cmd_closure(args) -> int:
    F = _load_input(args)
    result = iterated_closure(F, args.levels)
    _emit(args, format_family(result), {"levels": args.levels, "family": _family_report(result)})
    return EXIT_OK


def cmd_trace(args) -> int:
    trace = closure_trace(_load_input(args))
    _emit(args, trace.to_text(), {"trace": trace.to_report()})
    return EXIT_OK


def cmd_density(args) -> int:
    rep = density_report(_load_input(args))
    _emit(args, rep.to_text(), rep.to_report())
    return EXIT_OK


def cmd_s_param(args) -> int:
    s = s_param(_load_input(args))
    _emit(args, f"s={s}", {"s_param": s})
    return EXIT_OK


def cmd_root(args) -> int:
    cert = has_closure_root(_load_input(args))
    _emit(args, cert.to_text(), cert.to_report())
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _spec_from_args(args, args.kind)
    F = spec.build()
    report = {
        "kind": spec.kind,
        "expected_density": spec.expected_density,
        "expected_s": spec.expected_s,
        "family": _family_report(F),
    }
    _emit(args, format_family(F), report)
    return EXIT_OK


def cmd_census(args) -> int:
    census = analysis.density_census(args.n)
    lines = [f"n={census.n}"]
    for k, count in census.labelled_counts.items():
        lines.append(
            f"density={k} labelled={count} classes={census.iso_counts[k]} "
            f"leaves={census.leaf_counts.get(k, 0)}"
        )
    _emit(args, "\n".join(lines), {"census": census.to_report()})
    return EXIT_OK


def cmd_tree(args) -> int:
    tree = analysis.closure_tree(args.n)
    if args.edges:
        Path(args.edges).write_text(tree.edge_list())
    text = (
        f"n={tree.n} nodes={len(tree.nodes)} depth={tree.depth()} "
        f"leaves={len(tree.leaves())}"
    )
    _emit(args, text, {"tree": tree.to_report()})
    return EXIT_OK


def cmd_frankl(args) -> int:
    F = _load_input(args)
    res = analysis.frankl_check(F, strict=args.strict)
    g = analysis.g_value(F)
    text = (
        f"element={res.element} count={res.count} size={res.size} "
        f"satisfied={str(res.satisfied).lower()} g={g}"
    )
    report = {
        "element": res.element,
        "count": res.count,
        "size": res.size,
        "satisfied": res.satisfied,
        "strict": args.strict,
        "g": str(g),
    }
    _emit(args, text, report)
    return EXIT_OK


def cmd_iso(args) -> int:
    canon = canonical_iso_form(_load_input(args))
    _emit(args, format_family(canon), {"family": _family_report(canon)})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.all:
        names = list(CHECKS)
    elif args.target:
        names = VERIFY_TARGETS[args.target]
    else:
        raise UsageError("verify-paper needs a target or --all")
    results = run_checks(names, args.max_n, threads=args.threads)
    failed = [r for r in results if not r.passed]
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results]
    report = {
        "max_n": args.max_n,
        "passed": not failed,
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail, "case_report": r.report}
            for r in results
        ],
    }
    _emit(args, "\n".join(lines), report)
    return EXIT_VERIFY if failed else EXIT_OK


# -- parser ------------------------------------------------------------------


def _add_input(p):
    p.add_argument("family", nargs="?", help="family file (text format)")
    p.add_argument("--construct", choices=KINDS, help="build the input instead of reading a file")
    _add_params(p)


def _add_params(p):
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--base", help="base family file for the lifted construction")
    p.add_argument("--gen", help="up-set generators, e.g. '1 2; 2 3'")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unionclosure", description=__doc__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")
    parser.add_argument("-v", "--verbose", action="store_true")
    # the same options are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    simple = {
        "closure": (cmd_closure, "closure of a family (optionally iterated)"),
        "trace": (cmd_trace, "all iterated closures up to the power set"),
        "density": (cmd_density, "density, chain parameter and bound"),
        "s-param": (cmd_s_param, "chain parameter s(F)"),
        "root": (cmd_root, "closure-root test for a 1-dense family"),
        "frankl": (cmd_frankl, "most frequent element and threshold check"),
        "iso": (cmd_iso, "isomorphism canonical form"),
    }
    for name, (func, help_) in simple.items():
        p = sub.add_parser(name, help=help_, parents=[common])
        _add_input(p)
        p.set_defaults(func=func)
        if name == "closure":
            p.add_argument("--levels", type=int, default=1)
        if name == "frankl":
            p.add_argument("--strict", action="store_true", help="require 2*count >= |F|")

    p = sub.add_parser("construct", help="emit a named construction", parents=[common])
    p.add_argument("kind", choices=KINDS)
    _add_params(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("census", help="density census of all families over [n]", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("tree", help="closure tree over [n]", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", help="write 'child_id parent_id' lines to this file")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify-paper", help="run the verification suite", parents=[common])
    p.add_argument("target", nargs="?", choices=sorted(VERIFY_TARGETS))
    p.add_argument("--all", action="store_true")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DisagreementFound, CriterionMismatch) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (FamilyError, OSError) as exc:
        print(f"invalid input ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
