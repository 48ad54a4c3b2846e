"""``choosa`` command line: solvers, choosability checks and family sweeps.

Exit statuses: 0 success / yes, 1 no / uncolorable / failed check,
2 input error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import verify
from .choosability import (
    EnumerationCapExceeded,
    choice_number,
    default_cap,
    gamma_mu_choice_number,
    is_k_choosable,
    is_k_gamma_mu_choosable,
)
from .graph import (
    DimacsError,
    Graph,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_maximal_outerplanar,
    gen_petersen,
    gen_random_tree,
    parse_dimacs,
    write_dimacs,
)
from .lists import ListFormatError, format_lists, parse_lists
from .solvers import SolveOptions, chromatic_number, exists_list_coloring

OK, NO, INPUT_ERROR, CAP_EXCEEDED = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    status: int = OK
    graph: Graph | None = None
    list_kind: str | None = None
    seed: int | None = None
    payload: list[tuple[str, str]] = field(default_factory=list)
    body: str = ""
    elapsed: float = 0.0

    def add(self, key: str, value: object) -> None:
        self.payload.append((key, str(value)))

    def structured(self) -> str:
        """``key: value`` lines; identical across runs with the same inputs."""
        lines = [f"command: {self.command}", f"status: {self.status}"]
        if self.graph is not None:
            lines += [f"graph_n: {self.graph.n}", f"graph_m: {self.graph.m}"]
        if self.list_kind is not None:
            lines.append(f"list_kind: {self.list_kind}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines += [f"{k}: {v}" for k, v in self.payload]
        out = "\n".join(lines) + "\n"
        if self.body:
            out += self.body if self.body.endswith("\n") else self.body + "\n"
        return out


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> Graph:
    try:
        return parse_dimacs(_read(path))
    except DimacsError as exc:
        raise InputError(f"{path}: {exc}") from None


def format_coloring(f) -> str:
    return " ".join(f"{v}:{c}" for v, c in enumerate(f))


def cmd_solve(args) -> tuple[RunReport, str]:
    g = _graph(args.graph)
    try:
        lists = parse_lists(_read(args.lists), n=g.n)
    except ListFormatError as exc:
        raise InputError(f"{args.lists}: {exc}") from None
    report = RunReport("solve", graph=g, list_kind=lists.kind)
    f = exists_list_coloring(g, lists, SolveOptions(args.order))
    if f is None:
        report.status = NO
        report.add("result", "UNCOLORABLE")
        return report, "UNCOLORABLE\n"
    report.add("coloring", format_coloring(f))
    return report, format_coloring(f) + "\n"


def cmd_chromatic(args) -> tuple[RunReport, str]:
    g = _graph(args.graph)
    k, f = chromatic_number(g)
    report = RunReport("chromatic", graph=g)
    report.add("chromatic_number", k)
    report.add("coloring", format_coloring(f))
    return report, f"{k}\n{format_coloring(f)}\n"


def cmd_choosable(args) -> tuple[RunReport, str]:
    g = _graph(args.graph)
    if args.k < 1:
        raise InputError("k must be positive")
    common = dict(cap=args.cap, force=args.force)
    if args.mode == "interval":
        verdict = is_k_gamma_mu_choosable(g, args.k, args.offset_bound, strategy=args.strategy or "auto", **common)
    else:
        verdict = is_k_choosable(
            g, args.k, args.palette_budget, paper_palette=args.paper_palette,
            strategy=args.strategy or "memo", **common,
        )
    report = RunReport("choosable", status=OK if verdict.answer else NO, graph=g)
    report.add("answer", "YES" if verdict.answer else "NO")
    report.add("mode", verdict.mode)
    report.add("k", verdict.k)
    report.add("checked_count", verdict.checked_count)
    text = "YES\n" if verdict.answer else "NO\n"
    if verdict.witness is not None:
        report.body = format_lists(verdict.witness)
        text += report.body
    return report, text


def cmd_choice_number(args) -> tuple[RunReport, str]:
    g = _graph(args.graph)
    value = choice_number(
        g, args.k_max, color_budget=args.palette_budget, paper_palette=args.paper_palette,
        cap=args.cap, force=args.force,
    )
    report = RunReport("choice-number", graph=g, status=OK if value is not None else NO)
    report.add("choice_number", value if value is not None else "not found")
    return report, f"{report.payload[-1][1]}\n"


def cmd_gm_choice_number(args) -> tuple[RunReport, str]:
    g = _graph(args.graph)
    kwargs = {} if args.fast else dict(offset_bound=args.offset_bound, cap=args.cap, force=args.force)
    value = gamma_mu_choice_number(g, fast=args.fast, **kwargs)
    report = RunReport("gm-choice-number", graph=g)
    report.add("method", "chromatic" if args.fast else "enumeration")
    report.add("gm_choice_number", value)
    return report, f"{value}\n"


def cmd_generate(args) -> tuple[RunReport, str]:
    p, seed = args.params, args.seed

    def need(count: int) -> list[int]:
        if len(p) != count:
            raise InputError(f"{args.family} takes {count} integer parameter(s)")
        return p

    family = args.family
    try:
        if family == "cycle":
            g = gen_cycle(*need(1))
        elif family == "complete":
            g = gen_complete(*need(1))
        elif family == "complete-bipartite":
            g = gen_complete_bipartite(*need(2))
        elif family == "tree":
            g = gen_random_tree(*need(1), seed)
        elif family == "outerplanar":
            g = gen_maximal_outerplanar(*need(1), seed, drop=args.drop)
        else:
            need(0)
            g = gen_petersen()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = RunReport("generate", graph=g, seed=seed if family in ("tree", "outerplanar") else None)
    report.add("family", family)
    report.body = write_dimacs(g)
    return report, report.body


def cmd_verify_theorems(args) -> tuple[RunReport, str]:
    rows = verify.run(args.scope, seed=args.seed)
    passed = sum(r.passed for r in rows)
    report = RunReport("verify-theorems", status=OK if passed == len(rows) else NO, seed=args.seed)
    report.add("scope", args.scope)
    report.add("passed", passed)
    report.add("total", len(rows))
    report.body = "\n".join(r.line() for r in rows) + "\n"
    return report, report.body + f"{passed}/{len(rows)} checks passed\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="choosa", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def enum_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cap", type=int, default=None, help="enumeration cap (default $CHOOSA_CAP or 1e8)")
        p.add_argument("--force", action="store_true", help="ignore the enumeration cap")

    p = sub.add_parser("solve", help="find a list coloring")
    p.add_argument("graph")
    p.add_argument("lists")
    p.add_argument("--order", choices=("given", "most-constrained-first"), default="given")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("chromatic", help="chromatic number with a witness")
    p.add_argument("graph")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("choosable", help="decide k-choosability")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--mode", choices=("general", "interval"), default="general")
    p.add_argument("--palette-budget", type=int, default=None)
    p.add_argument("--paper-palette", action="store_true")
    p.add_argument("--offset-bound", type=int, default=None)
    p.add_argument("--strategy", choices=("memo", "exhaustive", "compressed", "auto"), default=None)
    enum_flags(p)
    p.set_defaults(func=cmd_choosable)

    p = sub.add_parser("choice-number", help="least k with k-choosability")
    p.add_argument("graph")
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--palette-budget", type=int, default=None)
    p.add_argument("--paper-palette", action="store_true")
    enum_flags(p)
    p.set_defaults(func=cmd_choice_number)

    p = sub.add_parser("gm-choice-number", help="least k with interval-list choosability")
    p.add_argument("graph")
    p.add_argument("--fast", action="store_true", help="report the chromatic number instead of enumerating")
    p.add_argument("--offset-bound", type=int, default=None)
    enum_flags(p)
    p.set_defaults(func=cmd_gm_choice_number)

    p = sub.add_parser("generate", help="write a graph family member as DIMACS")
    p.add_argument("family", choices=("cycle", "complete", "complete-bipartite", "tree", "outerplanar", "petersen"))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--drop", type=float, default=0.0, help="outerplanar: edge deletion probability")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify-theorems", help="run the graph-family checks")
    p.add_argument("--scope", choices=("all",) + verify.SCOPES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_theorems)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, text = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except EnumerationCapExceeded as exc:
        print(f"error: {exc} (estimated size {exc.size}, cap {exc.cap}; use --force or --cap)", file=sys.stderr)
        return CAP_EXCEEDED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    report.elapsed = time.perf_counter() - start
    if args.format == "structured":
        sys.stdout.write(report.structured())
    else:
        sys.stdout.write(text)
        print(f"# {report.command} finished in {report.elapsed:.3f}s", file=sys.stderr)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
