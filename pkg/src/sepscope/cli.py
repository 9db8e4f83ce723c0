"""Command-line front end.

Exit status: 0 when the pattern is absent or the command succeeded, 1 when a
pattern is present (or an experiment check failed), 2 on any error,
including an exhausted search budget.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import BudgetExceeded, CapabilityError, GraphInputError, ParameterError
from .formats import encode_graph6, format_edgelist, parse_graph6, parse_graphs, to_dot
from .generators import FAMILIES, FamilySpec
from .graph import Graph, named
from .lab import EXPERIMENTS, ExperimentSpec, run_dichotomy_table, run_feral_growth, run_oracle_equivalence, run_tame_profile
from .minsep import count_minimal_separators, enumerate_minimal_separators
from .oracle import contains_induced_minor, contains_induced_subgraph, contains_induced_topological_minor, feedback_vertex_number
from .recognition import (
    INDUCED_MINOR,
    INDUCED_TOPOLOGICAL_MINOR,
    RECOGNIZERS,
    classify_dichotomy,
    witness_model,
    witness_vertices,
)
from .subroutines import DEFAULT_BUDGET

PATTERN_RELATION = {
    "house-im": (INDUCED_MINOR, "house"),
    "house-itm": (INDUCED_TOPOLOGICAL_MINOR, "house"),
    "butterfly-im": (INDUCED_MINOR, "butterfly"),
    "2p2-itm": (INDUCED_TOPOLOGICAL_MINOR, "2P2"),
}


class CliError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("graph6", "edgelist"), default=None, help="input/output graph format (input default: detect)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget for pruned searches")
    p.add_argument("--cap", type=int, default=None, help="cap on enumerated minimal separators")
    p.add_argument("--out", type=Path, default=None, help="write the main output here instead of stdout")
    p.add_argument("--witness", type=Path, default=None, help="write witnesses/certificates here")
    p.add_argument("--dot", type=Path, default=None, help="write a DOT rendering here")
    return p


def _read_input(path: str, fmt: Optional[str]) -> list[Graph]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None
    graphs = parse_graphs(text, fmt)
    if not graphs:
        raise CliError(f"no graphs in {path}")
    return graphs


def _pattern_graph(text: str) -> Graph:
    try:
        return named(text)
    except (KeyError, ValueError, ParameterError):
        return parse_graph6(text)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _write_graph(g: Graph, fmt: Optional[str]) -> str:
    return format_edgelist(g) if fmt == "edgelist" else encode_graph6(g) + "\n"


# --- subcommands --------------------------------------------------------------

def cmd_recognize(args) -> int:
    graphs = _read_input(args.input, args.format)
    relation, pname = PATTERN_RELATION[args.pattern]
    recognize = RECOGNIZERS[args.pattern]
    status = 0
    lines, certs = [], []
    dot_done = False
    for g in graphs:
        gid = encode_graph6(g)
        verdict = recognize(g, args.budget)
        line = f"{gid} {relation} {pname} {'present' if verdict else 'absent'}"
        if verdict:
            status = 1
            w = verdict.witness
            vs = sorted(witness_vertices(w))
            line += f" {w.kind}:{','.join(map(str, vs))}"
            certs.append(f"# graph {gid}\nkind {w.kind}\nvertices {' '.join(map(str, vs))}\nmodel {pname}\n{witness_model(g, w).to_text()}")
            if args.dot and not dot_done:
                args.dot.write_text(to_dot(g, highlight=vs))
                dot_done = True
        lines.append(line)
    if args.dot and not dot_done:
        args.dot.write_text(to_dot(graphs[0]))
    if args.witness:
        args.witness.write_text("".join(certs))
    _emit("\n".join(lines) + "\n", args.out)
    return status


def cmd_generate(args) -> int:
    g = FamilySpec(args.family, tuple(args.params)).build()
    print(g.n, g.m)
    body = _write_graph(g, args.format)
    if args.out is None:
        sys.stdout.write(body)
    else:
        args.out.write_text(body)
    if args.dot:
        args.dot.write_text(to_dot(g, name=args.family.replace("-", "_")))
    return 0


def cmd_minsep(args) -> int:
    graphs = _read_input(args.input, args.format)
    out = []
    for g in graphs:
        gid = encode_graph6(g)
        if args.list:
            report = enumerate_minimal_separators(g, args.cap)
            out.append(f"{gid} {report.count}")
            out += ["  {" + ", ".join(map(str, sorted(s))) + "}" for s in report.separators]
        else:
            res = count_minimal_separators(g, args.cap)
            out.append(f"{gid} {res.count}" + (" capped" if res.exceeded else ""))
    _emit("\n".join(out) + "\n", args.out)
    return 0


def cmd_oracle(args) -> int:
    graphs = _read_input(args.input, args.format)
    out, certs, status = [], [], 0
    for g in graphs:
        gid = encode_graph6(g)
        if args.relation == "fvs":
            out.append(f"{gid} fvs {feedback_vertex_number(g)}")
            continue
        if args.pattern is None:
            raise CliError("--pattern is required for containment relations")
        h = _pattern_graph(args.pattern)
        if args.relation == "induced-subgraph":
            found = contains_induced_subgraph(g, h)
            cert = None if found is None else "".join(f"{v}: {{{x}}}\n" for v, x in enumerate(found))
        elif args.relation == INDUCED_MINOR:
            found = contains_induced_minor(g, h)
            cert = None if found is None else found.to_text()
        else:
            found = contains_induced_topological_minor(g, h)
            cert = None if found is None else found.to_model().to_text()
        present = found is not None
        status |= present
        out.append(f"{gid} {args.relation} {args.pattern} {'present' if present else 'absent'}")
        if present:
            certs.append(f"# graph {gid}\n{cert}")
    if args.witness:
        args.witness.write_text("".join(certs))
    _emit("\n".join(out) + "\n", args.out)
    return int(status)


def cmd_dichotomy(args) -> int:
    if args.pattern is None:
        text, rows = run_dichotomy_table(ExperimentSpec("dichotomy-table", seed=args.seed), args.max_n)
        _emit(text, args.out)
        return 0 if all(r.lemma_ok for r in rows) else 1
    h = _pattern_graph(args.pattern)
    lines = []
    for rel in (INDUCED_MINOR, INDUCED_TOPOLOGICAL_MINOR):
        d = classify_dichotomy(h, rel)
        because = f" (induced subgraph of {d.justification})" if d.justification else ""
        lines.append(f"{encode_graph6(h)} {rel} {d.verdict}{because}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_experiment(args) -> int:
    fields = dict(
        experiment=args.experiment,
        seed=args.seed,
        budget=args.budget,
        workers=args.workers,
        timings=args.timings,
        connected_only=args.connected_only,
    )
    for name in ("family", "k_min", "k_max", "n_min", "n_max", "samples", "exhaustive_max_n"):
        v = getattr(args, name)
        if v is not None:
            fields[name] = v
    if args.cap is not None:
        fields["cap"] = args.cap
    spec = ExperimentSpec(**fields)

    if spec.experiment == "feral-growth":
        res = run_feral_growth(spec)
        _emit(res.csv, args.out)
        for v in res.violations:
            print(f"ratio violation: {v}", file=sys.stderr)
        return 1 if res.violations else 0
    if spec.experiment == "tame-profile":
        prof = run_tame_profile(spec)
        _emit(prof.csv, args.out)
        if args.rows:
            args.rows.write_text(prof.rows_csv)
        return 0
    if spec.experiment == "dichotomy-table":
        text, rows = run_dichotomy_table(spec)
        _emit(text, args.out)
        return 0 if all(r.lemma_ok for r in rows) else 1
    report = run_oracle_equivalence(spec)
    _emit("\n".join(report.lines()) + "\n", args.out)
    return 0 if report.passed else 1


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="sepscope", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="run a polynomial-time recognizer")
    p.add_argument("input", help="graph file (graph6 lines or an edge list), or - for stdin")
    p.add_argument("--pattern", required=True, choices=sorted(RECOGNIZERS))
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("generate", parents=[common], help="build a graph family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("minsep", parents=[common], help="count or list minimal separators")
    p.add_argument("input")
    p.add_argument("--list", action="store_true", help="print every separator")
    p.set_defaults(func=cmd_minsep)

    p = sub.add_parser("oracle", parents=[common], help="brute-force containment or fvs")
    p.add_argument("input")
    p.add_argument("--relation", default=INDUCED_MINOR, choices=("induced-subgraph", INDUCED_MINOR, INDUCED_TOPOLOGICAL_MINOR, "fvs"))
    p.add_argument("--pattern", help="named pattern (house, P4, K_{2,3}, ...) or a graph6 string")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dichotomy", parents=[common], help="tame/feral verdict for a pattern, or the full table")
    p.add_argument("--pattern", help="named pattern or graph6 string; omit for the table")
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_dichotomy)

    p = sub.add_parser("experiment", parents=[common], help="run a lab experiment, CSV out")
    p.add_argument("experiment", choices=EXPERIMENTS)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--exhaustive-max-n", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="add per-stage wall-time columns (breaks byte-identical reruns)")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--rows", type=Path, help="tame-profile: also write the per-graph rows CSV")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"sepscope: budget exhausted: {exc}", file=sys.stderr)
    except (CliError, GraphInputError, ParameterError, CapabilityError, ValueError, OSError) as exc:
        print(f"sepscope: error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
