"""Command-line front end: analyze, verify, replay, search, gen.

Graphs travel as graph6 lines (stdin or file; '#' comments ignored).
Verdict streams are JSON-lines with a final summary object; exact rationals
render as "p/q" (or "inf"). Every flag can be defaulted through an
environment variable with the TOUGHCYCLES_ prefix, e.g. TOUGHCYCLES_WORKERS.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import IO, Iterable

from . import generators, harness, proof_replay
from .cycles import find_hamiltonian_cycle, find_longest_cycle
from .errors import Graph6Error, ResourceLimitError
from .graph import Graph, bits_list, parse_graph6, write_graph6
from .invariants import (format_rational, independence_number, min_degree,
                         toughness, vertex_connectivity)
from .structure import is_p2_kp1_free, is_petersen

ENV_PREFIX = "TOUGHCYCLES_"


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name, default)


def _env_int(name: str, default: int) -> int:
    raw = _env(name)
    return default if raw is None else int(raw)


def _env_flag(name: str) -> bool:
    raw = _env(name)
    return raw is not None and raw.strip().lower() not in ("", "0", "false", "no")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--witnesses", action="store_true",
                        default=_env_flag("WITNESSES"),
                        help="include witness objects in the output")
    parser.add_argument("--timings", action="store_true",
                        help="include wall times (breaks byte-identical output)")
    parser.add_argument("--max-n-exhaustive", type=int,
                        default=_env_int("MAX_N_EXHAUSTIVE", 24),
                        help="vertex cap for exhaustive toughness scans")
    parser.add_argument("--time-limit-per-graph", type=float,
                        default=(float(_env("TIME_LIMIT_PER_GRAPH"))
                                 if _env("TIME_LIMIT_PER_GRAPH") else None),
                        help="cooperative per-graph time limit in seconds")
    parser.add_argument("--node-budget", type=int,
                        default=_env_int("NODE_BUDGET", 50_000_000),
                        help="search-node budget for cycle solvers")


def _add_stream_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", required=_env("PRESET") is None,
                        default=_env("PRESET"), choices=harness.PRESET_IDS)
    parser.add_argument("--k", type=int,
                        default=(int(_env("K")) if _env("K") else None))
    parser.add_argument("--format", choices=("jsonl", "csv"),
                        default=_env("FORMAT", "jsonl"))
    parser.add_argument("--workers", type=int, default=_env_int("WORKERS", 1))
    parser.add_argument("--strict", action="store_true", default=_env_flag("STRICT"),
                        help="exit 1 when any input line fails to parse")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toughcycles",
        description="Exact toughness / hamiltonicity analysis and theorem "
                    "verification on small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="report exact invariants per input graph")
    p_an.add_argument("input", nargs="?", default="-")
    p_an.add_argument("--k", type=int, default=None,
                      help="also report (P2 u kP1)-freeness for this k")
    _add_common(p_an)

    p_ver = sub.add_parser("verify", help="evaluate a preset over a graph6 stream")
    p_ver.add_argument("input", nargs="?", default="-")
    _add_stream_flags(p_ver)
    _add_common(p_ver)

    p_rep = sub.add_parser("replay", help="claim-by-claim replay of the "
                                          "longest-cycle exchange argument")
    p_rep.add_argument("input", nargs="?", default="-")
    p_rep.add_argument("--k", type=int, required=_env("K") is None,
                       default=(int(_env("K")) if _env("K") else None))
    _add_common(p_rep)

    p_sea = sub.add_parser("search", help="generate graphs internally and hunt "
                                          "for counterexamples")
    src = p_sea.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", type=int, metavar="N",
                     help="all labeled graphs on N vertices (N <= 7)")
    src.add_argument("--gnp", nargs=3, metavar=("N", "P", "COUNT"),
                     help="COUNT seeded G(N, P) samples, P exact like 1/2")
    p_sea.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    _add_stream_flags(p_sea)
    _add_common(p_sea)

    p_gen = sub.add_parser("gen", help="emit graph6 lines for a named family")
    p_gen.add_argument("family",
                       choices=("petersen", "complete", "cycle", "path",
                                "complete_multipartite", "p2kp1", "gnp"))
    p_gen.add_argument("params", nargs="*",
                       help="family parameters, e.g. 'complete 4' or 'gnp 10 1/2'")
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    return parser


def _open_lines(path: str, stdin: IO) -> Iterable[str]:
    if path == "-":
        return stdin
    return open(path, "r", encoding="ascii")


def _iter_graph_lines(stream: Iterable[str]):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _analyze_one(g: Graph, k: int | None, args) -> dict:
    out: dict = {"graph6": write_graph6(g), "n": g.n, "m": g.edge_count()}
    undecided: list[str] = []
    witnesses: dict = {}
    try:
        tough = toughness(g, exhaustive_limit=args.max_n_exhaustive)
        out["tau"] = format_rational(tough.value)
        if tough.witness_cut is not None:
            witnesses["tough_cut"] = bits_list(tough.witness_cut)
    except ResourceLimitError:
        out["tau"] = None
        undecided.append("tau")
    out["kappa"] = vertex_connectivity(g)
    alpha, alpha_witness = independence_number(g)
    out["alpha"] = alpha
    witnesses["independent_set"] = bits_list(alpha_witness)
    out["delta"] = min_degree(g) if g.n else None
    try:
        ham = find_hamiltonian_cycle(g, budget=args.node_budget)
        out["hamiltonian"] = ham is not None
        if ham is not None:
            witnesses["hamiltonian_cycle"] = list(ham.vertices)
        longest = find_longest_cycle(g, budget=args.node_budget)
        out["circumference"] = 0 if longest is None else len(longest)
        if longest is not None:
            witnesses["longest_cycle"] = list(longest.vertices)
    except ResourceLimitError:
        out["hamiltonian"] = None
        out["circumference"] = None
        undecided.append("cycles")
    out["is_petersen"] = is_petersen(g)
    if k is not None:
        free, fw = is_p2_kp1_free(g, k)
        out[f"p2_kp1_free_k{k}"] = free
        if fw is not None:
            witnesses["forbidden_pattern"] = {"edge": list(fw.edge),
                                              "isolated": bits_list(fw.isolated_part)}
    if undecided:
        out["undecided"] = undecided
    if args.witnesses:
        out["witnesses"] = witnesses
    return out


def cmd_analyze(args, stdin, stdout, stderr) -> int:
    failed = False
    stream = _open_lines(args.input, stdin)
    for lineno, line in _iter_graph_lines(stream):
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            print(f"line {lineno}: {exc}", file=stderr)
            failed = True
            continue
        print(json.dumps(_analyze_one(g, args.k, args)), file=stdout)
    return 1 if failed else 0


def _make_options(args) -> harness.EvalOptions:
    return harness.EvalOptions(
        max_n_exhaustive=args.max_n_exhaustive,
        node_budget=args.node_budget,
        time_limit=args.time_limit_per_graph,
    )


def _run_stream(lines, args, stdout, stderr) -> int:
    preset = harness.HypothesisPreset(
        args.preset, None if args.preset == "THM_C_BIGALKE_JUNG" else args.k)
    options = _make_options(args)
    summary = harness.SearchSummary()
    parse_failed = False
    csv_mode = args.format == "csv"
    if csv_mode:
        print("graph6,preset,k,hypotheses_satisfied,conclusion,counterexample",
              file=stdout)
    for kind, index, payload in harness.search(lines, preset, options=options,
                                               workers=args.workers):
        if kind == "error":
            summary.record_error()
            parse_failed = True
            print(f"line {index}: {payload}", file=stderr)
            continue
        verdict = payload
        summary.update(verdict)
        if csv_mode:
            k_str = "" if verdict.k is None else str(verdict.k)
            print(f"{verdict.graph6},{verdict.preset},{k_str},"
                  f"{verdict.hypotheses_satisfied},{verdict.conclusion_status},"
                  f"{str(verdict.counterexample).lower()}", file=stdout)
        else:
            print(json.dumps(verdict.to_dict(witnesses=args.witnesses,
                                             timings=args.timings)), file=stdout)
    if csv_mode:
        print(json.dumps(summary.to_dict()), file=stderr)
    else:
        print(json.dumps(summary.to_dict()), file=stdout)
    if summary.counterexamples:
        return 2
    if parse_failed and args.strict:
        return 1
    return 0


def cmd_verify(args, stdin, stdout, stderr) -> int:
    stream = _open_lines(args.input, stdin)
    return _run_stream((ln for _, ln in _iter_graph_lines(stream)), args, stdout, stderr)


def cmd_search(args, stdin, stdout, stderr) -> int:
    if args.exhaustive is not None:
        lines = (write_graph6(g)
                 for g in harness.enumerate_labeled_graphs(args.exhaustive))
    else:
        n_str, p_str, count_str = args.gnp
        n, count = int(n_str), int(count_str)
        p = generators.coerce_probability(p_str)
        import random as _random
        rng = _random.Random(args.seed)
        lines = (write_graph6(generators.random_graph(n, p, 0, rng=rng))
                 for _ in range(count))
    return _run_stream(lines, args, stdout, stderr)


def cmd_replay(args, stdin, stdout, stderr) -> int:
    if args.k < 2:
        print("replay requires --k >= 2", file=stderr)
        return 1
    failed = False
    stream = _open_lines(args.input, stdin)
    for lineno, line in _iter_graph_lines(stream):
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            print(f"line {lineno}: {exc}", file=stderr)
            failed = True
            continue
        try:
            result = proof_replay.replay(g, args.k, budget=args.node_budget)
        except ResourceLimitError as exc:
            print(json.dumps({"graph6": line, "status": "undecided",
                              "detail": str(exc)}), file=stdout)
            continue
        payload = {"graph6": write_graph6(g)}
        payload.update(result.to_dict())
        print(json.dumps(payload), file=stdout)
    return 1 if failed else 0


def cmd_gen(args, stdin, stdout, stderr) -> int:
    fam = args.family
    params = args.params
    try:
        if fam == "petersen":
            graphs = [generators.petersen()]
        elif fam == "complete":
            graphs = [generators.complete(int(params[0]))]
        elif fam == "cycle":
            graphs = [generators.cycle_graph(int(params[0]))]
        elif fam == "path":
            graphs = [generators.path_graph(int(params[0]))]
        elif fam == "complete_multipartite":
            graphs = [generators.complete_multipartite([int(p) for p in params])]
        elif fam == "p2kp1":
            graphs = [generators.p2_kp1(int(params[0]))]
        elif fam == "gnp":
            n = int(params[0])
            p = generators.coerce_probability(params[1])
            import random as _random
            rng = _random.Random(args.seed)
            graphs = [generators.random_graph(n, p, 0, rng=rng)
                      for _ in range(args.count)]
        else:  # pragma: no cover - argparse restricts choices
            raise ValueError(f"unknown family {fam}")
    except (IndexError, ValueError) as exc:
        print(f"gen {fam}: bad parameters {params}: {exc}", file=stderr)
        return 1
    for g in graphs:
        print(write_graph6(g), file=stdout)
    return 0


_COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "replay": cmd_replay,
    "search": cmd_search,
    "gen": cmd_gen,
}


def main(argv: list[str] | None = None, stdin: IO | None = None,
         stdout: IO | None = None, stderr: IO | None = None) -> int:
    args = build_parser().parse_args(argv)
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        return _COMMANDS[args.command](args, stdin, stdout, stderr)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
