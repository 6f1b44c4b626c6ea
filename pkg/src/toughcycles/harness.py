"""Hypothesis presets, verdict evaluation, exhaustive enumeration and
stream-based counterexample search.

Every preset bundles a hypothesis list (checked cheapest-first with
short-circuit on failure) and a conclusion. Resource-guard trips surface as
'undecided', never as a false conclusion, and counterexamples are echoed as
graph6 for reproduction.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .cycles import (Cycle, all_longest_cycles_edge_dominating, circumference,
                     find_hamiltonian_cycle)
from .errors import Graph6Error, ResourceLimitError
from .graph import Graph, bits_list, parse_graph6, write_graph6
from .invariants import (independence_number, is_k_connected, is_t_tough,
                         min_degree, vertex_connectivity)
from .structure import is_p2_kp1_free, is_petersen

PRESET_IDS = (
    "THM_MAIN1",
    "THM_MAIN3",
    "PROBLEM_OTA_SANKA",
    "THM_A_OTA_SANKA",
    "THM_B_HU_WANG_SHEN",
    "THM_C_BIGALKE_JUNG",
    "PROBLEM_4_2",
)

_K_FREE = ("THM_C_BIGALKE_JUNG",)
_K_MIN_4 = ("THM_MAIN1", "THM_MAIN3")


@dataclass(frozen=True)
class HypothesisPreset:
    id: str
    k: int | None = None

    def __post_init__(self):
        if self.id not in PRESET_IDS:
            raise ValueError(f"unknown preset {self.id!r}; choose from {PRESET_IDS}")
        if self.id in _K_FREE:
            if self.k is not None:
                raise ValueError(f"{self.id} takes no k parameter")
        else:
            if self.k is None:
                raise ValueError(f"{self.id} requires k")
            if self.k < 2:
                raise ValueError(f"{self.id} requires k >= 2")
            if self.id in _K_MIN_4 and self.k < 4:
                raise ValueError(f"{self.id} requires k >= 4")


@dataclass
class EvalOptions:
    max_n_exhaustive: int = 24
    node_budget: int = 50_000_000
    cycle_cap: int = 200_000
    time_limit: float | None = None  # cooperative, per graph


@dataclass
class HypothesisCheck:
    name: str
    holds: bool | None  # None = undecided
    detail: dict = field(default_factory=dict)


@dataclass
class Verdict:
    graph6: str
    preset: str
    k: int | None
    hypotheses: list[HypothesisCheck]
    hypotheses_satisfied: bool | None
    conclusion_status: str  # held | failed | skipped | undecided
    conclusion_detail: dict
    counterexample: bool
    elapsed: float

    @property
    def undecided(self) -> bool:
        return self.hypotheses_satisfied is None or self.conclusion_status == "undecided"

    def to_dict(self, *, witnesses: bool = False, timings: bool = False) -> dict:
        hyps = []
        for h in self.hypotheses:
            entry = {"name": h.name, "holds": h.holds}
            detail = dict(h.detail)
            if not witnesses:
                detail.pop("witness", None)
            if detail:
                entry["detail"] = detail
            hyps.append(entry)
        conclusion = {"status": self.conclusion_status}
        detail = dict(self.conclusion_detail)
        if not witnesses:
            detail.pop("witness", None)
        conclusion.update(detail)
        out = {
            "type": "verdict",
            "graph6": self.graph6,
            "preset": self.preset,
            "k": self.k,
            "hypotheses": hyps,
            "hypotheses_satisfied": self.hypotheses_satisfied,
            "conclusion": conclusion,
            "counterexample": self.counterexample,
        }
        if timings:
            out["elapsed_seconds"] = self.elapsed
        return out


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _check_order(g: Graph, floor: int) -> tuple[bool, dict]:
    return g.n >= floor, {"required": floor, "actual": g.n}


def _check_min_degree(g: Graph, threshold: Fraction) -> tuple[bool, dict]:
    if g.n == 0:
        return False, {"required": _frac_str(threshold), "actual": None}
    delta = min_degree(g)
    return Fraction(delta) >= threshold, {"required": _frac_str(threshold), "actual": delta}


def _check_connectivity(g: Graph, k: int) -> tuple[bool, dict]:
    ok, cut = is_k_connected(g, k)
    detail: dict = {"required": k}
    if not ok and cut is not None:
        detail["witness"] = {"separating_set": bits_list(cut)}
    return ok, detail


def _check_freeness(g: Graph, k: int) -> tuple[bool, dict]:
    free, witness = is_p2_kp1_free(g, k)
    detail: dict = {"k": k}
    if witness is not None:
        detail["witness"] = {"edge": list(witness.edge),
                            "isolated": bits_list(witness.isolated_part)}
    return free, detail


def _check_tough(g: Graph, options: EvalOptions) -> tuple[bool, dict]:
    ok, cut = is_t_tough(g, 1, exhaustive_limit=options.max_n_exhaustive)
    detail: dict = {"t": "1/1"}
    if cut is not None:
        detail["witness"] = {"cut": bits_list(cut)}
    return ok, detail


def _check_alpha_vs_kappa(g: Graph) -> tuple[bool, dict]:
    kappa = vertex_connectivity(g)
    alpha, witness = independence_number(g)
    detail = {"alpha": alpha, "kappa": kappa,
              "witness": {"independent_set": bits_list(witness)}}
    return alpha <= kappa + 1, detail


def hypothesis_list(preset: HypothesisPreset) -> list[tuple[str, Callable]]:
    """(name, check) pairs in cheapest-first order for the preset."""
    k = preset.k
    out: list[tuple[str, Callable]] = []
    if preset.id == "THM_MAIN1":
        out.append((f"order>={k * k + k + 1}",
                    lambda g, o: _check_order(g, k * k + k + 1)))
        out.append((f"min_degree>={k}", lambda g, o: _check_min_degree(g, Fraction(k))))
        out.append((f"connectivity>={k - 1}", lambda g, o: _check_connectivity(g, k - 1)))
    elif preset.id in ("THM_MAIN3", "PROBLEM_4_2"):
        out.append((f"connectivity>={k - 1}", lambda g, o: _check_connectivity(g, k - 1)))
    elif preset.id == "PROBLEM_OTA_SANKA":
        out.append((f"connectivity>={k}", lambda g, o: _check_connectivity(g, k)))
    elif preset.id == "THM_A_OTA_SANKA":
        thr = Fraction(3 * k - 3, 2)
        out.append((f"min_degree>={_frac_str(thr)}",
                    lambda g, o: _check_min_degree(g, thr)))
        out.append((f"connectivity>={k}", lambda g, o: _check_connectivity(g, k)))
    elif preset.id == "THM_B_HU_WANG_SHEN":
        thr = Fraction(7 * k - 6, 5)
        out.append((f"min_degree>={_frac_str(thr)}",
                    lambda g, o: _check_min_degree(g, thr)))
        out.append((f"connectivity>={k}", lambda g, o: _check_connectivity(g, k)))
    elif preset.id == "THM_C_BIGALKE_JUNG":
        out.append(("connectivity>=3", lambda g, o: _check_connectivity(g, 3)))
        out.append(("alpha<=kappa+1", lambda g, o: _check_alpha_vs_kappa(g)))
    if preset.id != "THM_C_BIGALKE_JUNG":
        out.append((f"p2_kp1_free(k={k})", lambda g, o: _check_freeness(g, k)))
    out.append(("1_tough", _check_tough))
    return out


def conclusion_kind(preset: HypothesisPreset) -> str:
    if preset.id in ("THM_MAIN1", "PROBLEM_4_2"):
        return "hamiltonian"
    if preset.id == "THM_MAIN3":
        return "edge_dominating_longest_cycles"
    return "hamiltonian_or_petersen"


def _evaluate_conclusion(g: Graph, kind: str, options: EvalOptions) -> tuple[str, dict]:
    if kind == "hamiltonian":
        ham = find_hamiltonian_cycle(g, budget=options.node_budget)
        if ham is not None:
            return "held", {"witness": {"hamiltonian_cycle": list(ham.vertices)}}
        return "failed", {"circumference": circumference(g, budget=options.node_budget)}
    if kind == "hamiltonian_or_petersen":
        ham = find_hamiltonian_cycle(g, budget=options.node_budget)
        if ham is not None:
            return "held", {"branch": "hamiltonian",
                            "witness": {"hamiltonian_cycle": list(ham.vertices)}}
        if is_petersen(g):
            return "held", {"branch": "petersen"}
        return "failed", {"circumference": circumference(g, budget=options.node_budget)}
    if kind == "edge_dominating_longest_cycles":
        ok, violating = all_longest_cycles_edge_dominating(g, budget=options.node_budget)
        if ok:
            return "held", {}
        return "failed", {"witness": {"violating_longest_cycle": list(violating.vertices)}}
    raise ValueError(f"unknown conclusion kind {kind!r}")


def evaluate(g: Graph, preset: HypothesisPreset,
             options: EvalOptions | None = None) -> Verdict:
    """One Verdict: hypotheses cheapest-first with short-circuit on failure,
    conclusion only when all hypotheses hold, guard trips become undecided."""
    options = options or EvalOptions()
    start = time.perf_counter()
    deadline = None if options.time_limit is None else start + options.time_limit
    checks: list[HypothesisCheck] = []
    satisfied: bool | None = True
    for name, fn in hypothesis_list(preset):
        if deadline is not None and time.perf_counter() > deadline:
            checks.append(HypothesisCheck(name, None, {"undecided": "time limit"}))
            satisfied = None
            break
        try:
            holds, detail = fn(g, options)
        except ResourceLimitError as exc:
            holds, detail = None, {"undecided": str(exc)}
        checks.append(HypothesisCheck(name, holds, detail))
        if holds is False:
            satisfied = False
            break
        if holds is None:
            satisfied = None
    status = "skipped"
    conclusion_detail: dict = {}
    if satisfied is True:
        if deadline is not None and time.perf_counter() > deadline:
            status, conclusion_detail = "undecided", {"undecided": "time limit"}
        else:
            try:
                status, conclusion_detail = _evaluate_conclusion(
                    g, conclusion_kind(preset), options)
            except ResourceLimitError as exc:
                status, conclusion_detail = "undecided", {"undecided": str(exc)}
    counterexample = satisfied is True and status == "failed"
    return Verdict(
        graph6=write_graph6(g),
        preset=preset.id,
        k=preset.k,
        hypotheses=checks,
        hypotheses_satisfied=satisfied,
        conclusion_status=status,
        conclusion_detail=conclusion_detail,
        counterexample=counterexample,
        elapsed=time.perf_counter() - start,
    )


def enumerate_labeled_graphs(n: int, *, min_degree: int | None = None,
                             predicate: Callable[[Graph], bool] | None = None
                             ) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, exactly once (2^(n choose 2)
    graphs; exhaustive mode is capped at n = 7). Optional cheap prefilters
    run before the graph is yielded."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 7:
        raise ValueError(f"exhaustive enumeration capped at n=7 (asked {n})")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for edge_mask in range(1 << len(pairs)):
        rows = [0] * n
        m = edge_mask
        while m:
            b = m & -m
            m ^= b
            u, v = pairs[b.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if min_degree is not None and n and min(r.bit_count() for r in rows) < min_degree:
            continue
        g = Graph._unchecked(n, tuple(rows))
        if predicate is not None and not predicate(g):
            continue
        yield g


@dataclass
class SearchSummary:
    total: int = 0
    parse_errors: int = 0
    evaluated: int = 0
    hypotheses_met: int = 0
    conclusion_held: int = 0
    undecided: int = 0
    counterexamples: list[str] = field(default_factory=list)

    def update(self, verdict: Verdict) -> None:
        self.total += 1
        self.evaluated += 1
        if verdict.undecided:
            self.undecided += 1
            return
        if verdict.hypotheses_satisfied:
            self.hypotheses_met += 1
            if verdict.conclusion_status == "held":
                self.conclusion_held += 1
            elif verdict.counterexample:
                self.counterexamples.append(verdict.graph6)

    def record_error(self) -> None:
        self.total += 1
        self.parse_errors += 1

    def to_dict(self) -> dict:
        return {
            "type": "summary",
            "total": self.total,
            "parse_errors": self.parse_errors,
            "evaluated": self.evaluated,
            "hypotheses_met": self.hypotheses_met,
            "conclusion_held": self.conclusion_held,
            "counterexamples": len(self.counterexamples),
            "counterexample_graph6": list(self.counterexamples),
            "undecided": self.undecided,
        }


def _eval_line(args: tuple) -> tuple:
    index, line, preset, options = args
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return ("error", index, str(exc))
    verdict = evaluate(g, preset, options)
    return ("verdict", index, verdict)


def search(lines: Iterable[str], preset: HypothesisPreset, *,
           options: EvalOptions | None = None,
           workers: int = 1) -> Iterator[tuple]:
    """Evaluate every graph6 line; yields ('verdict', index, Verdict) or
    ('error', index, message) in input order. Blank and '#' comment lines
    are skipped. With workers > 1 a process pool evaluates graphs in
    parallel; re-sequencing keeps the output order identical."""
    options = options or EvalOptions()
    tasks = ((i, ln, preset, options) for i, ln in enumerate(lines, start=1)
             if ln.strip() and not ln.lstrip().startswith("#"))
    if workers <= 1:
        for task in tasks:
            yield _eval_line(task)
        return
    import multiprocessing

    with multiprocessing.Pool(workers) as pool:
        yield from pool.imap(_eval_line, tasks, chunksize=64)
