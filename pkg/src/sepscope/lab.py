"""Experiment harness: feral growth, tame profiles, oracle sweeps, dichotomy table.

All outputs are CSV text starting with a ``#sepscope-csv v1`` header line
that records the experiment parameters, including the seed.  Rows are
emitted in input order and contain no timing data unless asked for, so a
rerun with the same spec is byte-identical.
"""
from __future__ import annotations

import csv
import io
import itertools
import random
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .errors import BudgetExceeded, ModelError
from .formats import encode_graph6, parse_graph6
from .generators import FamilySpec
from .graph import Graph, is_connected, is_isomorphic, relabel
from .minsep import count_minimal_separators
from .oracle import contains_induced_minor, contains_induced_topological_minor
from .recognition import (
    BUTTERFLY,
    HOUSE,
    INDUCED_MINOR,
    INDUCED_TOPOLOGICAL_MINOR,
    MAXIMAL_TAME,
    RECOGNIZERS,
    Verdict,
    classify_dichotomy,
    validate_witness,
    witness_model,
)
from .subroutines import DEFAULT_BUDGET

CSV_VERSION = "#sepscope-csv v1"
EXPERIMENTS = ("feral-growth", "tame-profile", "dichotomy-table", "oracle-equivalence")


@dataclass(frozen=True)
class ExperimentSpec:
    experiment: str
    family: str = "theta"
    k_min: int = 3
    k_max: int = 8
    n_min: int = 7
    n_max: int = 11
    samples: int = 100
    exhaustive_max_n: int = 6
    seed: int = 0
    cap: int = 100_000
    budget: int = DEFAULT_BUDGET
    probabilities: tuple[float, ...] = (0.2, 0.35, 0.5)
    filters: tuple[str, ...] = ("butterfly-im", "house-itm")
    recognizers: tuple[str, ...] = ("house-im", "house-itm", "butterfly-im")
    workers: int = 1
    timings: bool = False
    connected_only: bool = False

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"experiment must be one of {', '.join(EXPERIMENTS)}")
        if self.k_min > self.k_max or self.n_min > self.n_max:
            raise ValueError("parameter ranges must be nonempty")
        if self.samples < 0 or not self.probabilities:
            raise ValueError("need a non-negative sample count and at least one edge probability")

    def header(self) -> str:
        keys = ["experiment", "seed"]
        if self.experiment == "feral-growth":
            keys += ["family", "k_min", "k_max", "cap"]
        elif self.experiment == "tame-profile":
            keys += ["n_min", "n_max", "samples", "probabilities", "connected_only", "filters", "cap"]
        elif self.experiment == "oracle-equivalence":
            keys += ["exhaustive_max_n", "n_min", "n_max", "samples", "probabilities", "connected_only", "recognizers"]
        parts = []
        for k in keys:
            v = getattr(self, k)
            if isinstance(v, tuple):
                v = ",".join(str(x) for x in v)
            parts.append(f"{k}={v}")
        return f"{CSV_VERSION} " + " ".join(parts)


def _csv_text(header: str, columns: Sequence[str], rows: Iterable[Sequence[object]], seed: int) -> str:
    buf = io.StringIO()
    buf.write(header + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow((*columns, "seed"))
    for row in rows:
        writer.writerow((*row, seed))
    return buf.getvalue()


def _ordered_map(fn: Callable, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# --- corpora ------------------------------------------------------------------

def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_corpus(
    seed: int,
    n_min: int,
    n_max: int,
    count: int,
    probabilities: Sequence[float],
    connected_only: bool = False,
) -> list[Graph]:
    """``count`` graphs, n uniform in [n_min, n_max], edge probability cycling.

    With ``connected_only`` a disconnected draw is discarded and redrawn.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(n_min, n_max)
        p = probabilities[i % len(probabilities)]
        g = random_graph(rng, n, p)
        while connected_only and not is_connected(g):
            g = random_graph(rng, n, p)
        out.append(g)
    return out


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[k] for k in range(len(pairs)) if code >> k & 1])


def canonical_graph6(g: Graph) -> str:
    """Least graph6 string over all relabellings (small graphs only)."""
    return min(encode_graph6(relabel(g, p)) for p in itertools.permutations(range(g.n)))


def graphs_up_to_isomorphism(max_n: int, min_n: int = 1) -> list[Graph]:
    """One representative per isomorphism class, sorted by (n, m, canonical graph6)."""
    reps: list[Graph] = []
    for n in range(min_n, max_n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        for g in all_labeled_graphs(n):
            key = (g.m, tuple(sorted(g.degrees())))
            bucket = buckets.setdefault(key, [])
            if not any(is_isomorphic(g, h) is not None for h in bucket):
                bucket.append(g)
        reps.extend(parse_graph6(canonical_graph6(g)) for b in buckets.values() for g in b)
    reps.sort(key=lambda g: (g.n, g.m, encode_graph6(g)))
    return reps


# --- feral growth -------------------------------------------------------------

@dataclass(frozen=True)
class FeralGrowthResult:
    csv: str
    counts: tuple[int, ...]
    violations: tuple[str, ...]


def run_feral_growth(spec: ExperimentSpec) -> FeralGrowthResult:
    """Minimal separator counts along a family; theta and prism must at least double per step."""
    assert_growth = spec.family in ("theta", "prism")
    rows, counts, violations = [], [], []
    prev: Optional[int] = None
    for k in range(spec.k_min, spec.k_max + 1):
        g = FamilySpec(spec.family, (k,)).build()
        res = count_minimal_separators(g, spec.cap)
        ratio = "" if prev is None or prev == 0 else f"{res.count / prev:.6f}"
        ok = ""
        if assert_growth and prev is not None:
            good = not res.exceeded and res.count > prev and res.count >= 2 * prev
            ok = "yes" if good else "no"
            if not good:
                violations.append(f"{spec.family} k={k}: {res.count} after {prev}")
        rows.append((spec.family, k, g.n, g.m, res.count, "yes" if res.exceeded else "no", ratio, ok))
        counts.append(res.count)
        prev = res.count
    text = _csv_text(
        spec.header(),
        ("family", "k", "n", "m", "separators", "capped", "ratio", "ratio_ge_2"),
        rows,
        spec.seed,
    )
    return FeralGrowthResult(text, tuple(counts), tuple(violations))


# --- tame profile -------------------------------------------------------------

@dataclass(frozen=True)
class CorpusRow:
    graph_id: str
    n: int
    m: int
    verdicts: dict[str, bool]
    separators: int
    capped: bool
    seconds: dict[str, float] = field(default_factory=dict)


def _profile_row(args: tuple[Graph, tuple[str, ...], int, int]) -> CorpusRow:
    g, names, cap, budget = args
    verdicts, seconds = {}, {}
    for name in names:
        t0 = time.perf_counter()
        verdicts[name] = bool(RECOGNIZERS[name](g, budget))
        seconds[name] = time.perf_counter() - t0
    t0 = time.perf_counter()
    sep = count_minimal_separators(g, cap)
    seconds["minsep"] = time.perf_counter() - t0
    return CorpusRow(encode_graph6(g), g.n, g.m, verdicts, sep.count, sep.exceeded, seconds)


@dataclass(frozen=True)
class TameProfileResult:
    csv: str
    rows_csv: str
    rows: tuple[CorpusRow, ...]


def run_tame_profile(spec: ExperimentSpec) -> TameProfileResult:
    """Per n: the largest separator count among random graphs free of each filter pattern.

    The unfiltered corpus is reported alongside as contrast.  Report only:
    no growth rate is asserted.
    """
    graphs = []
    for n in range(spec.n_min, spec.n_max + 1):
        graphs += random_corpus(spec.seed * 1_000_003 + n, n, n, spec.samples, spec.probabilities, spec.connected_only)
    rows = _ordered_map(_profile_row, [(g, spec.filters, spec.cap, spec.budget) for g in graphs], spec.workers)

    summary = []
    for n in range(spec.n_min, spec.n_max + 1):
        at_n = [r for r in rows if r.n == n]
        for corpus in ("all", *(f"{f}-free" for f in spec.filters)):
            kept = at_n if corpus == "all" else [r for r in at_n if not r.verdicts[corpus[:-5]]]
            best = max((r.separators for r in kept), default=0)
            capped = any(r.capped for r in kept)
            summary.append((n, corpus, len(kept), best, "yes" if capped else "no"))
    text = _csv_text(spec.header(), ("n", "corpus", "kept", "max_separators", "capped"), summary, spec.seed)

    cols = ["graph6", "n", "m", *spec.filters, "separators", "capped"]
    if spec.timings:
        cols += [f"seconds_{s}" for s in (*spec.filters, "minsep")]
    detail = []
    for r in rows:
        line = [r.graph_id, r.n, r.m, *("present" if r.verdicts[f] else "absent" for f in spec.filters), r.separators, "yes" if r.capped else "no"]
        if spec.timings:
            line += [f"{r.seconds[s]:.6f}" for s in (*spec.filters, "minsep")]
        detail.append(line)
    rows_text = _csv_text(spec.header() + " table=rows", cols, detail, spec.seed)
    return TameProfileResult(text, rows_text, tuple(rows))


def replay_rows(rows_csv: str, budget: int = DEFAULT_BUDGET) -> list[str]:
    """Recompute every recognizer verdict in a rows CSV; list the mismatches."""
    lines = [ln for ln in rows_csv.splitlines() if not ln.startswith("#")]
    reader = csv.DictReader(lines)
    names = [c for c in (reader.fieldnames or []) if c in RECOGNIZERS]
    problems = []
    for row in reader:
        g = parse_graph6(row["graph6"])
        for name in names:
            got = "present" if RECOGNIZERS[name](g, budget) else "absent"
            if got != row[name]:
                problems.append(f"{row['graph6']} {name}: recorded {row[name]}, replay {got}")
        sep = count_minimal_separators(g)
        if row["capped"] == "no" and str(sep.count) != row["separators"]:
            problems.append(f"{row['graph6']} separators: recorded {row['separators']}, replay {sep.count}")
    return problems


# --- oracle equivalence -------------------------------------------------------

ORACLES: dict[str, Callable[[Graph], object]] = {
    "house-im": lambda g: contains_induced_minor(g, HOUSE),
    "house-itm": lambda g: contains_induced_topological_minor(g, HOUSE),
    "butterfly-im": lambda g: contains_induced_minor(g, BUTTERFLY),
}


@dataclass(frozen=True)
class Discrepancy:
    graph6: str
    recognizer: str
    recognizer_verdict: bool
    oracle_verdict: bool


@dataclass
class EquivalenceReport:
    checked: int = 0
    positives: dict[str, int] = field(default_factory=dict)
    discrepancies: list[Discrepancy] = field(default_factory=list)
    certificate_failures: list[str] = field(default_factory=list)
    budget_failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.discrepancies or self.certificate_failures or self.budget_failures)

    def lines(self) -> list[str]:
        out = [f"checked {self.checked} graphs"]
        out += [f"{k}: {v} positive" for k, v in sorted(self.positives.items())]
        out += [f"MISMATCH {d.graph6} {d.recognizer} recognizer={d.recognizer_verdict} oracle={d.oracle_verdict}" for d in self.discrepancies]
        out += [f"BAD CERTIFICATE {c}" for c in self.certificate_failures]
        out += [f"BUDGET {c}" for c in self.budget_failures]
        out.append("PASS" if self.passed else "FAIL")
        return out


def check_graph(
    g: Graph,
    names: Sequence[str],
    report: EquivalenceReport,
    recognizers: Optional[dict[str, Callable[..., Verdict]]] = None,
    budget: int = DEFAULT_BUDGET,
) -> None:
    recognizers = recognizers or RECOGNIZERS
    report.checked += 1
    for name in names:
        try:
            verdict = recognizers[name](g, budget)
        except BudgetExceeded:
            report.budget_failures.append(f"{encode_graph6(g)} {name}")
            continue
        oracle = ORACLES[name](g) is not None
        if bool(verdict) != oracle:
            report.discrepancies.append(Discrepancy(encode_graph6(g), name, bool(verdict), oracle))
        if verdict:
            report.positives[name] = report.positives.get(name, 0) + 1
            try:
                validate_witness(g, verdict.witness)
                witness_model(g, verdict.witness).validate()
            except (ModelError, AttributeError, TypeError) as exc:
                report.certificate_failures.append(f"{encode_graph6(g)} {name}: {exc}")


def run_oracle_equivalence(
    spec: ExperimentSpec,
    recognizers: Optional[dict[str, Callable[..., Verdict]]] = None,
) -> EquivalenceReport:
    """Exhaustive sweep of all labeled graphs up to ``exhaustive_max_n`` plus a seeded random sweep."""
    report = EquivalenceReport()
    for n in range(0, spec.exhaustive_max_n + 1):
        for g in all_labeled_graphs(n):
            check_graph(g, spec.recognizers, report, recognizers, spec.budget)
    for g in random_corpus(spec.seed, spec.n_min, spec.n_max, spec.samples, spec.probabilities, spec.connected_only):
        check_graph(g, spec.recognizers, report, recognizers, spec.budget)
    return report


# --- dichotomy table ----------------------------------------------------------

@dataclass(frozen=True)
class DichotomyRow:
    graph6: str
    n: int
    m: int
    im: str
    im_because: str
    itm: str
    itm_because: str
    in_prism5: bool
    in_theta5: bool

    @property
    def lemma_ok(self) -> bool:
        return not (self.in_prism5 and self.in_theta5) or self.im == "tame"


def dichotomy_rows(max_n: int = 5) -> list[DichotomyRow]:
    prism5 = FamilySpec("prism", (5,)).build()
    theta5 = FamilySpec("theta", (5,)).build()
    rows = []
    for h in graphs_up_to_isomorphism(max_n):
        im = classify_dichotomy(h, INDUCED_MINOR)
        itm = classify_dichotomy(h, INDUCED_TOPOLOGICAL_MINOR)
        rows.append(
            DichotomyRow(
                encode_graph6(h), h.n, h.m,
                im.verdict, im.justification or "",
                itm.verdict, itm.justification or "",
                contains_induced_minor(prism5, h) is not None,
                contains_induced_minor(theta5, h) is not None,
            )
        )
    return rows


def run_dichotomy_table(spec: ExperimentSpec, max_n: int = 5) -> tuple[str, list[DichotomyRow]]:
    rows = dichotomy_rows(max_n)
    text = _csv_text(
        spec.header(),
        ("graph6", "n", "m", "induced_minor", "im_maximal", "induced_topological_minor", "itm_maximal", "im_of_prism5", "im_of_theta5", "lemma_ok"),
        [
            (r.graph6, r.n, r.m, r.im, r.im_because, r.itm, r.itm_because,
             "yes" if r.in_prism5 else "no", "yes" if r.in_theta5 else "no", "yes" if r.lemma_ok else "no")
            for r in rows
        ],
        spec.seed,
    )
    return text, rows


__all__ = [
    "CSV_VERSION",
    "EXPERIMENTS",
    "MAXIMAL_TAME",
    "CorpusRow",
    "DichotomyRow",
    "EquivalenceReport",
    "ExperimentSpec",
    "all_labeled_graphs",
    "canonical_graph6",
    "graphs_up_to_isomorphism",
    "random_corpus",
    "replay_rows",
    "run_dichotomy_table",
    "run_feral_growth",
    "run_oracle_equivalence",
    "run_tame_profile",
]
