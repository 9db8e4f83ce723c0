#!/usr/bin/env python3
"""Regenerate every lab artifact into an output directory.

    python3 scripts/reproduce.py --out results            # full desk-scale run
    python3 scripts/reproduce.py --out results --quick    # a few seconds per step

Writes feral_<family>.csv, tame_profile.csv, tame_profile_rows.csv,
dichotomy_table.csv and oracle_equivalence.txt.  Reruns with the same
config produce byte-identical files.
"""
from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass, replace
from pathlib import Path

from sepscope.lab import (
    ExperimentSpec,
    replay_rows,
    run_dichotomy_table,
    run_feral_growth,
    run_oracle_equivalence,
    run_tame_profile,
)

log = logging.getLogger("reproduce")


@dataclass(frozen=True)
class Config:
    out: Path = Path("results")
    seed: int = 1
    workers: int = 1
    families: tuple[str, ...] = ("theta", "prism", "skinny-ladder", "creature")
    k_min: int = 3
    k_max: int = 8
    profile_n_min: int = 6
    profile_n_max: int = 12
    profile_samples: int = 500
    sweep_exhaustive_max_n: int = 6
    sweep_samples: int = 2000

    def quick(self) -> "Config":
        return replace(self, profile_n_max=8, profile_samples=20, sweep_exhaustive_max_n=4, sweep_samples=50)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Config.out)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--workers", type=int, default=Config.workers)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    cfg = Config(out=args.out, seed=args.seed, workers=args.workers)
    if args.quick:
        cfg = cfg.quick()
    cfg.out.mkdir(parents=True, exist_ok=True)
    status = 0

    for family in cfg.families:
        spec = ExperimentSpec("feral-growth", family=family, k_min=cfg.k_min, k_max=cfg.k_max, seed=cfg.seed)
        res = run_feral_growth(spec)
        (cfg.out / f"feral_{family}.csv").write_text(res.csv)
        log.info("feral-growth %s: counts %s", family, list(res.counts))
        for v in res.violations:
            log.warning("ratio below 2: %s", v)

    spec = ExperimentSpec(
        "tame-profile",
        n_min=cfg.profile_n_min,
        n_max=cfg.profile_n_max,
        samples=cfg.profile_samples,
        seed=cfg.seed,
        workers=cfg.workers,
    )
    prof = run_tame_profile(spec)
    (cfg.out / "tame_profile.csv").write_text(prof.csv)
    (cfg.out / "tame_profile_rows.csv").write_text(prof.rows_csv)
    problems = replay_rows(prof.rows_csv)
    log.info("tame-profile: %d rows, %d replay mismatches", len(prof.rows), len(problems))
    status |= bool(problems)

    text, rows = run_dichotomy_table(ExperimentSpec("dichotomy-table", seed=cfg.seed))
    (cfg.out / "dichotomy_table.csv").write_text(text)
    log.info("dichotomy-table: %d patterns, lemma violations %d", len(rows), sum(not r.lemma_ok for r in rows))

    spec = ExperimentSpec(
        "oracle-equivalence",
        exhaustive_max_n=cfg.sweep_exhaustive_max_n,
        n_min=7,
        n_max=11,
        samples=cfg.sweep_samples,
        seed=cfg.seed,
    )
    report = run_oracle_equivalence(spec)
    (cfg.out / "oracle_equivalence.txt").write_text(spec.header() + "\n" + "\n".join(report.lines()) + "\n")
    log.info("oracle-equivalence: %s", report.lines()[-1])
    status |= not report.passed
    return int(status)


if __name__ == "__main__":
    raise SystemExit(main())
