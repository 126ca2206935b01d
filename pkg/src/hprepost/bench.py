"""Benchmark harness: mining runtime and structural memory proxies per
(algorithm, min-sup), written as CSV."""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import asdict, dataclass, fields
from typing import IO, Callable, Dict, Iterable, List, Sequence, Tuple

from .baselines import FPStats, brute_force, fp_growth
from .core import MiningResult, TransactionDatabase, resolve_threshold
from .miner import MiningStats, prepost
from .pipeline import PipelineStats, hprepost


@dataclass
class BenchRecord:
    dataset: str
    algo: str
    min_sup: float
    m: int
    runtime_ms: float
    peak_nodes: int
    peak_codes: int
    result_count: int
    groups: int
    splits: int
    workers: int


CSV_FIELDS = [f.name for f in fields(BenchRecord)]


def _run_prepost(db, m, groups, splits, workers):
    st = MiningStats()
    r = prepost(db, m, stats=st)
    return r, st.tree_nodes, st.peak_codes


def _run_hprepost(db, m, groups, splits, workers):
    st = PipelineStats()
    r = hprepost(db, m, groups=groups, splits=splits, workers=workers, stats=st)
    return r, st.tree_nodes, st.peak_codes


def _run_fpgrowth(db, m, groups, splits, workers):
    st = FPStats()
    r = fp_growth(db, m, stats=st)
    return r, st.peak_nodes, 0


def _run_bruteforce(db, m, groups, splits, workers):
    return brute_force(db, m), 0, 0


# name -> fn(db, m, groups, splits, workers) -> (result, peak_nodes, peak_codes)
ALGORITHMS: Dict[str, Callable[..., Tuple[MiningResult, int, int]]] = {
    "prepost": _run_prepost,
    "hprepost": _run_hprepost,
    "fpgrowth": _run_fpgrowth,
    "bruteforce": _run_bruteforce,
}


def run_algorithm(name: str, db: TransactionDatabase, m: int,
                  groups: int = 1, splits: int = 1, workers: int = 1) -> MiningResult:
    try:
        fn = ALGORITHMS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; choose from {sorted(ALGORITHMS)}") from None
    return fn(db, m, groups, splits, workers)[0]


def bench(db: TransactionDatabase, dataset: str, min_sups: Sequence[float], algos: Sequence[str],
          repeat: int = 3, groups: int = 1, splits: int = 1, workers: int = 1) -> List[BenchRecord]:
    """Median-of-``repeat`` timing of mining alone (the database is parsed
    beforehand)."""
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    records = []
    for algo in algos:
        fn = ALGORITHMS[algo]
        # only the pipeline is parallel; sequential runs are recorded as 1/1/1
        config = (groups, splits, workers) if algo == "hprepost" else (1, 1, 1)
        for f in min_sups:
            m = resolve_threshold(f, len(db))
            times = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                result, nodes, codes = fn(db, m, *config)
                times.append((time.perf_counter() - t0) * 1000.0)
            records.append(BenchRecord(dataset, algo, f, m, statistics.median(times),
                                       nodes, codes, len(result), *config))
    return records


def write_csv(records: Iterable[BenchRecord], sink: IO[str]) -> None:
    writer = csv.DictWriter(sink, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        row = asdict(rec)
        row["runtime_ms"] = f"{rec.runtime_ms:.3f}"
        writer.writerow(row)
