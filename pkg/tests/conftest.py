import os
import random
from pathlib import Path

import pytest

from hprepost import TransactionDatabase, read_fimi

DATA = Path(__file__).parent / "data"

# Table 1 items a..g mapped to ids 1..7
A, B, C, D, E, F, G = range(1, 8)
NAMES = dict(zip(range(1, 8), "abcdefg"))

TABLE1 = [
    [A, B, G],
    [B, C, D, F, G],
    [A, B, E],
    [A, D],
    [B, C, E],
    [A, D, E, F],
    [B, C],
]


@pytest.fixture
def table1():
    return read_fimi(DATA / "table1.dat")


@pytest.fixture
def table1_path():
    return DATA / "table1.dat"


def random_db(seed, max_items=12, max_transactions=40):
    rng = random.Random(seed)
    n_items = rng.randint(1, max_items)
    n_tx = rng.randint(0, max_transactions)
    rows = []
    for _ in range(n_tx):
        # skew towards low ids so trees share prefixes
        k = rng.randint(1, n_items)
        rows.append({min(int(rng.paretovariate(1.2)), n_items) for _ in range(k)}
                    | set(rng.sample(range(1, n_items + 1), rng.randint(0, min(3, n_items)))))
    return TransactionDatabase(rows)


def dataset_dir():
    return Path(os.environ.get("HPREPOST_DATA", Path(__file__).parents[1] / "data"))


# one line per acceptance criterion in the terminal summary
_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for mark in report.keywords:
        if mark.startswith("criterion_"):
            n = int(mark.split("_")[1])
            if report.skipped:
                continue
            prev = _criteria.get(n, (True, []))
            _criteria[n] = (prev[0] and report.passed, prev[1] + [report.nodeid.split("::")[-1]])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok, tests = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  ({len(tests)} checks)")
