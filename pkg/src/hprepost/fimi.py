"""FIMI transaction files, the canonical result format, dataset statistics
and a seeded synthetic generator."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import IO, Iterable, Mapping, Union

import numpy as np

from .core import MAX_ITEM, TransactionDatabase, canonical_key


class FimiParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_fimi(stream: Union[bytes, str, IO]) -> TransactionDatabase:
    """One transaction per line, whitespace-separated unsigned decimal ids.

    Accepts bytes, str or a (binary or text) file object.  Blank lines are
    skipped and duplicate ids within a line collapse.
    """
    if isinstance(stream, (bytes, str)):
        lines = stream.splitlines() if stream else []
    else:
        lines = stream
    rows = []
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        tokens = line.replace("\t", " ").split()
        if not tokens:
            continue
        row = set()
        for tok in tokens:
            if not tok.isdigit() or not tok.isascii():
                raise FimiParseError(lineno, f"not an unsigned integer: {tok!r}")
            value = int(tok)
            if value > MAX_ITEM:
                raise FimiParseError(lineno, f"item id exceeds {MAX_ITEM}: {tok}")
            row.add(value)
        rows.append(row)
    return TransactionDatabase(rows)


def read_fimi(path: Union[str, os.PathLike]) -> TransactionDatabase:
    with open(path, "rb") as fh:
        return parse_fimi(fh)


def write_fimi(db: Iterable, sink: IO[str]) -> None:
    for t in db:
        sink.write(" ".join(map(str, t)) + "\n")


@dataclass(frozen=True)
class DatasetStats:
    items: int
    transactions: int
    avg_length: float

    def __str__(self) -> str:
        return f"{self.items} {self.transactions} {round(self.avg_length, 3)!r}"


def stats(db: TransactionDatabase) -> DatasetStats:
    n = len(db)
    total = sum(len(t) for t in db)
    return DatasetStats(len(db.items()), n, total / n if n else 0.0)


def format_result(result: Mapping) -> str:
    """Canonical text: ``ids<TAB>support`` per line, by size then ids."""
    buf = io.StringIO()
    write_result(result, buf)
    return buf.getvalue()


def write_result(result: Mapping, sink: IO[str]) -> None:
    for itemset in sorted(result, key=canonical_key):
        ids = " ".join(map(str, sorted(itemset)))
        sink.write(f"{ids}\t{result[itemset]}\n")


def read_result(source: Union[str, IO[str]]) -> dict:
    text = source if isinstance(source, str) else source.read()
    out = {}
    for line in text.splitlines():
        ids, sup = line.split("\t")
        out[frozenset(int(x) for x in ids.split())] = int(sup)
    return out


def generate(items: int, transactions: int, avg_len: float, seed: int = 0) -> TransactionDatabase:
    """Seeded random database with skewed item popularity.

    Lengths are Poisson around ``avg_len`` clamped to ``[1, items]``; item
    ``k`` (1-based) is drawn with weight ``1/k`` so that popular items
    dominate prefixes.
    """
    if items < 1 or transactions < 0 or avg_len <= 0 or avg_len > items:
        raise ValueError("need items >= 1, transactions >= 0 and 0 < avg_len <= items")
    rng = np.random.default_rng(seed)
    weights = 1.0 / np.arange(1, items + 1)
    weights /= weights.sum()
    ids = np.arange(1, items + 1)
    lengths = np.clip(rng.poisson(avg_len, size=transactions), 1, items)
    rows = [rng.choice(ids, size=int(k), replace=False, p=weights).tolist() for k in lengths]
    return TransactionDatabase(rows)
