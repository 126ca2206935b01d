"""Shared value types: transactions, thresholds, the F-list and mining results."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple

MAX_ITEM = 2**32 - 1

Item = int
Transaction = Tuple[int, ...]
Itemset = frozenset
# itemset -> support count
MiningResult = dict


def make_transaction(items: Iterable[int]) -> Transaction:
    """Deduplicate and sort item ids ascending."""
    t = tuple(sorted(set(items)))
    if t and (t[0] < 0 or t[-1] > MAX_ITEM):
        raise ValueError(f"item id out of range [0, {MAX_ITEM}]: {t}")
    return t


class TransactionDatabase(Sequence):
    """Immutable, ordered collection of transactions.

    Ingestion order is preserved: it decides child order in the prefix
    trees and therefore every pre/post rank.
    """

    __slots__ = ("_rows",)

    def __init__(self, transactions: Iterable[Iterable[int]] = ()):
        self._rows = tuple(make_transaction(t) for t in transactions)

    @property
    def transactions(self) -> Tuple[Transaction, ...]:
        return self._rows

    @property
    def n(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __getitem__(self, i):
        return self._rows[i]

    def __iter__(self) -> Iterator[Transaction]:
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, TransactionDatabase):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"TransactionDatabase(n={self.n})"

    def items(self) -> set:
        return {i for t in self._rows for i in t}


@dataclass(frozen=True)
class MinSup:
    """Minimum support, either a fraction of transactions or an absolute count."""

    fraction: Optional[float] = None
    count: Optional[int] = None

    def __post_init__(self):
        if (self.fraction is None) == (self.count is None):
            raise ValueError("give exactly one of fraction or count")
        if self.fraction is not None and not 0 < self.fraction <= 1:
            raise ValueError(f"min-sup fraction must be in (0, 1], got {self.fraction}")
        if self.count is not None and self.count < 1:
            raise ValueError(f"min-sup count must be >= 1, got {self.count}")

    @classmethod
    def of(cls, value) -> "MinSup":
        """Coerce an int (absolute count), a float (fraction) or a MinSup."""
        if isinstance(value, MinSup):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a min-sup")
        if isinstance(value, int):
            return cls(count=value)
        return cls(fraction=float(value))

    def resolve(self, n: int) -> int:
        return resolve_threshold(self, n)


def resolve_threshold(spec, n: int) -> int:
    """Absolute support threshold for a database of ``n`` transactions.

    Fractions resolve to ``max(1, ceil(f * n))``.  The product is taken on
    the decimal value of ``f`` so that e.g. ``0.1 * 30`` gives 3, not 4.
    """
    spec = MinSup.of(spec)
    if n < 0:
        raise ValueError("n must be >= 0")
    if spec.count is not None:
        return spec.count
    exact = Fraction(repr(spec.fraction)) * n
    return max(1, math.ceil(exact))


@dataclass(frozen=True)
class FListEntry:
    item: int
    count: int
    rank: int


class FList(Sequence):
    """Frequent 1-itemsets in descending support order (ties: ascending id)."""

    __slots__ = ("entries", "rank", "counts")

    def __init__(self, counts: Mapping[int, int], m: int):
        ordered = sorted(((i, c) for i, c in counts.items() if c >= m),
                         key=lambda ic: (-ic[1], ic[0]))
        self.entries = tuple(FListEntry(i, c, r) for r, (i, c) in enumerate(ordered))
        self.rank = {e.item: e.rank for e in self.entries}
        self.counts = {e.item: e.count for e in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __contains__(self, item) -> bool:
        return item in self.rank

    def __eq__(self, other) -> bool:
        if isinstance(other, FList):
            return self.entries == other.entries
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{e.item}:{e.count}" for e in self.entries)
        return f"FList([{body}])"

    @property
    def items(self) -> Tuple[int, ...]:
        return tuple(e.item for e in self.entries)

    def as_pairs(self):
        return [(e.item, e.count) for e in self.entries]


def result_equal(a: Mapping, b: Mapping):
    """Compare two mining results.

    Returns ``(True, None)`` on equality, otherwise ``(False, diff)`` where
    ``diff`` is ``(itemset, support_in_a, support_in_b)`` for the first
    differing itemset in canonical order (missing support is ``None``).
    """
    if a == b:
        return True, None
    for key in sorted(set(a) | set(b), key=canonical_key):
        if a.get(key) != b.get(key):
            return False, (key, a.get(key), b.get(key))
    return True, None  # pragma: no cover


def canonical_key(itemset) -> tuple:
    """Sort key: size first, then ascending item-id sequence."""
    s = tuple(sorted(itemset))
    return (len(s), s)


def downward_closure_violations(result: Mapping) -> list:
    """Itemsets whose immediate subsets are missing or less supported."""
    bad = []
    for itemset, sup in result.items():
        if len(itemset) < 2:
            continue
        for i in itemset:
            sub = itemset - {i}
            if result.get(sub, -1) < sup:
                bad.append((itemset, sub))
    return bad
