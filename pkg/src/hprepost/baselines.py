"""Reference miners: an exhaustive oracle and FP-growth."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .core import FList, MiningResult, TransactionDatabase
from .ppctree import count_items

ORACLE_MAX_ITEMS = 16
ORACLE_MAX_TRANSACTIONS = 64


class OracleLimitError(ValueError):
    pass


def brute_force(db: TransactionDatabase, m: int) -> MiningResult:
    """Count every nonempty subset of the item universe by direct containment.

    Shares no code with the tree-based miners.  Exponential, so inputs are
    capped at 16 distinct items and 64 transactions.
    """
    universe = sorted({i for t in db for i in t})
    if len(universe) > ORACLE_MAX_ITEMS or len(db) > ORACLE_MAX_TRANSACTIONS:
        raise OracleLimitError(
            f"oracle limited to {ORACLE_MAX_ITEMS} items / {ORACLE_MAX_TRANSACTIONS} "
            f"transactions, got {len(universe)} / {len(db)}"
        )
    bit = {item: 1 << k for k, item in enumerate(universe)}
    masks = [sum(bit[i] for i in t) for t in db]
    result: MiningResult = {}
    for subset in range(1, 1 << len(universe)):
        sup = sum(1 for tm in masks if tm & subset == subset)
        if sup >= m:
            result[frozenset(universe[k] for k in range(len(universe)) if subset >> k & 1)] = sup
    return result


class _FPNode:
    __slots__ = ("item", "count", "parent", "children", "link")

    def __init__(self, item, parent):
        self.item = item
        self.count = 0
        self.parent = parent
        self.children: Dict[int, _FPNode] = {}
        self.link: Optional[_FPNode] = None


class _FPTree:
    def __init__(self, order: Dict[int, int]):
        self.root = _FPNode(None, None)
        self.order = order
        self.heads: Dict[int, _FPNode] = {}
        self.tails: Dict[int, _FPNode] = {}
        self.nodes = 1

    def add(self, path, count: int) -> None:
        node = self.root
        for item in path:
            child = node.children.get(item)
            if child is None:
                child = node.children[item] = _FPNode(item, node)
                self.nodes += 1
                if item in self.tails:
                    self.tails[item].link = child
                else:
                    self.heads[item] = child
                self.tails[item] = child
            child.count += count
            node = child

    def prefix_paths(self, item: int) -> List[Tuple[List[int], int]]:
        paths = []
        node = self.heads.get(item)
        while node is not None:
            path = []
            p = node.parent
            while p.item is not None:
                path.append(p.item)
                p = p.parent
            if path:
                path.reverse()
                paths.append((path, node.count))
            node = node.link
        return paths


@dataclass
class FPStats:
    tree_nodes: int = 0
    live_nodes: int = 0
    peak_nodes: int = 0


def fp_growth(db: TransactionDatabase, m: int, stats: Optional[FPStats] = None) -> MiningResult:
    """FP-tree plus recursive conditional pattern bases.

    Items are ordered by the same (count desc, id asc) rule as the F-list.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    flist = FList(count_items(db), m)
    rank = flist.rank
    tree = _FPTree(rank)
    for t in db:
        path = sorted((i for i in t if i in rank), key=rank.__getitem__)
        if path:
            tree.add(path, 1)
    stats = stats if stats is not None else FPStats()
    stats.tree_nodes = stats.live_nodes = stats.peak_nodes = tree.nodes
    result: MiningResult = {}
    _grow(tree, [(e.item, e.count) for e in flist], (), m, result, stats)
    return result


def _grow(tree: _FPTree, header, suffix: tuple, m: int, result: MiningResult, stats: FPStats) -> None:
    # least frequent first, as in the classic formulation
    for item, sup in reversed(header):
        itemset = suffix + (item,)
        result[frozenset(itemset)] = sup
        base = tree.prefix_paths(item)
        counts: Dict[int, int] = {}
        for path, c in base:
            for i in path:
                counts[i] = counts.get(i, 0) + c
        cond = [(i, c) for i, c in counts.items() if c >= m]
        if not cond:
            continue
        order = tree.order
        cond.sort(key=lambda ic: order[ic[0]])
        keep = {i for i, _ in cond}
        sub = _FPTree(order)
        for path, c in base:
            sub.add([i for i in path if i in keep], c)
        stats.live_nodes += sub.nodes
        stats.peak_nodes = max(stats.peak_nodes, stats.live_nodes)
        _grow(sub, cond, itemset, m, result, stats)
        stats.live_nodes -= sub.nodes
