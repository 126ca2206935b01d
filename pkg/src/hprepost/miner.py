"""PrePost mining over N-lists.

Itemsets are enumerated depth-first.  Each enumeration node is an itemset
in *mining order*: least frequent item first (the anchor), then items of
strictly decreasing rank.  The N-list of an itemset lists the tree nodes of
its most frequent item, each weighted by how many transactions through that
node contain the whole itemset.  Two siblings ``P+x`` and ``P+y`` whose tail
``y`` is more frequent than ``x`` are joined by intersecting ``N(P+x)``
(descendant side) with ``N(P+y)`` (ancestor side).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Dict, List, Mapping, Optional, Tuple

from .core import FList, MiningResult, TransactionDatabase, resolve_threshold
from .ppctree import (
    NList,
    PPCode,
    build_flist,
    build_nlists,
    build_ppc_tree,
    count_pairs,
)


@dataclass
class MiningStats:
    """Structural memory proxies gathered while mining."""

    tree_nodes: int = 0
    base_codes: int = 0
    live_codes: int = 0
    peak_live_codes: int = 0

    @property
    def peak_codes(self) -> int:
        return self.base_codes + self.peak_live_codes

    def alloc(self, n: int) -> None:
        self.live_codes += n
        if self.live_codes > self.peak_live_codes:
            self.peak_live_codes = self.live_codes

    def free(self, n: int) -> None:
        self.live_codes -= n


def support(nl) -> int:
    return sum(code[2] for code in nl)


def nl_intersect(descendant: NList, ancestor: NList, check: bool = False) -> NList:
    """Merge-join two N-lists from the same numbered tree.

    Each descendant code whose node lies below some ancestor code adds its
    count to that ancestor's coordinates.  Output is ascending by pre.
    """
    if check:
        for nl in (descendant, ancestor):
            if any(nl[k][0] >= nl[k + 1][0] for k in range(len(nl) - 1)):
                raise ValueError("N-list not strictly ascending by pre-order")
    out: List[PPCode] = []
    i = j = 0
    nd, na = len(descendant), len(ancestor)
    while i < nd and j < na:
        d = descendant[i]
        a = ancestor[j]
        if a[0] < d[0]:
            if a[1] > d[1]:
                if out and out[-1][0] == a[0]:
                    last = out[-1]
                    out[-1] = PPCode(last[0], last[1], last[2] + d[2])
                else:
                    out.append(PPCode(a[0], a[1], d[2]))
                i += 1
            else:
                j += 1
        else:
            i += 1
    return tuple(out)


def mine_anchored(
    flist: FList,
    nlists: Mapping[int, NList],
    pairs: Mapping[Tuple[int, int], int],
    m: int,
    anchors: Optional[Collection[int]] = None,
    stats: Optional[MiningStats] = None,
) -> MiningResult:
    """All frequent itemsets of size >= 2 whose least frequent item is in
    ``anchors`` (every F-list item when ``None``)."""
    result: MiningResult = {}
    items = flist.items
    for r, anchor in enumerate(items):
        if anchors is not None and anchor not in anchors:
            continue
        anchor_nl = nlists[anchor]
        seeds = []
        # tails from least to most frequent, so later siblings are ancestors
        for tail in reversed(items[:r]):
            if pairs.get((tail, anchor), 0) < m:
                continue
            nl = nl_intersect(anchor_nl, nlists[tail])
            seeds.append(((anchor, tail), nl, support(nl)))
        _grow(seeds, m, result, stats)
    return result


def _grow(siblings, m: int, result: MiningResult, stats: Optional[MiningStats]) -> None:
    if stats is not None:
        stats.alloc(sum(len(nl) for _, nl, _ in siblings))
    for k, (itemset, nl, sup) in enumerate(siblings):
        result[frozenset(itemset)] = sup
        children = []
        for other, other_nl, _ in siblings[k + 1:]:
            joined = nl_intersect(nl, other_nl)
            s = support(joined)
            if s >= m:
                children.append((itemset + (other[-1],), joined, s))
        if children:
            _grow(children, m, result, stats)
    if stats is not None:
        stats.free(sum(len(nl) for _, nl, _ in siblings))


def mine(
    flist: FList,
    nlists: Mapping[int, NList],
    pairs: Mapping[Tuple[int, int], int],
    m: int,
    stats: Optional[MiningStats] = None,
) -> MiningResult:
    """Every frequent itemset: F-list singletons plus the enumerated rest."""
    if m < 1:
        raise ValueError("m must be >= 1")
    result: MiningResult = {frozenset((e.item,)): e.count for e in flist}
    result.update(mine_anchored(flist, nlists, pairs, m, stats=stats))
    return result


def prepost(db: TransactionDatabase, minsup, stats: Optional[MiningStats] = None) -> MiningResult:
    """Sequential PrePost: two scans, tree numbering, N-lists, enumeration.

    ``minsup`` is an absolute count (int), a fraction (float) or a MinSup.
    """
    m = resolve_threshold(minsup, len(db))
    flist = build_flist(db, m)
    tree = build_ppc_tree(db, flist)
    nlists = build_nlists(tree, flist)
    pairs = count_pairs(tree)
    if stats is not None:
        stats.tree_nodes = tree.node_count
        stats.base_codes = sum(len(nl) for nl in nlists.values())
    del tree
    return mine(flist, nlists, pairs, m, stats=stats)


def prepost_structures(db: TransactionDatabase, m: int):
    """``(flist, tree, nlists, pairs)`` for inspection and tests."""
    flist = build_flist(db, m)
    tree = build_ppc_tree(db, flist)
    return flist, tree, build_nlists(tree, flist), count_pairs(tree)


__all__ = [
    "MiningStats",
    "mine",
    "mine_anchored",
    "nl_intersect",
    "prepost",
    "prepost_structures",
    "support",
]
