"""PPC-tree: two-scan construction, pre/post numbering and 1-item N-lists.

A PPC-tree is a prefix tree over F-list-ordered transactions.  Unlike an
FP-tree it keeps no header table or node links; once every node has its
pre-order and post-order rank, the per-item N-lists carry all the
information the miner needs and the tree may be dropped.
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .core import FList, Transaction, TransactionDatabase


class PPCode(NamedTuple):
    pre: int
    post: int
    count: int

    def __repr__(self) -> str:
        return f"<({self.pre},{self.post}):{self.count}>"


NList = Tuple[PPCode, ...]


class PPCNode:
    __slots__ = ("item", "count", "children", "pre", "post", "parent", "_index")

    def __init__(self, item: Optional[int], parent: Optional["PPCNode"] = None):
        self.item = item
        self.count = 0
        self.children: List[PPCNode] = []
        self.pre = -1
        self.post = -1
        self.parent = parent
        self._index: Dict[int, PPCNode] = {}

    @property
    def code(self) -> PPCode:
        return PPCode(self.pre, self.post, self.count)

    def child(self, item: int) -> Optional["PPCNode"]:
        return self._index.get(item)

    def add_child(self, item: int) -> "PPCNode":
        node = PPCNode(item, self)
        self.children.append(node)
        self._index[item] = node
        return node

    def __repr__(self) -> str:
        name = "null" if self.item is None else self.item
        return f"PPCNode({name}:{self.count} pre={self.pre} post={self.post})"


class PPCTree:
    """Prefix tree with a null root; ``rank`` is the F-list order used for
    validating inserted paths."""

    def __init__(self, rank: Dict[int, int]):
        self.root = PPCNode(None)
        self.rank = rank
        self.node_count = 1
        self.numbered = False

    def __repr__(self) -> str:
        return f"PPCTree(nodes={self.node_count}, root_count={self.root.count})"

    def nodes(self):
        """Nodes in pre-order (root first)."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def dump(self) -> str:
        """One line per node in pre-order: ``depth item count pre post``."""
        lines = []
        stack = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            name = "null" if node.item is None else str(node.item)
            lines.append(f"{depth} {name} {node.count} {node.pre} {node.post}")
            stack.extend((c, depth + 1) for c in reversed(node.children))
        return "\n".join(lines) + "\n"


def count_items(db: Iterable[Transaction]) -> Counter:
    counts: Counter = Counter()
    for t in db:
        counts.update(t)
    return counts


def build_flist(db: TransactionDatabase, m: int) -> FList:
    """First scan: frequent items sorted by (count desc, id asc)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return FList(count_items(db), m)


def project_transaction(t: Iterable[int], flist: FList) -> Tuple[int, ...]:
    """Drop infrequent items and order the rest most-frequent first."""
    rank = flist.rank
    return tuple(sorted((i for i in t if i in rank), key=rank.__getitem__))


def insert_tree(tree: PPCTree, path: Sequence[int]) -> None:
    if not path:
        return
    rank = tree.rank
    last = -1
    for item in path:
        r = rank.get(item)
        if r is None or r <= last:
            raise ValueError(f"path not in strictly increasing F-list rank order: {path}")
        last = r
    tree.root.count += 1
    node = tree.root
    for item in path:
        nxt = node.child(item)
        if nxt is None:
            nxt = node.add_child(item)
            tree.node_count += 1
        nxt.count += 1
        node = nxt
    tree.numbered = False


def assign_orders(tree: PPCTree) -> None:
    """Number nodes by pre-order and post-order traversal, root included."""
    pre = post = 0
    stack: List[Tuple[PPCNode, bool]] = [(tree.root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            node.post = post
            post += 1
            continue
        node.pre = pre
        pre += 1
        stack.append((node, True))
        stack.extend((c, False) for c in reversed(node.children))
    tree.numbered = True


def build_tree(paths: Iterable[Sequence[int]], flist: FList) -> PPCTree:
    """Insert already-projected paths and number the tree."""
    tree = PPCTree(flist.rank)
    for path in paths:
        insert_tree(tree, path)
    assign_orders(tree)
    return tree


def build_ppc_tree(db: TransactionDatabase, flist: FList) -> PPCTree:
    """Second scan: project every transaction and insert it."""
    return build_tree((project_transaction(t, flist) for t in db), flist)


def build_nlists(tree: PPCTree, flist: FList) -> Dict[int, NList]:
    if not tree.numbered:
        raise ValueError("assign_orders must run before build_nlists")
    lists: Dict[int, list] = {e.item: [] for e in flist}
    for node in tree.nodes():
        if node.item is not None:
            lists[node.item].append(PPCode(node.pre, node.post, node.count))
    return {item: tuple(codes) for item, codes in lists.items()}


def count_pairs(tree: PPCTree) -> Dict[Tuple[int, int], int]:
    """Support of every co-occurring item pair, from one tree scan.

    Keys are ``(more frequent item, less frequent item)``; on a tree path
    the ancestor is always the more frequent of the two.
    """
    pairs: Dict[Tuple[int, int], int] = {}
    ancestors: List[int] = []
    stack: List[Tuple[PPCNode, bool]] = [(c, False) for c in reversed(tree.root.children)]
    while stack:
        node, done = stack.pop()
        if done:
            ancestors.pop()
            continue
        item, c = node.item, node.count
        for a in ancestors:
            key = (a, item)
            pairs[key] = pairs.get(key, 0) + c
        ancestors.append(item)
        stack.append((node, True))
        stack.extend((ch, False) for ch in reversed(node.children))
    return pairs


def is_ancestor(u, v) -> bool:
    """Ancestor test on PP-codes: ``u`` precedes ``v`` and finishes after it."""
    return u[0] < v[0] and u[1] > v[1]


def nlist_support(nl: Iterable) -> int:
    return sum(code[2] for code in nl)
