from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hprepost import TransactionDatabase
from hprepost.core import FList
from hprepost.miner import nl_intersect, support
from hprepost.ppctree import (
    PPCTree,
    assign_orders,
    build_flist,
    build_nlists,
    build_ppc_tree,
    count_pairs,
    insert_tree,
    is_ancestor,
    project_transaction,
)

from conftest import A, B, C, D, DATA, E, F, G, TABLE1, random_db


def table1_structures(db, m=3):
    flist = build_flist(db, m)
    tree = build_ppc_tree(db, flist)
    return flist, tree, build_nlists(tree, flist)


def cooccurrence(rows, x, y):
    return sum(1 for t in rows if x in t and y in t)


class TestFList:
    def test_table1(self, table1):
        assert build_flist(table1, 3).as_pairs() == [(B, 5), (A, 4), (C, 3), (D, 3), (E, 3)]

    def test_nothing_frequent(self, table1):
        assert len(build_flist(table1, 6)) == 0

    def test_all_items(self, table1):
        direct = Counter(i for t in TABLE1 for i in t)
        fl = build_flist(table1, 1)
        assert len(fl) == 7
        assert dict(fl.as_pairs()) == dict(direct)
        assert fl.counts[F] == 2 and fl.counts[G] == 2


class TestProjection:
    @pytest.fixture
    def flist(self, table1):
        return build_flist(table1, 3)

    def test_rows(self, flist):
        assert project_transaction({B, C, D, F, G}, flist) == (B, C, D)
        assert project_transaction({A, D}, flist) == (A, D)
        assert project_transaction({F, G}, flist) == ()

    def test_table2(self, table1, flist):
        table2 = [(B, A), (B, C, D), (B, A, E), (A, D), (B, C, E), (A, D, E), (B, C)]
        assert [project_transaction(t, flist) for t in table1] == table2


class TestInsert:
    def rank(self):
        return {B: 0, A: 1, C: 2, D: 3, E: 4}

    def test_single_path(self):
        tree = PPCTree(self.rank())
        insert_tree(tree, (B, A))
        (b,) = tree.root.children
        (a,) = b.children
        assert (b.item, b.count, a.item, a.count) == (B, 1, A, 1)
        assert tree.node_count == 3 and tree.root.count == 1

    def test_shared_prefix(self):
        tree = PPCTree(self.rank())
        insert_tree(tree, (B, A))
        insert_tree(tree, (B, C, D))
        (b,) = tree.root.children
        assert b.count == 2
        assert [(n.item, n.count) for n in b.children] == [(A, 1), (C, 1)]
        assert [(n.item, n.count) for n in b.children[1].children] == [(D, 1)]

    def test_table1_tree(self, table1):
        _, tree, _ = table1_structures(table1)
        assert tree.node_count == 10
        assert [(n.item, n.count) for n in tree.root.children] == [(B, 5), (A, 2)]

    def test_rejects_out_of_order(self):
        tree = PPCTree(self.rank())
        with pytest.raises(ValueError):
            insert_tree(tree, (A, B))
        with pytest.raises(ValueError):
            insert_tree(tree, (B, B))
        with pytest.raises(ValueError):
            insert_tree(tree, (B, F))

    def test_empty_path_is_noop(self):
        tree = PPCTree(self.rank())
        insert_tree(tree, ())
        assert tree.node_count == 1 and tree.root.count == 0


class TestOrders:
    def test_b_node(self, table1):
        _, tree, _ = table1_structures(table1)
        b = tree.root.children[0]
        assert (b.pre, b.post) == (1, 5)

    def test_second_a_branch(self, table1):
        _, tree, _ = table1_structures(table1)
        a = tree.root.children[1]
        (d,) = a.children
        assert (a.pre, a.post) == (7, 8)
        assert (d.pre, d.post) == (8, 7)

    def test_root_only(self):
        tree = PPCTree({})
        assign_orders(tree)
        assert (tree.root.pre, tree.root.post) == (0, 0)

    def test_golden_dump(self, table1):
        _, tree, _ = table1_structures(table1)
        assert tree.dump() == (DATA / "table1_tree.txt").read_text()


class TestNLists:
    def test_table1(self, table1):
        _, _, nl = table1_structures(table1)
        assert nl[E] == ((3, 0, 1), (6, 3, 1), (9, 6, 1))
        assert nl[D] == ((5, 2, 1), (8, 7, 2))

    def test_empty_tree(self):
        fl = FList({1: 5, 2: 4}, 1)
        tree = PPCTree(fl.rank)
        assign_orders(tree)
        assert build_nlists(tree, fl) == {1: (), 2: ()}

    def test_requires_numbering(self, table1):
        fl = build_flist(table1, 3)
        tree = PPCTree(fl.rank)
        insert_tree(tree, (B,))
        with pytest.raises(ValueError):
            build_nlists(tree, fl)


class TestPairs:
    def test_table1_against_cooccurrence(self, table1):
        _, tree, _ = table1_structures(table1)
        pairs = count_pairs(tree)
        for x, y in [(B, C), (B, E), (A, D)]:
            assert pairs[(x, y)] == cooccurrence(TABLE1, x, y)
        assert pairs[(B, C)] == 3
        assert pairs[(B, E)] == 2
        assert pairs[(A, D)] == 2

    def test_every_pair_matches_brute_force(self, table1):
        fl, tree, _ = table1_structures(table1)
        pairs = count_pairs(tree)
        for x, y in combinations(fl.items, 2):
            assert pairs.get((x, y), 0) == cooccurrence(TABLE1, x, y)

    def test_single_path(self):
        fl = FList({B: 1, A: 1}, 1)
        tree = PPCTree({B: 0, A: 1})
        insert_tree(tree, (B, A))
        assert count_pairs(tree) == {(B, A): 1}


class TestAncestor:
    def test_examples(self):
        assert is_ancestor((1, 5), (3, 0))
        assert not is_ancestor((1, 5), (9, 6))
        assert not is_ancestor((4, 4), (4, 4))


def _parent_chain(node):
    out = set()
    p = node.parent
    while p is not None:
        out.add(id(p))
        p = p.parent
    return out


def check_tree_invariants(db, m):
    """Structural checks shared with the acceptance suite."""
    fl = build_flist(db, m)
    tree = build_ppc_tree(db, fl)
    nl = build_nlists(tree, fl)
    nodes = list(tree.nodes())
    n = tree.node_count
    assert len(nodes) == n
    assert sorted(x.pre for x in nodes) == list(range(n))
    assert sorted(x.post for x in nodes) == list(range(n))
    chains = {id(x): _parent_chain(x) for x in nodes}
    for u in nodes:
        for v in nodes:
            if u is not v:
                assert is_ancestor((u.pre, u.post), (v.pre, v.post)) == (id(u) in chains[id(v)])
    for e in fl:
        assert support(nl[e.item]) == e.count
        assert all(nl[e.item][k][0] < nl[e.item][k + 1][0] for k in range(len(nl[e.item]) - 1))
    for x in nodes:
        assert sum(c.count for c in x.children) <= x.count
        assert len({c.item for c in x.children}) == len(x.children)
    projected = [project_transaction(t, fl) for t in db]
    assert sum(c.count for c in tree.root.children) == sum(1 for p in projected if p)
    pairs = count_pairs(tree)
    for (hi, lo), c in pairs.items():
        assert fl.rank[hi] < fl.rank[lo]
        assert support(nl_intersect(nl[lo], nl[hi])) == c
    for hi, lo in combinations(fl.items, 2):
        if (hi, lo) not in pairs:
            assert nl_intersect(nl[lo], nl[hi]) == ()
    return tree


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([1, 2, 3, 5]))
def test_structural_invariants(seed, m):
    check_tree_invariants(random_db(seed), m)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_rebuild_is_deterministic(seed):
    db = random_db(seed)
    fl = build_flist(db, 1)
    assert build_ppc_tree(db, fl).dump() == build_ppc_tree(TransactionDatabase(db), fl).dump()
