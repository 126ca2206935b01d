from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hprepost import brute_force, downward_closure_violations
from hprepost.miner import MiningStats, mine, nl_intersect, prepost, prepost_structures, support

from conftest import A, B, C, D, E, TABLE1, random_db

fs = frozenset

E_LIST = ((3, 0, 1), (6, 3, 1), (9, 6, 1))
B_LIST = ((1, 5, 5),)
D_LIST = ((5, 2, 1), (8, 7, 2))


def exhaustive(rows, m):
    """Direct subset counting over the raw rows (independent of the miners)."""
    universe = sorted({i for t in rows for i in t})
    out = {}
    for k in range(1, len(universe) + 1):
        for combo in combinations(universe, k):
            s = sum(1 for t in rows if set(combo) <= set(t))
            if s >= m:
                out[fs(combo)] = s
    return out


class TestIntersect:
    def test_e_under_b(self):
        assert nl_intersect(E_LIST, B_LIST) == ((1, 5, 2),)

    def test_e_under_d(self):
        # only {a, d, e} holds both d and e
        assert sum(1 for t in TABLE1 if D in t and E in t) == 1
        assert nl_intersect(E_LIST, D_LIST) == ((8, 7, 1),)

    def test_empty(self):
        assert nl_intersect(E_LIST, ()) == ()
        assert nl_intersect((), B_LIST) == ()

    def test_checked_mode_rejects_unsorted(self):
        with pytest.raises(ValueError):
            nl_intersect(((6, 3, 1), (3, 0, 1)), B_LIST, check=True)

    def test_merges_repeated_ancestor(self):
        # two descendants under one ancestor collapse into a single code
        assert nl_intersect(((2, 0, 1), (3, 1, 4)), ((1, 5, 9),)) == ((1, 5, 5),)


class TestSupport:
    def test_values(self):
        assert support(((2, 1, 2), (7, 8, 2))) == 4
        assert support(((1, 5, 2),)) == 2
        assert support(()) == 0


class TestMine:
    def test_table1_m3(self, table1):
        fl, _, nl, pairs = prepost_structures(table1, 3)
        expected = exhaustive(TABLE1, 3)
        assert expected == {fs({A}): 4, fs({B}): 5, fs({C}): 3, fs({D}): 3, fs({E}): 3, fs({B, C}): 3}
        assert mine(fl, nl, pairs, 3) == expected

    def test_table1_m1(self, table1):
        fl, _, nl, pairs = prepost_structures(table1, 1)
        got = mine(fl, nl, pairs, 1)
        assert got == exhaustive(TABLE1, 1)
        assert got[fs({B, A, E})] == 1
        assert got[fs({A, D, E})] == 1

    def test_empty_flist(self, table1):
        fl, _, nl, pairs = prepost_structures(table1, 8)
        assert mine(fl, nl, pairs, 8) == {}

    def test_prepost_accepts_fraction(self, table1):
        assert prepost(table1, 0.3) == prepost(table1, 3)

    def test_stats_are_structural(self, table1):
        st1, st2 = MiningStats(), MiningStats()
        prepost(table1, 1, stats=st1)
        prepost(table1, 1, stats=st2)
        assert st1 == st2
        assert st1.tree_nodes > 1
        assert st1.base_codes == sum(len(nl) for nl in prepost_structures(table1, 1)[2].values())
        assert st1.live_codes == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 100_000), st.sampled_from([1, 2, 3, 4, 6]))
def test_matches_oracle(seed, m):
    db = random_db(seed)
    got = prepost(db, m)
    assert got == brute_force(db, m)
    assert downward_closure_violations(got) == []


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000))
def test_intersection_bounds(seed):
    db = random_db(seed)
    fl, _, nl, _ = prepost_structures(db, 1)
    for lo, hi in combinations(reversed(fl.items), 2):
        out = nl_intersect(nl[lo], nl[hi])
        assert support(out) <= min(support(nl[lo]), support(nl[hi]))
        coords = {(c[0], c[1]) for c in nl[hi]}
        assert all((c[0], c[1]) in coords for c in out)


def test_deterministic(table1):
    assert list(prepost(table1, 1).items()) == list(prepost(table1, 1).items())
