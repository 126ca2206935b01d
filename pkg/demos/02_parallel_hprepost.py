"""
Mining with two MapReduce jobs
==============================

The parallel pipeline counts supports in one job, then ships group shards
to per-group tree builders.  Whatever the group, split and worker counts,
the answer matches sequential PrePost and the exhaustive oracle.
"""

from hprepost import MinSup, brute_force, generate, hprepost, prepost, stats
from hprepost.pipeline import GroupAssignment, job1_flist, shard_transaction
from hprepost.ppctree import project_transaction

db = generate(items=12, transactions=40, avg_len=5, seed=42)
print("dataset:", stats(db))

###############################################################################
# Job 1: the F-list, computed over four input splits.
flist, n = job1_flist(db, MinSup(fraction=0.2), splits=4)
print("F-list:", flist.as_pairs(), "n =", n)

###############################################################################
# Each transaction yields at most one shard per group: the prefix up to the
# last item that group owns.
groups = GroupAssignment(3, flist)
t = project_transaction(db[0], flist)
print("\nprojected:", t)
for g, shard in shard_transaction(t, groups):
    print(f"  group {g} (owns {sorted(groups.owned(g))}): {shard}")

###############################################################################
# Job 2 and the comparison.
m = MinSup(fraction=0.2).resolve(len(db))
truth = brute_force(db, m)
for G, S, W in [(1, 1, 1), (2, 2, 2), (3, 4, 4), (5, 2, 1)]:
    r = hprepost(db, 0.2, groups=G, splits=S, workers=W)
    print(f"G={G} S={S} W={W}: {len(r)} itemsets, equal to oracle: {r == truth}")
print("sequential:", prepost(db, m) == truth)
