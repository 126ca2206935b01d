"""HPrepost: PrePost decomposed into two MapReduce jobs.

Job 1 counts item supports over the input splits and yields the F-list.
Job 2 projects each transaction onto the F-list and ships one
*group-dependent shard* per mining group: F-list ranks are dealt
round-robin to ``G`` groups, and a group receives the prefix of the
projected transaction up to the last item it owns.  A group reducer builds
its own PPC-tree from its shards and mines exactly the itemsets whose
least frequent item (the anchor) it owns.  Every itemset has one anchor, so
the per-group outputs are disjoint and their union is the full result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .core import FList, MinSup, MiningResult, TransactionDatabase, resolve_threshold
from .mapreduce import JobSpec, make_splits, run_job
from .miner import MiningStats, mine_anchored
from .ppctree import PPCTree, build_nlists, build_tree, count_pairs, project_transaction

# reserved Job 1 key carrying the transaction tally; item ids are >= 0
N_KEY = -1


@dataclass(frozen=True)
class GroupAssignment:
    groups: int
    flist: FList

    def __post_init__(self):
        if self.groups < 1:
            raise ValueError("group count must be >= 1")

    def group_of(self, item: int) -> int:
        return self.flist.rank[item] % self.groups

    def owned(self, g: int) -> frozenset:
        return frozenset(e.item for e in self.flist if e.rank % self.groups == g)


@dataclass
class PipelineStats:
    """Structural counters for the benchmark; group trees coexist, so
    node and code counts are summed over groups."""

    tree_nodes: int = 0
    peak_codes: int = 0
    per_group: Dict[int, MiningStats] = field(default_factory=dict)


def _sum_combiner(key, values):
    return [sum(values)]


def job1_flist(db: TransactionDatabase, minsup, splits: int = 1, workers: int = 1) -> Tuple[FList, int]:
    """Parallel support counting; returns ``(flist, n)``.

    The threshold may be a fraction of the global transaction count, which
    is only known once the job has finished, so reducers emit every count
    and the F-list filter is applied afterwards.
    """

    def mapper(t):
        yield N_KEY, 1
        for item in t:
            yield item, 1

    def reducer(key, values):
        yield key, sum(values)

    job = JobSpec(mapper, reducer, combiner=_sum_combiner, reducers=1, workers=workers)
    counts = run_job(job, make_splits(len(db), splits), db).as_dict()
    n = counts.pop(N_KEY, 0)
    m = resolve_threshold(minsup, n)
    return FList(counts, m), n


def shard_transaction(t: Sequence[int], groups: GroupAssignment) -> List[Tuple[int, Tuple[int, ...]]]:
    """Group-dependent shards of a projected, rank-sorted transaction."""
    last: Dict[int, int] = {}
    for pos, item in enumerate(t):
        last[groups.group_of(item)] = pos
    return [(g, tuple(t[: last[g] + 1])) for g in sorted(last)]


def _job2_spec(flist: FList, groups: GroupAssignment, workers: int, reduce_group) -> JobSpec:
    def mapper(t):
        return shard_transaction(project_transaction(t, flist), groups)

    def reducer(g, shards):
        yield g, reduce_group(g, shards)

    # group ids are ints < G, so stable_hash(g) % G routes group g to reducer g
    return JobSpec(mapper, reducer, reducers=groups.groups, workers=workers)


def group_trees(db: TransactionDatabase, flist: FList, groups: GroupAssignment,
                splits: int = 1, workers: int = 1) -> Dict[int, PPCTree]:
    """Numbered PPC-tree built by each group reducer (inspection aid)."""
    job = _job2_spec(flist, groups, workers, lambda g, shards: build_tree(shards, flist))
    return run_job(job, make_splits(len(db), splits), db).as_dict()


def job2_mine(db: TransactionDatabase, flist: FList, m: int, groups: GroupAssignment,
              splits: int = 1, workers: int = 1,
              stats: Optional[PipelineStats] = None) -> MiningResult:
    """Per-group tree construction and anchored mining; union of groups plus
    the F-list singletons."""

    def reduce_group(g, shards):
        tree = build_tree(shards, flist)
        nlists = build_nlists(tree, flist)
        pairs = count_pairs(tree)
        gstats = MiningStats(tree_nodes=tree.node_count,
                             base_codes=sum(len(nl) for nl in nlists.values()))
        found = mine_anchored(flist, nlists, pairs, m, anchors=groups.owned(g), stats=gstats)
        return found, gstats

    job = _job2_spec(flist, groups, workers, reduce_group)
    out = run_job(job, make_splits(len(db), splits), db)

    result: MiningResult = {frozenset((e.item,)): e.count for e in flist}
    for g, (found, gstats) in out.outputs:
        for itemset, sup in found.items():
            if itemset in result:
                raise RuntimeError(f"itemset {sorted(itemset)} emitted by more than one group")
            result[itemset] = sup
        if stats is not None:
            stats.per_group[g] = gstats
            stats.tree_nodes += gstats.tree_nodes
            stats.peak_codes += gstats.peak_codes
    return result


def hprepost(db: TransactionDatabase, minsup, groups: int = 1, splits: int = 1,
             workers: int = 1, stats: Optional[PipelineStats] = None) -> MiningResult:
    """Job 1 then Job 2.  ``minsup`` is a count, a fraction or a MinSup."""
    if splits < 1 or workers < 1:
        raise ValueError("splits and workers must be >= 1")
    spec = MinSup.of(minsup)
    flist, n = job1_flist(db, spec, splits, workers)
    m = resolve_threshold(spec, n)
    assignment = GroupAssignment(groups, flist)
    return job2_mine(db, flist, m, assignment, splits, workers, stats=stats)
