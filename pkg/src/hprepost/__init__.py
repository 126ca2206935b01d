"""Frequent itemset mining with PPC-trees and N-lists (PrePost), plus a
MapReduce-style parallel variant (HPrepost)."""

from .baselines import brute_force, fp_growth
from .core import (
    FList,
    FListEntry,
    MinSup,
    TransactionDatabase,
    downward_closure_violations,
    resolve_threshold,
    result_equal,
)
from .fimi import format_result, generate, parse_fimi, read_fimi, stats, write_result
from .miner import mine, nl_intersect, prepost, support
from .pipeline import hprepost
from .ppctree import (
    PPCode,
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

__version__ = "0.1.0"

__all__ = [
    "FList", "FListEntry", "MinSup", "PPCTree", "PPCode", "TransactionDatabase",
    "assign_orders", "brute_force", "build_flist", "build_nlists", "build_ppc_tree",
    "count_pairs", "downward_closure_violations", "format_result", "fp_growth",
    "generate", "hprepost", "insert_tree", "is_ancestor", "mine", "nl_intersect",
    "parse_fimi", "prepost", "project_transaction", "read_fimi", "resolve_threshold",
    "result_equal", "stats", "support", "write_result",
]
