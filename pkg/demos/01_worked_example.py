"""
PPC-tree and N-lists on a seven-transaction database
=====================================================

Builds the prefix tree, numbers it, prints the per-item N-lists and mines
every itemset with support >= 3.
"""

from hprepost import (
    TransactionDatabase,
    build_flist,
    build_nlists,
    build_ppc_tree,
    count_pairs,
    format_result,
    mine,
    nl_intersect,
    support,
)

names = dict(zip(range(1, 8), "abcdefg"))
a, b, c, d, e, f, g = range(1, 8)
db = TransactionDatabase([
    [a, b, g], [b, c, d, f, g], [a, b, e], [a, d], [b, c, e], [a, d, e, f], [b, c],
])

###############################################################################
# First scan: the F-list.  f and g occur only twice and drop out.
m = 3
flist = build_flist(db, m)
print("F-list:", [(names[x.item], x.count) for x in flist])

###############################################################################
# Second scan: insert each projected transaction, then number the nodes.
tree = build_ppc_tree(db, flist)
print("\ndepth item count pre post")
for line in tree.dump().splitlines():
    depth, item, *rest = line.split()
    print(depth, names.get(int(item), item) if item != "null" else "null", *rest)

###############################################################################
# N-lists: one (pre, post):count code per tree node of the item.
nlists = build_nlists(tree, flist)
for x in flist:
    codes = " ".join(f"<({p},{q}):{k}>" for p, q, k in nlists[x.item])
    print(f"{names[x.item]}: {codes}")

###############################################################################
# Intersecting e's N-list with b's gives the support of {b, e}.
be = nl_intersect(nlists[e], nlists[b])
print("\nN-list(be) =", be, "support", support(be))

###############################################################################
# Full mining run.
result = mine(flist, nlists, count_pairs(tree), m)
print()
print(format_result(result), end="")
