"""
Runtime and structural-memory sweep
===================================

Runs the three miners over a range of minimum supports and writes the
CSV that the ``hprepost bench`` command produces.  Point ``path`` at a
FIMI file (chess.dat, mushroom.dat, ...) to sweep a real dataset.
"""

import sys

from hprepost import generate, read_fimi
from hprepost.bench import bench, write_csv

path = sys.argv[1] if len(sys.argv) > 1 else None
if path:
    db, name = read_fimi(path), path
else:
    db, name = generate(items=60, transactions=3000, avg_len=12, seed=1), "synthetic"

records = bench(db, name, min_sups=[0.30, 0.25, 0.20, 0.15, 0.10],
                algos=["prepost", "hprepost", "fpgrowth"], repeat=3,
                groups=4, splits=4, workers=4)
write_csv(records, sys.stdout)

###############################################################################
# Every algorithm must report the same number of itemsets per threshold.
for f in sorted({r.min_sup for r in records}):
    counts = {r.algo: r.result_count for r in records if r.min_sup == f}
    assert len(set(counts.values())) == 1, counts
