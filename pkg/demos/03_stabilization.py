"""
From a sequence of grids to one coherent grid
=============================================

Grids of depth 1, 2, 3, ... are found inside one ambient set.  Pigeonhole
picks a subsequence with a common color whose differences agree.  Only a
finite prefix is ever built, so failures are possible and are reported.
"""

from collections import Counter

from brauer_schur.coloring import SeededRandom
from brauer_schur.construct import infinitary_vdw
from brauer_schur.errors import StabilizationFailed
from brauer_schur.windows import AssumedPlan

plan = AssumedPlan((3, 9) + (30_000,) * 6)
tally = Counter()
for seed in range(10):
    chi = SeededRandom(seed, 2)
    try:
        w = infinitary_vdw(chi, 1, plan, (2,) * 8, depth=2, horizon=8)
    except StabilizationFailed as exc:
        tally["failed"] += 1
        print(seed, "no stable pair among colors", exc.trace["descriptor_colors"])
        continue
    tally["ok"] += 1
    print(seed, "indices", w.indices, "bases", w.triple.bases, "diffs", w.triple.diffs, "color", w.color)
print(dict(tally))
