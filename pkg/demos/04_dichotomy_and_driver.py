"""
Grids whose differences share their color
==========================================

One round of the dichotomy either assembles the final object (case 1) or
finds a color that can be dropped on a new ambient grid (case 2).  The
driver repeats rounds until case 1.
"""

import json

from brauer_schur.coloring import Constant, Periodic
from brauer_schur.dichotomy import Budgets, LengthSchedule, brauer_schur, dichotomy
from brauer_schur.windows import AssumedPlan

k = LengthSchedule.affine(1, 1)  # k_i = i + 1
plan = AssumedPlan(tuple(2 * (i + 1) ** 2 - 1 for i in range(1, 41)))
budgets = Budgets(depth=2, index_horizon=12)

out = dichotomy(Constant(1), 2, k, plan, budgets)
print("constant coloring -> case", out.case, out.witness.triple, "d-set", out.witness.dset)

out = dichotomy(Periodic([1, 2]), 2, k, plan, budgets)
print("parity coloring   -> case", out.case, "dropping color", out.witness.forbidden)

w = brauer_schur(Periodic([1, 2]), 2, k, plan, Budgets(depth=2, index_horizon=4))
print(json.dumps({key: w.to_json()[key] for key in ("bases", "diffs", "dset", "color")}, indent=1))
print("rounds:", [r["case"] for r in w.rounds])
