"""Constructive witnesses for monochromatic grids and difference sets.

Given a finite coloring of the positive integers, the engine searches for a
monochromatic grid (iterated sums of arithmetic progressions) together with a
set of its differences carrying the same color, and checks every claim with
an independent verifier before reporting it.
"""

from .coloring import Constant, Periodic, SeededRandom, Table, FromFile, make_coloring, parse_coloring
from .construct import find_mono_grid, generate_descriptors, infinitary_vdw, stabilize, LevelParams
from .dichotomy import Budgets, LengthSchedule, brauer_schur, dichotomy, parse_schedule
from .errors import (
    BrauerSchurError,
    BudgetExceeded,
    Inconclusive,
    InternalError,
    SearchExhausted,
    SpecError,
    StabilizationFailed,
    WindowExhausted,
)
from .grid import GridTriple, level_set, member
from .verify import verify_case2, verify_containment, verify_dset, verify_grid_witness
from .windows import AdaptivePlan, AssumedPlan, CertifiedPlan, parse_plan, vdw_number, vdw_search

__version__ = "0.1.0"
