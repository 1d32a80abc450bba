"""
Monochromatic grids, one level at a time
========================================

The worked example: color odd numbers 1 and even numbers 2, split
{1..9} into three blocks of three and look for two blocks that look alike.
"""

from brauer_schur.coloring import Periodic, SeededRandom
from brauer_schur.construct import LevelParams, find_mono_grid
from brauer_schur.grid import level_set
from brauer_schur.verify import verify_grid_witness

chi = Periodic([1, 2])
params = LevelParams(base=1, diffs=(1, 3), windows=(3, 3), lengths=(2, 2), palette=2)
w = find_mono_grid(chi, params)

for level, start, step in w.trace:
    print(f"level {level}: progression starts at block {start} with step {step}")
print("witness:", w.to_json())
print("points :", level_set(w.triple(), 2).elements)
print("verdict:", verify_grid_witness(chi, w))

# The same search on pseudo-random colorings, with certified windows 3 and 9.
params = LevelParams.auto(1, (3, 9), (2, 2), 2)
for seed in range(5):
    chi = SeededRandom(seed, 2)
    w = find_mono_grid(chi, params)
    print(seed, w.base, w.diffs, w.color, verify_grid_witness(chi, w).kind)
