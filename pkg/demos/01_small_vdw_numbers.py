"""
Small van der Waerden numbers
=============================

Exact values by backtracking, each with a coloring one shorter than the
number that has no monochromatic progression.
"""

from brauer_schur.windows import find_mono_ap, vdw_search

for k, c in [(2, 1), (2, 3), (2, 6), (3, 2), (3, 3), (4, 2)]:
    res = vdw_search(k, c)
    word = "".join(map(str, res.extremal))
    print(f"W({k},{c}) = {res.value:3d}   nodes={res.nodes:7d}   {word}")
    # the certificate really avoids k-term progressions
    assert find_mono_ap(res.extremal, k) is None
