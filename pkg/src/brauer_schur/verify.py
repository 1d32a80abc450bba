"""Independent certificate checks.

Nothing here reuses the searchers: every claim is re-derived by enumerating
level sets and querying the coloring.  Verdicts record the depth they were
checked to, since only finite prefixes of the infinite objects can be
certified.  When several elements fail, the smallest element (then the
lowest level) is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import SpecError
from .grid import GridTriple, level_set, member


@dataclass(frozen=True)
class Verdict:
    depth: Optional[int] = None

    ok = False
    kind = "verdict"

    def to_json(self) -> dict:
        out = {"verdict": self.kind}
        for key, val in self.__dict__.items():
            if val is None:
                out[key] = None
            elif isinstance(val, (list, tuple)):
                out[key] = [str(v) for v in val]
            elif isinstance(val, int) and not isinstance(val, bool):
                out[key] = str(val)
            else:
                out[key] = val
        return out


@dataclass(frozen=True)
class Ok(Verdict):
    ok = True
    kind = "ok"


@dataclass(frozen=True)
class CounterexampleAt(Verdict):
    element: int = 0
    expected: Optional[int] = None
    found: int = 0
    level: Optional[int] = None
    kind = "counterexample"


@dataclass(frozen=True)
class ContainmentFailure(Verdict):
    element: int = 0
    level: int = 0
    kind = "containment"


@dataclass(frozen=True)
class StructureFailure(Verdict):
    description: str = ""
    kind = "structure"


def _as_triple(witness, color):
    if isinstance(witness, GridTriple):
        if color is None:
            raise SpecError("a bare triple needs the claimed color")
        return witness, color
    triple = witness.triple() if callable(witness.triple) else witness.triple
    return triple, witness.color if color is None else color


def _first_bad(triple, depth, allowed, coloring, skip_zero=False):
    """Smallest (element, level) whose color fails ``allowed``; None if all pass."""
    worst = None
    for i in range(1, depth + 1):
        for x in level_set(triple, i).elements:
            if skip_zero and x == 0:
                continue
            if worst is not None and (x, i) >= worst[:2]:
                break
            col = coloring(x)
            if not allowed(col):
                worst = (x, i, col)
                break
    return worst


def verify_grid_witness(coloring, witness, color=None, depth=None) -> Verdict:
    """Every level set up to ``depth`` has the claimed color."""
    triple, gamma = _as_triple(witness, color)
    depth = triple.depth if depth is None else depth
    if not 1 <= depth <= triple.depth:
        raise SpecError(f"verification depth {depth} outside 1..{triple.depth}")
    bad = _first_bad(triple, depth, lambda col: col == gamma, coloring)
    if bad is None:
        return Ok(depth)
    x, i, col = bad
    return CounterexampleAt(depth, x, gamma, col, i)


def verify_dset(coloring, dset: Iterable[int], color: int) -> Verdict:
    for d in sorted(set(dset)):
        col = coloring(d)
        if col != color:
            return CounterexampleAt(None, d, color, col)
    return Ok(None)


def _check_case2_structure(w, depth) -> Optional[str]:
    l, W = list(w.newdiffs), list(w.windows)
    if len(l) != len(W):
        return "differences and windows differ in length"
    if len(l) < depth:
        return f"witness depth {len(l)} is below the verification depth {depth}"
    if not l or l[0] <= 0:
        return "first difference must be positive"
    span = 0
    for i, (li, wi) in enumerate(zip(l, W), start=1):
        if li <= span:
            return f"gap law fails at level {i}: {li} <= {span}"
        span += (wi - 1) * li
    if any(a > b for a, b in zip(W, W[1:])):
        return "windows are not nondecreasing"
    trace = list(w.trace)
    if len(trace) != len(l):
        return "trace length differs from the number of differences"
    prev_end = w.p
    dstar = list(w.dstar) if getattr(w, "dstar", None) else None
    span = 0
    for i, step in enumerate(trace, start=1):
        t, m, li, k_m = step.t, step.m, step.l, step.k_m
        if li != l[i - 1]:
            return f"trace difference at level {i} disagrees with the witness"
        if k_m < W[i - 1]:
            return f"k_{{m_{i}}} = {k_m} is below W_{i} = {W[i - 1]}"
        if m <= prev_end:
            return f"m_{i} = {m} does not exceed {prev_end}"
        if i == 1 and t != 0:
            return "t_1 must be 0"
        if dstar is not None:
            if m + t > len(dstar):
                return f"trace index {m + t} beyond the recorded differences"
            block = dstar[m - 1 : m + t]
            if sum(block) != li:
                return f"l*_{i} is not the sum of d*_{m}..d*_{m + t}"
            if i > 1 and sum(block[:-1]) > span:
                return f"t_{i} = {t} is not the least admissible value"
        prev_end = m + t
        span += (W[i - 1] - 1) * li
    if dstar is not None and (w.p > len(dstar) or dstar[w.p - 1] != w.base):
        return "base is not d*_p"
    if w.base < 1:
        return "base must be positive"
    return None


def verify_case2(coloring, w, depth=None) -> Verdict:
    """D and E up to ``depth`` avoid every excluded color; structure re-checked."""
    depth = len(w.newdiffs) if depth is None else depth
    problem = _check_case2_structure(w, depth)
    if problem is not None:
        return StructureFailure(depth, problem)
    excluded = set(w.excluded)
    W = tuple(w.windows[:depth])
    l = tuple(w.newdiffs[:depth])
    D = GridTriple((w.base,) * depth, l, W)
    E = GridTriple((0,) * depth, l, W)
    allowed = lambda col: col not in excluded
    hits = [
        h
        for h in (
            _first_bad(D, depth, allowed, coloring),
            _first_bad(E, depth, allowed, coloring, skip_zero=True),
        )
        if h is not None
    ]
    if not hits:
        return Ok(depth)
    x, i, col = min(hits)
    return CounterexampleAt(depth, x, None, col, i)


def verify_containment(
    child: GridTriple,
    parent: GridTriple,
    depth: Optional[int] = None,
    level_map: Optional[Sequence[int]] = None,
) -> Verdict:
    """Each child level ``t`` lies inside parent level ``level_map[t-1]`` (default ``t``)."""
    depth = child.depth if depth is None else depth
    if level_map is None:
        level_map = list(range(1, depth + 1))
    if depth > child.depth or len(level_map) < depth:
        raise SpecError("containment depth exceeds the child triple or level map")
    if max(level_map[:depth]) > parent.depth:
        return StructureFailure(depth, f"parent has depth {parent.depth}, level {max(level_map[:depth])} needed")
    worst = None
    for t in range(1, depth + 1):
        for x in level_set(child, t).elements:
            if worst is not None and (x, t) >= worst:
                break
            if member(parent, level_map[t - 1], x) is None:
                worst = (x, t)
                break
    if worst is None:
        return Ok(depth)
    return ContainmentFailure(depth, worst[0], worst[1])
