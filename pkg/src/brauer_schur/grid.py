"""Multidimensional progressions in triple-of-sequences form.

A :class:`GridTriple` with bases ``a_i``, differences ``d_i`` and lengths
``k_i`` denotes the level sets

    A_i = { a_i + x_1 d_1 + ... + x_i d_i : 0 <= x_t <= k_t - 1 }

and their union.  Only finite truncations exist here; depth is explicit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, SpecError

# Level sets above this size are refused instead of materialized.
MAX_ENUMERATION = 4_000_000


class LevelError(SpecError, IndexError):
    pass


@dataclass(frozen=True)
class GridTriple:
    bases: Tuple[int, ...]
    diffs: Tuple[int, ...]
    lengths: Tuple[int, ...]

    def __post_init__(self):
        for name in ("bases", "diffs", "lengths"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
        n = len(self.bases)
        if n < 1 or len(self.diffs) != n or len(self.lengths) != n:
            raise SpecError(
                f"triple sequences must share a positive length, got "
                f"{len(self.bases)}/{len(self.diffs)}/{len(self.lengths)}"
            )
        if any(b < 0 for b in self.bases):
            raise SpecError(f"bases must be nonnegative: {self.bases}")
        if any(d < 1 for d in self.diffs):
            raise SpecError(f"differences must be positive: {self.diffs}")
        if any(k < 2 for k in self.lengths):
            raise SpecError(f"lengths must be at least 2: {self.lengths}")
        if any(a > b for a, b in zip(self.lengths, self.lengths[1:])):
            raise SpecError(f"lengths must be nondecreasing: {self.lengths}")

    @classmethod
    def constant_base(cls, base, diffs, lengths):
        return cls((base,) * len(diffs), diffs, lengths)

    @property
    def depth(self) -> int:
        return len(self.bases)

    def truncate(self, depth: int) -> "GridTriple":
        if not 1 <= depth <= self.depth:
            raise LevelError(f"cannot truncate depth {self.depth} triple to {depth}")
        return GridTriple(self.bases[:depth], self.diffs[:depth], self.lengths[:depth])

    def level_size(self, i: int) -> int:
        """Number of coordinate tuples at level ``i`` (an upper bound on |A_i|)."""
        return prod(self.lengths[:i])

    def to_json(self) -> dict:
        return {
            "bases": [str(v) for v in self.bases],
            "diffs": [str(v) for v in self.diffs],
            "lengths": [str(v) for v in self.lengths],
        }

    @classmethod
    def from_json(cls, data) -> "GridTriple":
        try:
            return cls(
                tuple(int(v) for v in data["bases"]),
                tuple(int(v) for v in data["diffs"]),
                tuple(int(v) for v in data["lengths"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed grid triple JSON: {exc}") from None


@dataclass(frozen=True)
class LevelSet:
    level: int
    elements: Tuple[int, ...]
    coordinates: Tuple[Tuple[int, ...], ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.as_dict()

    def as_dict(self) -> Dict[int, Tuple[int, ...]]:
        return dict(zip(self.elements, self.coordinates))


def _colex_key(coords):
    return tuple(reversed(coords))


def level_set(T: GridTriple, i: int, limit: int = MAX_ENUMERATION) -> LevelSet:
    """Enumerate ``A_i`` with the coordinates producing each element.

    If two coordinate tuples hit the same integer (possible only when the
    gap condition fails) the one that is least read from the last coordinate
    backwards is kept, matching :func:`member`.
    """
    if not 1 <= i <= T.depth:
        raise LevelError(f"level {i} outside 1..{T.depth}")
    size = T.level_size(i)
    if size > limit:
        raise BudgetExceeded(f"level {i} has {size} points, over the enumeration limit {limit}")
    base = T.bases[i - 1]
    diffs = T.diffs[:i]
    found: Dict[int, Tuple[int, ...]] = {}
    for coords in itertools.product(*(range(k) for k in T.lengths[:i])):
        x = base + sum(c * d for c, d in zip(coords, diffs))
        old = found.get(x)
        if old is None or _colex_key(coords) < _colex_key(old):
            found[x] = coords
    elements = tuple(sorted(found))
    return LevelSet(i, elements, tuple(found[x] for x in elements))


def grid_points(base: int, diffs: Sequence[int], lengths: Sequence[int]) -> List[int]:
    """Sorted distinct points of one grid, without coordinates."""
    if prod(lengths) > MAX_ENUMERATION:
        raise BudgetExceeded(f"grid with {prod(lengths)} points is over the enumeration limit")
    pts = {base}
    for d, k in zip(diffs, lengths):
        pts = {p + x * d for p in pts for x in range(k)}
    return sorted(pts)


def translate(S: Iterable[int], b: int) -> set:
    return {s + b for s in S}


def gap_condition(diffs: Sequence[int], windows: Sequence[int]) -> bool:
    """True iff every ``l_i`` exceeds ``sum_{j<i} (W_j - 1) l_j``."""
    if len(diffs) != len(windows):
        raise SpecError(f"gap condition needs equal lengths, got {len(diffs)} and {len(windows)}")
    if diffs and diffs[0] <= 0:
        raise SpecError("the first difference must be positive")
    span = 0
    for l, w in zip(diffs, windows):
        if l <= span:
            return False
        span += (w - 1) * l
    return True


def minimal_diffs(windows: Sequence[int]) -> List[int]:
    """Least differences satisfying the gap condition: l_1 = 1, l_i = 1 + span."""
    out, span = [], 0
    for w in windows:
        out.append(span + 1)
        span += (w - 1) * out[-1]
    return out


def member(T: GridTriple, i: int, x: int) -> Optional[Tuple[int, ...]]:
    """Coordinates of ``x`` in ``A_i``, or None.

    Solves from the last coordinate down with interval pruning, so under the
    gap condition each step has at most one live branch.
    """
    if not 1 <= i <= T.depth:
        raise LevelError(f"level {i} outside 1..{T.depth}")
    diffs, lengths = T.diffs[:i], T.lengths[:i]
    # reach[t] = largest value the first t coordinates can contribute
    reach = [0]
    for d, k in zip(diffs, lengths):
        reach.append(reach[-1] + (k - 1) * d)

    def solve(t, rest):
        if t == 0:
            return () if rest == 0 else None
        d, k = diffs[t - 1], lengths[t - 1]
        lo = max(0, -(-(rest - reach[t - 1]) // d))
        hi = min(k - 1, rest // d)
        for c in range(lo, hi + 1):
            sub = solve(t - 1, rest - c * d)
            if sub is not None:
                return sub + (c,)
        return None

    rest = x - T.bases[i - 1]
    if rest < 0 or rest > reach[i]:
        return None
    return solve(i, rest)
