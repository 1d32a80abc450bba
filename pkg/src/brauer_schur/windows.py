"""Van der Waerden windows and monochromatic progression search.

Window lengths come from a plan:

* ``CertifiedPlan`` computes exact van der Waerden numbers by backtracking.
  Only tiny cases terminate; the induced palettes grow as ``c ** (W_1 ... W_{i-1})``.
* ``AssumedPlan`` takes the windows as given.  The searches may then fail,
  which is reported, never hidden.
* ``AdaptivePlan`` starts small and grows a level's window by a factor each
  time the search at that level fails, up to a cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Hashable, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, PlanExhausted, SpecError

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class APWitness:
    start: int
    step: int
    length: int

    def indices(self) -> List[int]:
        return [self.start + j * self.step for j in range(self.length)]


@dataclass(frozen=True)
class VdwResult:
    k: int
    c: int
    value: int
    extremal: Tuple[int, ...]  # an AP-free c-coloring of [value - 1]
    nodes: int


def _closes_ap(word, n, col, k):
    """Does coloring position n (0-based) with col complete a mono k-AP ending at n?"""
    step = 1
    while n - (k - 1) * step >= 0:
        if all(word[n - j * step] == col for j in range(1, k)):
            return True
        step += 1
    return False


@lru_cache(maxsize=None)
def _vdw_search(k, c, budget):
    # Depth-first over colorings; a new color is introduced only as the next
    # unused one, which is enough to decide existence.  Each stack frame holds
    # the next color to try at that position.
    best: Tuple[int, ...] = ()
    word: List[int] = []
    used: List[int] = [0]  # used[n] = number of distinct colors in word[:n]
    nxt: List[int] = [1]
    nodes = 1
    while nxt:
        n = len(word)
        col = nxt[-1]
        if col > min(used[n] + 1, c):
            nxt.pop()
            if word:
                word.pop()
                used.pop()
            continue
        nxt[-1] = col + 1
        if _closes_ap(word, n, col, k):
            continue
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"W({k},{c}) search exceeded {budget} nodes")
        word.append(col)
        used.append(max(used[n], col))
        nxt.append(1)
        if len(word) > len(best):
            best = tuple(word)
    return VdwResult(k, c, len(best) + 1, best, nodes)


def vdw_search(k: int, c: int, budget: int = DEFAULT_BUDGET) -> VdwResult:
    """Exact W(k, c) with an extremal coloring of ``[W - 1]`` as certificate."""
    if k < 2 or c < 1:
        raise SpecError(f"need k >= 2 and c >= 1, got k={k}, c={c}")
    if c > budget:
        raise BudgetExceeded(f"W({k},{c}) needs at least {c} nodes, budget is {budget}")
    return _vdw_search(k, c, budget)


def vdw_number(k: int, c: int, budget: int = DEFAULT_BUDGET) -> int:
    return vdw_search(k, c, budget).value


def find_mono_ap(word: Sequence[Hashable], k: int) -> Optional[APWitness]:
    """Least (start, step) with ``word[start + j*step]`` constant for j < k."""
    if k < 2:
        raise SpecError(f"progression length must be at least 2, got {k}")
    n = len(word)
    if k == 2:
        # least start whose label recurs; the step is the distance to its next copy
        nxt = {}
        best = None
        for pos in range(n - 1, -1, -1):
            if word[pos] in nxt:
                best = APWitness(pos, nxt[word[pos]] - pos, 2)
            nxt[word[pos]] = pos
        return best
    for start in range(n):
        step = 1
        while start + (k - 1) * step < n:
            col = word[start]
            if all(word[start + j * step] == col for j in range(1, k)):
                return APWitness(start, step, k)
            step += 1
    return None


def intern_labels(keys: Sequence[Hashable]) -> List[int]:
    """Canonical integer labels, assigned in order of first appearance."""
    seen = {}
    return [seen.setdefault(key, len(seen)) for key in keys]


def product_coloring(coloring, blocks: Sequence[Sequence[int]]) -> List[int]:
    """Label blocks so two share a label iff their color tuples agree position-wise."""
    blocks = [sorted(b) for b in blocks]
    if blocks and len({len(b) for b in blocks}) != 1:
        raise SpecError("product coloring needs blocks of equal size")
    return intern_labels([tuple(coloring(x) for x in b) for b in blocks])


# ---------------------------------------------------------------- plans


class WindowPlan:
    mode: str

    def to_string(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class CertifiedPlan(WindowPlan):
    budget: int = DEFAULT_BUDGET
    mode = "certified"

    def to_string(self):
        return f"certified:{self.budget}"


@dataclass(frozen=True)
class AssumedPlan(WindowPlan):
    windows: Tuple[int, ...]
    mode = "assumed"

    def __post_init__(self):
        object.__setattr__(self, "windows", tuple(int(w) for w in self.windows))
        if not self.windows or any(w < 2 for w in self.windows):
            raise SpecError(f"assumed windows must be at least 2: {self.windows}")
        if any(a > b for a, b in zip(self.windows, self.windows[1:])):
            raise SpecError(f"assumed windows must be nondecreasing: {self.windows}")

    def to_string(self):
        return "assumed:" + ",".join(map(str, self.windows))


@dataclass(frozen=True)
class AdaptivePlan(WindowPlan):
    start: int
    factor: int
    max_window: int
    mode = "adaptive"

    def __post_init__(self):
        if self.start < 2 or self.factor < 2 or self.max_window < 2:
            raise SpecError("adaptive plan needs start >= 2, factor >= 2, max >= 2")
        if self.start > self.max_window:
            raise SpecError("adaptive start exceeds the max window")

    def to_string(self):
        return f"adaptive:{self.start},{self.factor},{self.max_window}"


def parse_plan(text: str) -> WindowPlan:
    kind, _, rest = text.partition(":")
    try:
        nums = [int(t) for t in rest.split(",") if t.strip()]
    except ValueError:
        raise SpecError(f"malformed window plan {text!r}") from None
    if kind == "certified":
        return CertifiedPlan(*nums[:1])
    if kind == "assumed":
        return AssumedPlan(tuple(nums))
    if kind == "adaptive":
        if len(nums) != 3:
            raise SpecError(f"expected adaptive:start,factor,max, got {text!r}")
        return AdaptivePlan(*nums)
    raise SpecError(f"unknown window plan {text!r}")


def window_for_level(
    plan: WindowPlan,
    i: int,
    k_i: int,
    c: int,
    previous: Sequence[int] = (),
    attempt: int = 0,
) -> int:
    """Window ``W_i`` for level ``i`` given the windows already fixed below it.

    ``attempt`` counts earlier failures at this level; only the adaptive plan
    uses it.
    """
    if i < 1:
        raise SpecError(f"levels start at 1, got {i}")
    if isinstance(plan, CertifiedPlan):
        if len(previous) < i - 1:
            raise SpecError("certified windows need all lower windows fixed first")
        exponent = prod(previous[: i - 1])
        # The search walks at least c ** exponent nodes; refuse before computing it.
        if c > 1 and exponent * (c.bit_length() - 1) > plan.budget.bit_length():
            raise BudgetExceeded(
                f"W({k_i}, {c}^{exponent}) is beyond the certified budget {plan.budget}"
            )
        return vdw_number(k_i, c ** exponent, plan.budget)
    if isinstance(plan, AssumedPlan):
        if i > len(plan.windows):
            raise PlanExhausted(f"assumed plan has {len(plan.windows)} windows, level {i} requested")
        return plan.windows[i - 1]
    if isinstance(plan, AdaptivePlan):
        floor = max([plan.start, k_i] + list(previous[: i - 1]))
        if floor > plan.max_window:
            raise PlanExhausted(f"level {i} needs a window of {floor}, max is {plan.max_window}")
        if attempt > 0 and floor * plan.factor ** (attempt - 1) >= plan.max_window:
            raise PlanExhausted(f"level {i} window already at the max {plan.max_window}")
        return min(floor * plan.factor**attempt, plan.max_window)
    raise SpecError(f"unknown plan {plan!r}")
