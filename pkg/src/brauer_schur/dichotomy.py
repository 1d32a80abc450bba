"""The two-case dichotomy and the driver that iterates it over colors.

One round starts from an ambient grid (base ``a``, differences ``l_i``,
windows ``W_i``) and a target palette.  The base run extracts a stabilized
monochromatic triple ``C_1`` with squared lengths ``k_i ** 2`` and color
``gamma``; ``C_2`` is the same triple with zero bases.  Then either

* Case 1: disjoint ordered index blocks whose weighted sums of the ``d*_i``
  have color ``gamma`` are found, and the block sums become the new
  differences of a grid inside ``C_1``; or
* Case 2: from some index ``p`` on no such sum has color ``gamma``, and a
  greedy regrouping of the ``d*_i`` yields new differences ``l*_i`` spanning
  a region that avoids ``gamma``.

Case 2 hands the region to the next round with one color fewer.  "Infinitely
many blocks" is replaced by ``R`` blocks inside the index horizon ``H``, so a
round may also end ``Inconclusive``.  Every emitted certificate is checked by
:mod:`brauer_schur.verify`.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import verify
from .construct import infinitary_vdw
from .errors import (
    CoordinateOverflow,
    Inconclusive,
    IndexExhausted,
    InternalError,
    SearchExhausted,
    SpecError,
)
from .grid import GridTriple, member, minimal_diffs
from .windows import AssumedPlan, WindowPlan, window_for_level

log = logging.getLogger(__name__)


# ---------------------------------------------------------------- schedules


class LengthSchedule:
    """Nondecreasing lengths ``k_1 <= k_2 <= ...`` with ``k_1 >= 2``.

    ``index_bound(W)`` is a growth witness: some index ``m`` with
    ``k_m >= W``.  Schedules without one are bounded and cannot drive the
    dichotomy, whose Case 2 needs lengths beyond every window.
    """

    def __init__(
        self,
        rule: Callable[[int], int],
        index_bound: Optional[Callable[[int], int]] = None,
        description: str = "custom",
    ):
        self.rule = rule
        self.index_bound = index_bound
        self.description = description

    def __call__(self, i: int) -> int:
        if i < 1:
            raise SpecError(f"schedule indices start at 1, got {i}")
        return self.rule(i)

    def __repr__(self):
        return f"LengthSchedule({self.description})"

    @property
    def unbounded(self) -> bool:
        return self.index_bound is not None

    def prefix(self, n: int) -> List[int]:
        ks = [self(i) for i in range(1, n + 1)]
        if ks and ks[0] < 2:
            raise SpecError(f"k_1 must be at least 2, got {ks[0]}")
        for i in range(1, len(ks)):
            if ks[i] < ks[i - 1]:
                raise SpecError(f"schedule decreases at index {i + 1}: {ks[i - 1]} > {ks[i]}")
        return ks

    def squared(self) -> "LengthSchedule":
        bound = None
        if self.index_bound is not None:
            inner = self.index_bound
            bound = lambda W: inner(isqrt(max(W, 1) - 1) + 1)
        return LengthSchedule(lambda i: self(i) ** 2, bound, f"({self.description})^2")

    def first_at_least(self, W: int, after: int = 0) -> int:
        """Least ``m > after`` with ``k_m >= W``."""
        if self.index_bound is None:
            raise SpecError(f"schedule {self.description} has no growth witness")
        limit = max(after + 1, self.index_bound(W))
        for m in range(after + 1, limit + 1):
            if self(m) >= W:
                return m
        raise SpecError(f"growth witness of {self.description} is wrong for W={W}")

    @classmethod
    def affine(cls, a: int, b: int) -> "LengthSchedule":
        """``k_i = a*i + b``."""
        if a < 0 or a + b < 2:
            raise SpecError(f"affine schedule needs a >= 0 and a + b >= 2, got a={a}, b={b}")
        bound = None
        if a >= 1:
            bound = lambda W: max(1, -(-(W - b) // a))
        return cls(lambda i: a * i + b, bound, f"affine:{a},{b}")

    @classmethod
    def from_list(cls, values: Sequence[int], tail: Optional["LengthSchedule"] = None):
        values = [int(v) for v in values]
        if not values:
            raise SpecError("list schedule needs at least one value")
        n = len(values)

        def rule(i):
            if i <= n:
                return values[i - 1]
            if tail is None:
                raise SpecError(f"list schedule has {n} values, index {i} requested")
            return tail(i)

        bound = None
        if tail is not None and tail.index_bound is not None:
            bound = lambda W: max(n + 1, tail.index_bound(W))
        desc = "list:" + ",".join(map(str, values))
        if tail is not None:
            desc += ";" + tail.description
        sched = cls(rule, bound, desc)
        sched.prefix(n + 1 if tail is not None else n)
        return sched


def parse_schedule(text: str) -> LengthSchedule:
    """``affine:a,b`` or ``list:k1,k2,...[;affine:a,b]``."""
    head, _, tail = text.partition(";")
    kind, _, rest = head.partition(":")
    try:
        nums = [int(t) for t in rest.split(",") if t.strip()]
    except ValueError:
        raise SpecError(f"malformed schedule {text!r}") from None
    if kind == "affine":
        if len(nums) != 2 or tail:
            raise SpecError(f"expected affine:a,b, got {text!r}")
        return LengthSchedule.affine(*nums)
    if kind == "list":
        return LengthSchedule.from_list(nums, parse_schedule(tail) if tail else None)
    raise SpecError(f"unknown schedule {text!r}")


# ---------------------------------------------------------------- data


@dataclass(frozen=True)
class Budgets:
    depth: int = 2  # r: depth of the emitted witness
    horizon: int = 0  # M: descriptor horizon of the base run (0: the base depth)
    blocks: int = 0  # R: Case 1 blocks (0: depth)
    index_horizon: int = 8  # H: Case 1 blocks live in [1, H]
    block_size: int = 2  # s: largest Case 1 block
    verify_depth: int = 0  # Case 2 and base-run verification depth (0: depth)
    max_base_depth: int = 40
    max_reentries: int = 4

    def __post_init__(self):
        if self.depth < 1 or self.block_size < 1 or self.index_horizon < 1:
            raise SpecError("depth, block size and index horizon must be positive")
        if self.blocks and self.blocks < self.depth:
            raise SpecError("fewer blocks than the witness depth")

    @property
    def R(self):
        return self.blocks or self.depth

    @property
    def vdepth(self):
        return self.verify_depth or self.depth


@dataclass(frozen=True)
class BaseRun:
    c1: GridTriple  # bases b_m, differences d*_m, lengths k_m ** 2
    c2: GridTriple  # zero bases, same differences
    color: int
    windows: Tuple[int, ...]
    source_diffs: Tuple[int, ...]
    alphas: Tuple[int, ...]
    verified_depth: int

    @property
    def dstar(self):
        return self.c1.diffs


@dataclass(frozen=True)
class BlockFamily:
    blocks: Tuple[Tuple[int, ...], ...]
    coefficients: Tuple[Tuple[int, ...], ...]  # aligned with blocks

    def __post_init__(self):
        last = 0
        for t, (I, xs) in enumerate(zip(self.blocks, self.coefficients), start=1):
            if not I or list(I) != sorted(set(I)) or len(xs) != len(I):
                raise SpecError(f"malformed block {I}")
            if I[0] <= last:
                raise SpecError(f"blocks are not ordered at block {t}")
            if I[0] < t:
                raise SpecError(f"block {t} starts below {t}")
            if any(x < 1 for x in xs):
                raise SpecError(f"block {t} has a non-positive coefficient")
            last = I[-1]

    @property
    def maxima(self):
        return tuple(I[-1] for I in self.blocks)

    def sums(self, dstar):
        return tuple(
            sum(x * dstar[i - 1] for i, x in zip(I, xs))
            for I, xs in zip(self.blocks, self.coefficients)
        )

    def to_json(self):
        return [
            {"indices": [str(i) for i in I], "coefficients": [str(x) for x in xs]}
            for I, xs in zip(self.blocks, self.coefficients)
        ]


@dataclass(frozen=True)
class Case1Witness:
    triple: GridTriple
    dset: Tuple[int, ...]
    color: int
    family: Optional[BlockFamily] = None
    level_map: Tuple[int, ...] = ()
    ambient: Optional[GridTriple] = field(default=None, compare=False)

    def to_json(self):
        out = self.triple.to_json()
        out["dset"] = [str(d) for d in self.dset]
        out["color"] = str(self.color)
        if self.family is not None:
            out["blocks"] = self.family.to_json()
            out["level_map"] = [str(m) for m in self.level_map]
        return out


@dataclass(frozen=True)
class Case2Step:
    t: int
    m: int
    l: int
    k_m: int


@dataclass(frozen=True)
class Case2Witness:
    base: int
    newdiffs: Tuple[int, ...]
    windows: Tuple[int, ...]
    forbidden: int
    excluded: FrozenSet[int]
    trace: Tuple[Case2Step, ...]
    p: int
    dstar: Tuple[int, ...] = ()

    def to_json(self):
        return {
            "base": str(self.base),
            "newdiffs": [str(v) for v in self.newdiffs],
            "windows": [str(v) for v in self.windows],
            "forbidden": str(self.forbidden),
            "excluded": [str(v) for v in sorted(self.excluded)],
            "p": str(self.p),
            "steps": [
                {"t": str(s.t), "m": str(s.m), "l": str(s.l), "k_m": str(s.k_m)} for s in self.trace
            ],
            "dstar": [str(v) for v in self.dstar],
        }


@dataclass
class DichotomyOutcome:
    case: object  # 1, 2 or "inconclusive"
    witness: object = None
    reason: str = ""
    trace: dict = field(default_factory=dict)

    def to_json(self):
        out = {"case": self.case}
        if self.witness is not None:
            out.update(self.witness.to_json())
        if self.reason:
            out["reason"] = self.reason
        out["trace"] = self.trace
        return out


# ---------------------------------------------------------------- base run


def run_base(
    coloring,
    a: int,
    c: int,
    schedule: LengthSchedule,
    plan: WindowPlan,
    depth: int,
    horizon: int = 0,
    diffs: Optional[Sequence[int]] = None,
    verify_depth: Optional[int] = None,
) -> BaseRun:
    """Monochromatic ``C_1`` with squared lengths, plus its zero-based twin ``C_2``."""
    horizon = max(horizon, depth)
    if diffs is not None:
        horizon = min(horizon, len(diffs))
    squares = schedule.squared().prefix(horizon)
    w = infinitary_vdw(
        coloring, a, plan, squares, depth, horizon, diffs,
        verify_depth=verify_depth, palette=c,
    )
    c1 = w.triple
    c2 = GridTriple((0,) * depth, c1.diffs, c1.lengths)
    return BaseRun(c1, c2, w.color, w.windows, w.source_diffs, w.alphas, w.verified_depth)


# ---------------------------------------------------------------- Case 1


def _candidates(lo, m, s, lengths, extra):
    """Blocks with maximum ``m`` and minimum ``>= lo``, in search order."""
    out = []
    if lo <= m:
        for size in range(1, s + 1):
            for head in itertools.combinations(range(lo, m), size - 1):
                I = head + (m,)
                for xs in itertools.product(*(range(1, lengths[i - 1]) for i in I)):
                    out.append((I, xs))
    out.extend(b for b in extra if b[0][-1] == m and b[0][0] >= lo)
    out.sort()
    return out


def _block_sum(I, xs, dstar):
    return sum(x * dstar[i - 1] for i, x in zip(I, xs))


def case1_search(
    coloring,
    dstar: Sequence[int],
    lengths: Sequence[int],
    target: int,
    R: int,
    H: int,
    s: int,
    extra_blocks: Sequence[Tuple[Tuple[int, ...], Tuple[int, ...]]] = (),
) -> Optional[BlockFamily]:
    """Greedy search for ``R`` ordered blocks whose sums have color ``target``.

    Candidates are scanned by maximum index, then lexicographically, then by
    coefficients, and the first admissible one is kept.  Taking the block
    that ends earliest never loses a family, so failure here is exhaustive
    over blocks of size ``<= s`` inside ``[1, H]`` (plus ``extra_blocks``).
    """
    if R < 1:
        raise SpecError("need at least one block")
    H = max([H] + [I[-1] for I, _ in extra_blocks])
    if H > len(dstar) or H > len(lengths):
        raise SpecError(f"index horizon {H} exceeds the available differences")
    blocks, coeffs = [], []
    last = 0
    for m in range(1, H + 1):
        for I, xs in _candidates(last + 1, m, s, lengths, extra_blocks):
            if coloring(_block_sum(I, xs, dstar)) == target:
                blocks.append(I)
                coeffs.append(xs)
                last = m
                break
        if len(blocks) == R:
            return BlockFamily(tuple(blocks), tuple(coeffs))
    return None


def case1_threshold(coloring, dstar, lengths, target, H, s, extra_blocks=()) -> int:
    """Least ``p`` such that no candidate block inside ``[p, H]`` has color ``target``."""
    H = max([H] + [I[-1] for I, _ in extra_blocks])
    for q in range(H, 0, -1):
        for m in range(q, H + 1):
            for I, xs in _candidates(q, m, s, lengths, extra_blocks):
                if I[0] == q and coloring(_block_sum(I, xs, dstar)) == target:
                    return q + 1
    return 1


def case1_assemble(
    family: BlockFamily,
    c1: GridTriple,
    dstar: Sequence[int],
    lengths: Sequence[int],
    color: int = 0,
) -> Case1Witness:
    """New differences are the block sums; bases are ``b_{max I_t}``.

    The square-trick coordinates ``y_j = x_t * x*_j`` must stay below
    ``k_j ** 2``; that holds whenever ``t <= j`` and the lengths are
    nondecreasing, and is asserted here.
    """
    R = len(family.blocks)
    for t, (I, xs) in enumerate(zip(family.blocks, family.coefficients), start=1):
        for j, xj in zip(I, xs):
            if j < t or xj > lengths[j - 1] - 1:
                raise CoordinateOverflow(f"block {t} index {j} breaks the coefficient bounds")
            if (lengths[t - 1] - 1) * xj > lengths[j - 1] ** 2 - 1:
                raise CoordinateOverflow(f"y_{j} exceeds k_{j}^2 - 1 in block {t}")
    maxima = family.maxima
    if max(maxima) > c1.depth:
        raise SpecError("blocks reach beyond the base triple")
    d = family.sums(dstar)
    triple = GridTriple(tuple(c1.bases[m - 1] for m in maxima), d, tuple(lengths[:R]))
    return Case1Witness(triple, d, color, family, maxima, c1)


# ---------------------------------------------------------------- Case 2


def case2_construct(
    dstar: Sequence[int],
    schedule: LengthSchedule,
    windows: Sequence[int],
    p: int,
    depth: int,
    forbidden: int = 0,
    excluded: FrozenSet[int] = frozenset(),
) -> Case2Witness:
    """Greedy triples ``(t_i, m_i, l*_i)``; the result obeys the gap law by construction."""
    if depth > len(windows):
        raise SpecError(f"need {depth} windows, got {len(windows)}")
    if not 1 <= p <= len(dstar):
        raise IndexExhausted(p, len(dstar))
    steps, newdiffs = [], []
    span = 0
    prev_end = p
    for i in range(1, depth + 1):
        W = windows[i - 1]
        m = schedule.first_at_least(W, after=prev_end)
        if m > len(dstar):
            raise IndexExhausted(m, len(dstar), {"level": i})
        t, total = 0, dstar[m - 1]
        if i > 1:
            while total <= span:
                t += 1
                if m + t > len(dstar):
                    raise IndexExhausted(m + t, len(dstar), {"level": i})
                total += dstar[m + t - 1]
        steps.append(Case2Step(t, m, total, schedule(m)))
        newdiffs.append(total)
        span += (W - 1) * total
        prev_end = m + t
    return Case2Witness(
        dstar[p - 1], tuple(newdiffs), tuple(windows[:depth]), forbidden,
        frozenset(excluded) | {forbidden}, tuple(steps), p, tuple(dstar[:prev_end]),
    )


def _block_from_element(x, w: Case2Witness, depth):
    """Rewrite an element of D or E as a weighted sum of the ``d*_j``."""
    W, l = w.windows[:depth], w.newdiffs[:depth]
    for base, with_p in ((w.base, True), (0, False)):
        coords = member(GridTriple((base,) * depth, l, W), depth, x)
        if coords is None:
            continue
        coef: Dict[int, int] = {w.p: 1} if with_p else {}
        for xi, step in zip(coords, w.trace):
            if xi:
                for j in range(step.m, step.m + step.t + 1):
                    coef[j] = coef.get(j, 0) + xi
        I = tuple(sorted(coef))
        if I and sum(coef[j] * w.dstar[j - 1] for j in I) == x:
            return I, tuple(coef[j] for j in I)
    return None


def _case2_index_estimate(schedule, windows, p, depth):
    prev = p
    for i in range(depth):
        prev = schedule.first_at_least(windows[i], after=prev)
    return prev


def _remaining_colors(c, excluded):
    return [col for col in range(1, c + 1) if col not in excluded]


def _windows_for(plan, schedule, c, n):
    sq = schedule.squared()
    out: List[int] = []
    for i in range(1, n + 1):
        out.append(window_for_level(plan, i, sq(i), c, out))
    return out


def _trivial_round(coloring, c, schedule, plan, budgets, base, diffs, windows, excluded, trace):
    (gamma,) = _remaining_colors(c, excluded)
    r = budgets.depth
    if windows is None:
        windows = _windows_for(plan, schedule, c, r)
    if diffs is None:
        diffs = minimal_diffs(windows[:r])
    if len(diffs) < r or len(windows) < r:
        return DichotomyOutcome("inconclusive", reason="ambient grid shallower than the witness depth", trace=trace)
    ks = schedule.prefix(r)
    if any(k > W for k, W in zip(ks, windows)):
        return DichotomyOutcome("inconclusive", reason="lengths exceed the windows", trace=trace)
    triple = GridTriple((base,) * r, tuple(diffs[:r]), tuple(ks))
    w = Case1Witness(triple, tuple(diffs[:r]), gamma)
    trace["trivial"] = True
    for verdict in (
        verify.verify_grid_witness(coloring, triple, gamma),
        verify.verify_dset(coloring, w.dset, gamma),
    ):
        if not verdict.ok:
            trace["verdict"] = verdict.to_json()
            return DichotomyOutcome(
                "inconclusive", reason="single remaining color not confirmed on the prefix", trace=trace
            )
    return DichotomyOutcome(1, w, trace=trace)


def dichotomy(
    coloring,
    c: int,
    schedule: LengthSchedule,
    plan: WindowPlan,
    budgets: Budgets,
    base: int = 1,
    diffs: Optional[Sequence[int]] = None,
    windows: Optional[Sequence[int]] = None,
    excluded: FrozenSet[int] = frozenset(),
    case2_depth: Optional[int] = None,
) -> DichotomyOutcome:
    """One round: Case 1, Case 2 (to ``case2_depth`` levels) or Inconclusive.

    ``diffs``/``windows`` fix the ambient grid (rounds after the first);
    ``excluded`` holds colors already ruled out on it.
    """
    if c < 1:
        raise SpecError("palette size must be at least 1")
    if not schedule.unbounded:
        raise SpecError(f"schedule {schedule.description} has no growth witness")
    excluded = frozenset(excluded)
    remaining = _remaining_colors(c, excluded)
    trace: dict = {"palette": remaining, "base": str(base)}
    if not remaining:
        raise SpecError("every color is excluded")
    if len(remaining) == 1:
        return _trivial_round(coloring, c, schedule, plan, budgets, base, diffs, windows, excluded, trace)

    r, R, H, s = budgets.depth, budgets.R, budgets.index_horizon, budgets.block_size
    case2_depth = case2_depth or r
    if windows is not None:
        plan = AssumedPlan(tuple(windows))
    limit = budgets.max_base_depth
    if diffs is not None:
        limit = min(limit, len(diffs))
    if windows is not None:
        limit = min(limit, len(windows))
    depth = max(r, R, min(H, limit))
    extra: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
    reentries = 0
    attempts = []
    trace["attempts"] = attempts
    cache: Dict[int, BaseRun] = {}
    while True:
        if depth > limit:
            return DichotomyOutcome(
                "inconclusive", reason=f"base depth {depth} exceeds the limit {limit}", trace=trace
            )
        if depth not in cache:
            cache[depth] = run_base(
                coloring, base, c, schedule, plan, depth, budgets.horizon,
                None if diffs is None else diffs[:depth], budgets.vdepth,
            )
        br = cache[depth]
        gamma = br.color
        ks = schedule.prefix(depth)
        attempt = {"base_depth": depth, "color": gamma, "windows": [str(v) for v in br.windows]}
        attempts.append(attempt)
        if gamma in excluded:
            return DichotomyOutcome(
                "inconclusive", reason=f"base run landed on excluded color {gamma}", trace=trace
            )
        Heff = min(H, depth)
        fam = case1_search(coloring, br.dstar, ks, gamma, R, Heff, s, extra)
        if fam is not None:
            w1 = case1_assemble(fam, br.c1, br.dstar, ks, gamma)
            checks = {
                "grid": verify.verify_grid_witness(coloring, w1.triple, gamma),
                "dset": verify.verify_dset(coloring, w1.dset, gamma),
                "containment": verify.verify_containment(w1.triple, br.c1, level_map=w1.level_map),
            }
            attempt["case1_checks"] = {k: v.to_json() for k, v in checks.items()}
            bad = [k for k, v in checks.items() if not v.ok]
            if bad:
                raise InternalError(f"Case 1 witness failed {bad}")
            return DichotomyOutcome(1, w1, trace=trace)

        p = case1_threshold(coloring, br.dstar, ks, gamma, Heff, s, extra)
        attempt["case1"] = "absent"
        attempt["p"] = p
        need = _case2_index_estimate(schedule, br.windows, p, case2_depth)
        if need > depth:
            log.debug("deepening base run %d -> %d for Case 2", depth, need)
            depth, extra = need, []
            continue
        try:
            w2 = case2_construct(br.dstar, schedule, br.windows, p, case2_depth, gamma, excluded)
        except IndexExhausted as exc:
            depth, extra = max(depth + 1, exc.needed), []
            continue
        vdepth = min(budgets.vdepth, case2_depth)
        verdict = verify.verify_case2(coloring, w2, vdepth)
        attempt["case2_verdict"] = verdict.to_json()
        if verdict.ok:
            return DichotomyOutcome(2, w2, trace=trace)
        if isinstance(verdict, verify.StructureFailure):
            raise InternalError(f"Case 2 witness failed its structure check: {verdict.description}")
        if verdict.found != gamma:
            return DichotomyOutcome(
                "inconclusive",
                reason=f"element {verdict.element} has previously excluded color {verdict.found}",
                trace=trace,
            )
        block = _block_from_element(verdict.element, w2, vdepth)
        if block is None or reentries >= budgets.max_reentries:
            return DichotomyOutcome(
                "inconclusive", reason="Case 2 prefix hit the target color; re-entry budget spent",
                trace=trace,
            )
        reentries += 1
        extra.append(block)
        attempt["reentry_block"] = [list(map(str, block[0])), list(map(str, block[1]))]


# ---------------------------------------------------------------- driver


@dataclass
class BrauerSchurWitness:
    triple: GridTriple
    dset: Tuple[int, ...]
    color: int
    rounds: List[dict]

    def to_json(self):
        out = self.triple.to_json()
        out["dset"] = [str(d) for d in self.dset]
        out["color"] = str(self.color)
        out["rounds"] = self.rounds
        return out


def _next_round_depth(c_next, budgets, schedule, windows):
    """Ambient depth the next round needs (t_i = 0 estimate for its Case 2)."""
    r = budgets.depth
    if c_next <= 1:
        return r
    inner = _next_round_depth(c_next - 1, budgets, schedule, windows)
    est = _case2_index_estimate(schedule, windows, budgets.index_horizon, inner) if len(windows) >= inner else r
    return max(r, budgets.R, budgets.index_horizon, est)


def brauer_schur(
    coloring, c: int, schedule: LengthSchedule, plan: WindowPlan, budgets: Budgets
) -> BrauerSchurWitness:
    """Iterate the dichotomy, dropping one color per Case 2, until Case 1."""
    if c < 1:
        raise SpecError("palette size must be at least 1")
    if not schedule.unbounded:
        raise SpecError(f"schedule {schedule.description} has no growth witness")
    base, diffs, windows = 1, None, None
    excluded: FrozenSet[int] = frozenset()
    rounds: List[dict] = []
    for _ in range(c):
        c_eff = c - len(excluded)
        known = list(windows) if windows is not None else _known_windows(plan)
        case2_depth = _next_round_depth(c_eff - 1, budgets, schedule, known)
        outcome = dichotomy(
            coloring, c, schedule, plan, budgets, base, diffs, windows, excluded, case2_depth
        )
        rounds.append(outcome.to_json())
        if outcome.case == 1:
            w = outcome.witness
            r = budgets.depth
            triple = w.triple.truncate(r)
            dset = w.dset[:r]
            for verdict in (
                verify.verify_grid_witness(coloring, triple, w.color),
                verify.verify_dset(coloring, dset, w.color),
            ):
                if not verdict.ok:
                    raise InternalError(f"final witness failed verification: {verdict}")
            return BrauerSchurWitness(triple, dset, w.color, rounds)
        if outcome.case == 2:
            w2 = outcome.witness
            base, diffs, windows, excluded = w2.base, w2.newdiffs, w2.windows, w2.excluded
            continue
        raise Inconclusive(outcome.reason, {"rounds": rounds})
    raise InternalError("the driver ran more rounds than there are colors")


def _known_windows(plan):
    return list(plan.windows) if isinstance(plan, AssumedPlan) else []
