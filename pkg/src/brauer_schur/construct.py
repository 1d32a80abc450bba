"""Monochromatic grid search and pigeonhole stabilization.

``find_mono_grid`` works top-down.  At level ``i`` the ambient set
``A_i`` splits into ``W_i`` translated copies of ``A_{i-1}``; copies are
labelled by their position-wise color tuples, a monochromatic progression of
length ``k_i`` is found among the labels, and the search descends into the
first copy of that progression.

``infinitary_vdw`` runs the search at every depth ``1..M`` over one fixed
ambient set and extracts a subsequence of witnesses whose colors agree and
whose difference prefixes stabilize.  Only finite truncations are produced;
the horizon ``M`` is a budget, not a bound derived from the argument.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import prod
from typing import List, Optional, Sequence, Tuple

from . import verify
from .coloring import ColoringOracle
from .errors import (
    BudgetExceeded,
    InternalError,
    PlanExhausted,
    SpecError,
    StabilizationFailed,
    WindowExhausted,
)
from .grid import GridTriple, gap_condition, grid_points, minimal_diffs
from .windows import (
    AdaptivePlan,
    WindowPlan,
    find_mono_ap,
    intern_labels,
    product_coloring,
    window_for_level,
)

log = logging.getLogger(__name__)

# Periodic colorings with a longer period are handled by enumeration.
MAX_FAST_PERIOD = 1 << 16
# Largest number of oracle queries one level of the grid search may issue.
MAX_LEVEL_QUERIES = 1_000_000


@dataclass(frozen=True)
class LevelParams:
    base: int
    diffs: Tuple[int, ...]
    windows: Tuple[int, ...]
    lengths: Tuple[int, ...]
    palette: int

    def __post_init__(self):
        for name in ("diffs", "windows", "lengths"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
        n = len(self.lengths)
        if n < 1 or len(self.diffs) != n or len(self.windows) != n:
            raise SpecError("diffs, windows and lengths must have the same positive length")
        if self.base < 1:
            raise SpecError(f"base must be positive, got {self.base}")
        if self.palette < 1:
            raise SpecError(f"palette must be positive, got {self.palette}")
        if self.lengths[0] < 2 or any(a > b for a, b in zip(self.lengths, self.lengths[1:])):
            raise SpecError(f"lengths must satisfy 2 <= k_1 <= k_2 <= ...: {self.lengths}")
        if not gap_condition(self.diffs, self.windows):
            raise SpecError(f"differences {self.diffs} violate the gap condition for {self.windows}")

    @classmethod
    def auto(cls, base, windows, lengths, palette):
        return cls(base, tuple(minimal_diffs(windows)), tuple(windows), tuple(lengths), palette)

    @property
    def depth(self):
        return len(self.lengths)

    def ambient(self) -> GridTriple:
        return GridTriple.constant_base(self.base, self.diffs, self.windows)


@dataclass(frozen=True)
class GridWitness:
    base: int
    diffs: Tuple[int, ...]
    alphas: Tuple[int, ...]
    lengths: Tuple[int, ...]
    color: int
    params: Optional[LevelParams] = field(default=None, compare=False)
    # (level, start, step) per level, top level first
    trace: Tuple[Tuple[int, int, int], ...] = field(default=(), compare=False)

    @property
    def depth(self):
        return len(self.diffs)

    def triple(self) -> GridTriple:
        return GridTriple.constant_base(self.base, self.diffs, self.lengths)

    def to_json(self) -> dict:
        out = {
            "base": str(self.base),
            "diffs": [str(d) for d in self.diffs],
            "alphas": [str(a) for a in self.alphas],
            "lengths": [str(k) for k in self.lengths],
            "color": str(self.color),
        }
        if self.params is not None:
            out["ambient"] = {
                "base": str(self.params.base),
                "diffs": [str(v) for v in self.params.diffs],
                "windows": [str(v) for v in self.params.windows],
            }
        return out


def _residues(base, diffs, windows, p):
    res = {base % p}
    for d, w in zip(diffs, windows):
        res = {(r + x * d) % p for r in res for x in range(min(w, p))}
    return sorted(res)


def _induced_word(coloring, base, lower_diffs, lower_windows, l, W) -> List[int]:
    """Labels of the W translates ``A_{i-1} + j*l`` under the product coloring."""
    p = coloring.period
    if p is not None and p <= MAX_FAST_PERIOD:
        # For a p-periodic coloring a translate's color tuple is determined by
        # the shift mod p acting on the residues of A_{i-1}.
        res = _residues(base, lower_diffs, lower_windows, p)
        sigs = [
            tuple(coloring((r + j * l - 1) % p + 1) for r in res) for j in range(W)
        ]
        return intern_labels(sigs)
    size = W * prod(lower_windows)
    if size > MAX_LEVEL_QUERIES:
        raise BudgetExceeded(f"level needs {size} queries, over the limit {MAX_LEVEL_QUERIES}")
    pts = grid_points(base, lower_diffs, lower_windows)
    return product_coloring(coloring, [[x + j * l for x in pts] for j in range(W)])


def find_mono_grid(coloring: ColoringOracle, params: LevelParams) -> GridWitness:
    a = params.base
    n = params.depth
    diffs = [0] * n
    alphas = [0] * n
    trace = []
    for i in range(n, 0, -1):
        l, W, k = params.diffs[i - 1], params.windows[i - 1], params.lengths[i - 1]
        word = _induced_word(coloring, a, params.diffs[: i - 1], params.windows[: i - 1], l, W)
        ap = find_mono_ap(word, k)
        if ap is None:
            raise WindowExhausted(i, trace={"level": i, "window": W, "length": k, "base": a})
        trace.append((i, ap.start, ap.step))
        a += ap.start * l
        diffs[i - 1] = ap.step * l
        alphas[i - 1] = ap.step
    return GridWitness(
        a, tuple(diffs), tuple(alphas), params.lengths, coloring(a), params, tuple(trace)
    )


@dataclass(frozen=True)
class WitnessDescriptor:
    index: int
    base: int
    diffs: Tuple[int, ...]
    color: int
    witness: Optional[GridWitness] = field(default=None, compare=False)


@dataclass
class DescriptorRun:
    descriptors: List[WitnessDescriptor]
    windows: List[int]
    diffs: List[int]
    regrowths: int = 0


def _extend_windows(windows, plan, lengths, palette, upto, attempts):
    while len(windows) < upto:
        i = len(windows) + 1
        windows.append(
            window_for_level(plan, i, lengths[i - 1], palette, windows, attempts.get(i, 0))
        )


def generate_descriptors(
    coloring: ColoringOracle,
    base: int,
    plan: WindowPlan,
    lengths: Sequence[int],
    horizon: int,
    diffs: Optional[Sequence[int]] = None,
    palette: Optional[int] = None,
) -> DescriptorRun:
    """Grid witnesses at depths ``1..horizon`` inside one ambient set.

    With an adaptive plan a failing level has its window regrown and the
    whole run restarts, so every descriptor shares the same windows.
    """
    if horizon < 1:
        raise SpecError("horizon must be at least 1")
    if len(lengths) < horizon:
        raise SpecError(f"need {horizon} lengths, got {len(lengths)}")
    if diffs is not None and len(diffs) < horizon:
        raise SpecError(f"need {horizon} differences, got {len(diffs)}")
    palette = palette or coloring.palette_size
    windows: List[int] = []
    attempts = {}
    regrowths = 0
    while True:
        out: List[WitnessDescriptor] = []
        try:
            for m in range(1, horizon + 1):
                _extend_windows(windows, plan, lengths, palette, m, attempts)
                l = list(diffs[:m]) if diffs is not None else minimal_diffs(windows[:m])
                params = LevelParams(base, l, windows[:m], lengths[:m], palette)
                w = find_mono_grid(coloring, params)
                for i in range(m):
                    if w.diffs[i] > (windows[i] - 1) * l[i]:
                        raise InternalError(f"d_{i + 1}^{m} exceeds (W_{i + 1} - 1) l_{i + 1}")
                out.append(WitnessDescriptor(m, w.base, w.diffs, w.color, w))
            break
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), exc.trace, out) from None
        except WindowExhausted as exc:
            if not isinstance(plan, AdaptivePlan):
                raise WindowExhausted(exc.level, out, exc.trace) from None
            i = exc.level
            attempts[i] = attempts.get(i, 0) + 1
            try:
                grown = window_for_level(plan, i, lengths[i - 1], palette, windows, attempts[i])
            except PlanExhausted:
                raise WindowExhausted(i, out, exc.trace) from None
            log.debug("regrowing window at level %d: %d -> %d", i, windows[i - 1], grown)
            del windows[i - 1 :]
            windows.append(grown)
            regrowths += 1
    l = list(diffs[:horizon]) if diffs is not None else minimal_diffs(windows)
    return DescriptorRun(out, windows, l, regrowths)


@dataclass(frozen=True)
class Stabilized:
    indices: Tuple[int, ...]  # 1-based positions n_1 < ... < n_r
    bases: Tuple[int, ...]
    diffs: Tuple[int, ...]
    color: int


def stabilize(descriptors: Sequence[WitnessDescriptor], depth: int) -> Optional[Stabilized]:
    """Lexicographically least n_1 < ... < n_r with one color and stable prefixes.

    Requires ``d_i`` of descriptor ``n_j`` to equal ``d_i`` of ``n_i`` for all
    ``i <= j``; the result uses ``a_i = b_{n_i}`` and ``d_i = d_i^{n_i}``.
    """
    if depth < 1:
        raise SpecError("stabilization depth must be at least 1")
    M = len(descriptors)
    chosen: List[int] = []

    def compatible(q):
        cand = descriptors[q]
        if len(cand.diffs) < len(chosen) + 1:
            return False
        if chosen and cand.color != descriptors[chosen[0]].color:
            return False
        return all(cand.diffs[i] == descriptors[chosen[i]].diffs[i] for i in range(len(chosen)))

    def search(start):
        j = len(chosen)
        if j == depth:
            return True
        for q in range(start, M - (depth - j) + 1):
            if compatible(q):
                chosen.append(q)
                if search(q + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        return None
    picks = [descriptors[q] for q in chosen]
    return Stabilized(
        tuple(q + 1 for q in chosen),
        tuple(p.base for p in picks),
        tuple(picks[i].diffs[i] for i in range(depth)),
        picks[0].color,
    )


@dataclass(frozen=True)
class VdwWitness:
    triple: GridTriple
    color: int
    indices: Tuple[int, ...]
    windows: Tuple[int, ...]
    source_diffs: Tuple[int, ...]
    alphas: Tuple[int, ...]
    generated: int
    verified_depth: int
    trace: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        out = self.triple.to_json()
        out.update(
            color=str(self.color),
            indices=[str(i) for i in self.indices],
            alphas=[str(a) for a in self.alphas],
            ambient={
                "diffs": [str(v) for v in self.source_diffs],
                "windows": [str(v) for v in self.windows],
            },
        )
        return out


def infinitary_vdw(
    coloring: ColoringOracle,
    base: int,
    plan: WindowPlan,
    lengths: Sequence[int],
    depth: int,
    horizon: int,
    diffs: Optional[Sequence[int]] = None,
    verify_depth: Optional[int] = None,
    palette: Optional[int] = None,
) -> VdwWitness:
    """Stabilized triple of depth ``depth`` from descriptors ``1..horizon``.

    If the search at some depth ``m > depth`` runs out of window (or of
    enumeration budget), the
    descriptors already built are stabilized instead; the result then says how
    many were generated.  The witness is checked by the independent verifier
    up to ``verify_depth`` (default: all levels).
    """
    if horizon < depth:
        raise SpecError(f"horizon {horizon} is below the depth {depth}")
    truncated = None
    try:
        run = generate_descriptors(coloring, base, plan, lengths, horizon, diffs, palette)
        descs, windows, l = run.descriptors, run.windows, run.diffs
    except (WindowExhausted, BudgetExceeded) as exc:
        if len(exc.partial) < depth:
            raise
        descs = exc.partial
        truncated = getattr(exc, "level", len(descs) + 1)
        windows = list(descs[-1].witness.params.windows)
        l = list(descs[-1].witness.params.diffs)
    st = stabilize(descs, depth)
    trace = {
        "generated": len(descs),
        "truncated_at_level": truncated,
        "descriptor_colors": [d.color for d in descs],
        "windows": list(windows),
    }
    if st is None:
        raise StabilizationFailed(depth, horizon, trace)
    triple = GridTriple(st.bases, st.diffs, tuple(lengths[:depth]))
    vdepth = depth if verify_depth is None else min(verify_depth, depth)
    verdict = verify.verify_grid_witness(coloring, triple, st.color, vdepth)
    if not verdict.ok:
        raise InternalError(f"stabilized witness failed verification: {verdict}")
    alphas = tuple(d // li for d, li in zip(st.diffs, l))
    trace["indices"] = list(st.indices)
    return VdwWitness(
        triple, st.color, st.indices, tuple(windows[:depth]), tuple(l[:depth]),
        alphas, len(descs), vdepth, trace,
    )
