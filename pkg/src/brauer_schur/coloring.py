"""Colorings of the positive integers.

A coloring is a rule, not an array: oracles answer ``oracle(n)`` for any
``n >= 1`` and never change their answer.  Colors are 1-based, drawn from
``{1, ..., palette_size}``.

Mini-language accepted by :func:`make_coloring`::

    const:<g>            every n gets color g
    periodic:<c1,c2,..>  n gets word[(n - 1) mod len(word)]
    rand:<seed>:<c>      64-bit SplitMix-style hash of (seed, n), reduced mod c
    file:<path>:<c>      whitespace separated integers; entry i is the color of i
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

from .errors import SpecError, SupportExhausted

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class ColoringOracle:
    """Common surface of every coloring.

    Subclasses set ``palette_size`` and implement ``color``.  ``period`` is a
    positive integer when the coloring is known to be periodic, else None;
    searchers may use it to avoid enumerating large sets.
    """

    palette_size: int
    period: Optional[int] = None

    def color(self, n: int) -> int:
        raise NotImplementedError

    def __call__(self, n: int) -> int:
        if n < 1:
            raise SpecError(f"colorings are defined on positive integers, got {n}")
        return self.color(n)

    def spec_string(self) -> str:
        raise NotImplementedError


def _check_palette(c):
    if not isinstance(c, int) or c < 1:
        raise SpecError(f"palette size must be a positive integer, got {c!r}")


@dataclass(frozen=True)
class Constant(ColoringOracle):
    gamma: int
    palette_size: int = 0
    period = 1

    def __post_init__(self):
        if self.palette_size == 0:
            object.__setattr__(self, "palette_size", self.gamma)
        _check_palette(self.palette_size)
        if not 1 <= self.gamma <= self.palette_size:
            raise SpecError(f"color {self.gamma} outside palette [1, {self.palette_size}]")

    def color(self, n):
        return self.gamma

    def spec_string(self):
        return f"const:{self.gamma}"


@dataclass(frozen=True)
class Periodic(ColoringOracle):
    word: Tuple[int, ...]
    palette_size: int = 0

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(w) for w in self.word))
        if not self.word:
            raise SpecError("periodic word must be nonempty")
        if self.palette_size == 0:
            object.__setattr__(self, "palette_size", max(self.word))
        _check_palette(self.palette_size)
        bad = [w for w in self.word if not 1 <= w <= self.palette_size]
        if bad:
            raise SpecError(f"periodic word has colors outside [1, {self.palette_size}]: {bad}")

    @property
    def period(self):
        return len(self.word)

    def color(self, n):
        return self.word[(n - 1) % len(self.word)]

    def spec_string(self):
        return "periodic:" + ",".join(map(str, self.word))


def splitmix_color(seed: int, n: int, c: int) -> int:
    z = (seed + n * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    z ^= z >> 31
    return z % c + 1


@dataclass(frozen=True)
class SeededRandom(ColoringOracle):
    seed: int
    palette_size: int

    def __post_init__(self):
        _check_palette(self.palette_size)
        if not 0 <= self.seed <= MASK64:
            raise SpecError(f"seed must fit in 64 bits, got {self.seed}")

    def color(self, n):
        return splitmix_color(self.seed, n, self.palette_size)

    def spec_string(self):
        return f"rand:{self.seed}:{self.palette_size}"


@dataclass(frozen=True)
class Table(ColoringOracle):
    """Finite coloring given by its values on ``1..len(values)``."""

    values: Tuple[int, ...]
    palette_size: int
    source: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        _check_palette(self.palette_size)
        bad = [v for v in self.values if not 1 <= v <= self.palette_size]
        if bad:
            raise SpecError(f"table has colors outside [1, {self.palette_size}]: {bad[:5]}")

    def color(self, n):
        if n > len(self.values):
            raise SupportExhausted(n)
        return self.values[n - 1]

    def spec_string(self):
        if self.source is not None:
            return f"file:{self.source}:{self.palette_size}"
        return "table:" + ",".join(map(str, self.values))


def FromFile(path: Union[str, Path], palette_size: int) -> Table:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecError(f"cannot read coloring file {path}: {exc}") from None
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError:
        raise SpecError(f"coloring file {path} must contain integers only") from None
    return Table(values, palette_size, source=str(path))


def _ints(text, what):
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise SpecError(f"malformed {what}: {text!r}") from None


def parse_coloring(text: str) -> ColoringOracle:
    """Parse the coloring mini-language (see module docstring)."""
    kind, _, rest = text.partition(":")
    if kind == "const":
        vals = _ints(rest.replace(":", ","), "constant coloring")
        if len(vals) not in (1, 2):
            raise SpecError(f"expected const:<g>[:<c>], got {text!r}")
        return Constant(*vals)
    if kind == "periodic":
        return Periodic(tuple(_ints(rest, "periodic word")))
    if kind == "rand":
        parts = rest.split(":")
        if len(parts) != 2:
            raise SpecError(f"expected rand:<seed>:<c>, got {text!r}")
        seed, c = (_ints(p, "random coloring")[0] if p else None for p in parts)
        if seed is None or c is None:
            raise SpecError(f"expected rand:<seed>:<c>, got {text!r}")
        return SeededRandom(seed, c)
    if kind == "file":
        path, sep, c = rest.rpartition(":")
        if not sep or not path:
            raise SpecError(f"expected file:<path>:<c>, got {text!r}")
        return FromFile(path, _ints(c, "palette size")[0])
    if kind == "table":
        vals = _ints(rest, "table")
        return Table(vals, max(vals) if vals else 1)
    raise SpecError(f"unknown coloring kind {kind!r} in {text!r}")


def make_coloring(spec: Union[str, ColoringOracle]) -> ColoringOracle:
    if isinstance(spec, ColoringOracle):
        return spec
    if isinstance(spec, str):
        return parse_coloring(spec)
    raise SpecError(f"cannot build a coloring from {spec!r}")


def color_of(oracle: ColoringOracle, n: int) -> int:
    return oracle(n)


def colors(oracle: ColoringOracle, points: Sequence[int]) -> Tuple[int, ...]:
    return tuple(oracle(p) for p in points)
