"""Exact translate-set model for the half-open unit cube [0,1)^d.

Coordinates are ``fractions.Fraction`` and points are plain tuples of them.
A :class:`TranslateSet` is either a finite list of translates or a periodic
set ``{offset + period * k : k in Z^d}`` with integer periods.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple, Union

Point = Tuple[Fraction, ...]
RationalLike = Union[int, Fraction, str]

FINITE = "finite"
PERIODIC = "periodic"


class CubesetError(ValueError):
    """Base class for malformed translate sets."""


class DuplicateTranslate(CubesetError):
    """The input names one translate twice (possibly modulo the period)."""


class DimensionMismatch(CubesetError):
    pass


def to_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point coordinates are not accepted; use 'p/q' strings")
    return Fraction(value)


def to_point(coords: Iterable[RationalLike]) -> Point:
    return tuple(to_fraction(c) for c in coords)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_point(p: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(c) for c in p) + ")"


def add(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Point, q: Point) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def scale(p: Point, s: RationalLike) -> Point:
    s = to_fraction(s)
    return tuple(a * s for a in p)


def unit(d: int, axis: int) -> Point:
    return tuple(Fraction(int(j == axis)) for j in range(d))


def is_integral(x: Fraction) -> bool:
    return x.denominator == 1


def frac(x: Fraction) -> Fraction:
    """Fractional part in [0, 1)."""
    return x - math.floor(x)


def reduce_mod(p: Point, period: Sequence[int]) -> Point:
    return tuple(c % n for c, n in zip(p, period))


@dataclass(frozen=True)
class TranslateSet:
    """A finite or periodic set of cube translates.

    Build instances with :meth:`finite` or :meth:`periodic`; both return the
    canonical form (reduced rationals, offsets reduced modulo the period and
    sorted lexicographically).
    """

    dim: int
    mode: str
    offsets: Tuple[Point, ...]
    period: Tuple[int, ...] | None = None

    @classmethod
    def finite(cls, points: Iterable[Iterable[RationalLike]], dim: int | None = None) -> "TranslateSet":
        pts = tuple(to_point(p) for p in points)
        if dim is None:
            if not pts:
                raise CubesetError("cannot infer dimension of an empty set")
            dim = len(pts[0])
        return canonicalize(cls(dim, FINITE, pts, None))

    @classmethod
    def periodic(cls, period: Sequence[int], offsets: Iterable[Iterable[RationalLike]]) -> "TranslateSet":
        period = tuple(int(n) for n in period)
        pts = tuple(to_point(p) for p in offsets)
        return canonicalize(cls(len(period), PERIODIC, pts, period))

    @property
    def is_periodic(self) -> bool:
        return self.mode == PERIODIC

    def __len__(self) -> int:
        return len(self.offsets)

    def __contains__(self, point) -> bool:
        p = to_point(point)
        if len(p) != self.dim:
            return False
        if self.is_periodic:
            p = reduce_mod(p, self.period)
        return p in self._index

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.offsets)

    @cached_property
    def floor_buckets(self) -> dict:
        """Translates grouped by the floor of each coordinate."""
        out: dict = {}
        for t in self.offsets:
            out.setdefault(tuple(math.floor(c) for c in t), []).append(t)
        return out

    def density(self) -> Fraction:
        """Translates per unit volume (periodic sets only)."""
        if not self.is_periodic:
            raise CubesetError("density is defined for periodic sets only")
        return Fraction(len(self.offsets), math.prod(self.period))

    def without(self, point) -> "TranslateSet":
        p = to_point(point)
        if self.is_periodic:
            p = reduce_mod(p, self.period)
        if p not in self._index:
            raise KeyError(format_point(p))
        rest = [o for o in self.offsets if o != p]
        if self.is_periodic:
            return TranslateSet.periodic(self.period, rest)
        return TranslateSet.finite(rest, dim=self.dim)

    def replace_offsets(self, offsets: Iterable[Iterable[RationalLike]]) -> "TranslateSet":
        if self.is_periodic:
            return TranslateSet.periodic(self.period, offsets)
        return TranslateSet.finite(offsets, dim=self.dim)


def canonicalize(s: TranslateSet) -> TranslateSet:
    """Reduce, wrap periodic offsets into the period box and sort.

    Raises DuplicateTranslate if two offsets coincide after reduction.
    """
    if s.dim < 1:
        raise CubesetError("dimension must be >= 1")
    if s.mode not in (FINITE, PERIODIC):
        raise CubesetError(f"unknown mode {s.mode!r}")
    pts = []
    for p in s.offsets:
        p = to_point(p)
        if len(p) != s.dim:
            raise DimensionMismatch(f"point {format_point(p)} is not {s.dim}-dimensional")
        pts.append(p)
    period = None
    if s.mode == PERIODIC:
        if s.period is None or len(s.period) != s.dim:
            raise CubesetError("periodic set needs one period per axis")
        period = tuple(int(n) for n in s.period)
        if any(n <= 0 for n in period):
            raise CubesetError("periods must be positive integers")
        pts = [reduce_mod(p, period) for p in pts]
    pts.sort()
    for a, b in zip(pts, pts[1:]):
        if a == b:
            raise DuplicateTranslate(f"translate {format_point(a)} appears twice")
    return TranslateSet(s.dim, s.mode, tuple(pts), period)


def common_denominator(s: TranslateSet) -> int:
    """Least common multiple of every coordinate denominator (1 if empty)."""
    return math.lcm(1, *(c.denominator for p in s.offsets for c in p))


def translate(s: TranslateSet, v: Sequence[RationalLike]) -> TranslateSet:
    """The set s + v."""
    v = to_point(v)
    if len(v) != s.dim:
        raise DimensionMismatch("translation vector has wrong dimension")
    return s.replace_offsets(add(p, v) for p in s.offsets)


@dataclass(frozen=True)
class Window:
    """Axis-aligned box with rational corners.

    Open on both sides by default; ``closed_lower=True`` gives the half-open
    box [lower, upper), used for period boxes.
    """

    lower: Point
    upper: Point
    closed_lower: bool = False

    def __post_init__(self):
        lo, hi = to_point(self.lower), to_point(self.upper)
        if len(lo) != len(hi):
            raise DimensionMismatch("window corners differ in dimension")
        if any(a >= b for a, b in zip(lo, hi)):
            raise ValueError("window lower corner must be strictly below the upper corner")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def radius(cls, n: RationalLike, dim: int) -> "Window":
        """The working box (-n-1, n+1)^dim."""
        n = to_fraction(n)
        if n <= 0:
            raise ValueError("radius must be positive")
        return cls((-n - 1,) * dim, (n + 1,) * dim)

    @classmethod
    def cube(cls, lo: RationalLike, hi: RationalLike, dim: int, closed_lower: bool = False) -> "Window":
        return cls((to_fraction(lo),) * dim, (to_fraction(hi),) * dim, closed_lower)

    @classmethod
    def period_box(cls, s: TranslateSet) -> "Window":
        return cls((Fraction(0),) * s.dim, tuple(Fraction(n) for n in s.period), True)

    @property
    def dim(self) -> int:
        return len(self.lower)

    def shifted(self, v: Sequence[RationalLike]) -> "Window":
        v = to_point(v)
        return Window(add(self.lower, v), add(self.upper, v), self.closed_lower)

    def __contains__(self, p) -> bool:
        if self.closed_lower:
            return all(a <= c < b for a, c, b in zip(self.lower, p, self.upper))
        return all(a < c < b for a, c, b in zip(self.lower, p, self.upper))

    def contains_window(self, other: "Window") -> bool:
        for a, b, c, d in zip(self.lower, self.upper, other.lower, other.upper):
            if c < a or d > b:
                return False
            if c == a and other.closed_lower and not self.closed_lower:
                return False
        return True


def _k_range(offset: Fraction, period: int, lo: Fraction, hi: Fraction, closed_lower: bool) -> range:
    # integers k with lo < offset + period*k < hi (lo <= ... if closed_lower)
    a = (lo - offset) / period
    b = (hi - offset) / period
    k_lo = math.ceil(a) if closed_lower else math.floor(a) + 1
    k_hi = math.ceil(b) - 1
    return range(k_lo, k_hi + 1)


def iter_window(s: TranslateSet, w: Window) -> Iterator[Point]:
    """Unsorted translates of ``s`` inside ``w``."""
    if w.dim != s.dim:
        raise DimensionMismatch("window and set differ in dimension")
    if not s.is_periodic:
        yield from (p for p in s.offsets if p in w)
        return
    for o in s.offsets:
        ranges = [
            _k_range(c, n, lo, hi, w.closed_lower)
            for c, n, lo, hi in zip(o, s.period, w.lower, w.upper)
        ]
        for k in itertools.product(*ranges):
            yield tuple(c + n * kj for c, n, kj in zip(o, s.period, k))


def enumerate_window(s: TranslateSet, w: Window) -> list:
    """All translates of the (possibly infinite) set lying in ``w``, sorted.

    Finite sets simply return the members inside the window, even when the
    window extends past the data.
    """
    return sorted(iter_window(s, w))
