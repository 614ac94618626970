"""Sliding rewrites of translate sets.

``slide`` moves by ``shift`` along ``axis`` every translate whose axis
coordinate is not congruent to ``anchor`` modulo 1.  Slides preserve both the
tiling property and orthogonality, which makes them the basic move for
``keller_shift`` and for ``integerize``.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .analysis import check_orthogonality
from .exact import (
    DuplicateTranslate,
    Point,
    RationalLike,
    TranslateSet,
    Window,
    enumerate_window,
    format_point,
    format_rational,
    frac,
    to_fraction,
    to_point,
    translate,
)


class TranslateCollision(ValueError):
    """Two translates were mapped to the same point (input was not a packing)."""


@dataclass(frozen=True)
class SlideSpec:
    axis: int
    anchor: Fraction
    shift: Fraction

    def __post_init__(self):
        if self.axis < 0:
            raise ValueError("axis must be non-negative")
        object.__setattr__(self, "anchor", to_fraction(self.anchor))
        object.__setattr__(self, "shift", to_fraction(self.shift))

    def moves(self, p: Point) -> bool:
        return (p[self.axis] - self.anchor).denominator != 1

    def __str__(self) -> str:
        return (f"slide(axis={self.axis + 1}, anchor={format_rational(self.anchor)}, "
                f"shift={format_rational(self.shift)})")


def slide_point(p: Point, spec: SlideSpec) -> Point:
    if not spec.moves(p):
        return p
    return p[:spec.axis] + (p[spec.axis] + spec.shift,) + p[spec.axis + 1:]


def slide(s: TranslateSet, spec: SlideSpec) -> TranslateSet:
    """Image of the set under the slide; raises TranslateCollision on a clash."""
    if spec.axis >= s.dim:
        raise ValueError(f"axis {spec.axis} out of range for a {s.dim}-dimensional set")
    try:
        return s.replace_offsets(slide_point(p, spec) for p in s.offsets)
    except DuplicateTranslate as exc:
        raise TranslateCollision(str(exc)) from None


def keller_shift(s: TranslateSet, t: Sequence[RationalLike], t_prime: Sequence[RationalLike],
                 axis: int = 0) -> TranslateSet:
    """Slide so that ``t`` and ``t_prime`` end up with equal ``axis`` coordinate.

    The class of ``t`` (translates congruent to ``t`` mod 1 on ``axis``)
    moves by ``t_prime[axis] - t[axis]`` and everything else stays put.  This
    is a slide followed by a global translation, so tilings stay tilings.
    """
    t, t_prime = to_point(t), to_point(t_prime)
    for p in (t, t_prime):
        if p not in s:
            raise ValueError(f"{format_point(p)} is not a translate of the set")
    gap = t[axis] - t_prime[axis]
    if gap.denominator == 1:
        raise ValueError(f"axis gap {format_rational(gap)} is an integer; nothing to shift")
    shifted = slide(s, SlideSpec(axis, t[axis], gap))
    back = tuple(-gap if j == axis else Fraction(0) for j in range(s.dim))
    return translate(shifted, back)


# -- integerization ----------------------------------------------------------

def _line_key(p: Point, axis: int) -> tuple:
    # Q+p meets the line {x_j = n_j, j != axis} iff n_j - 1 < p_j <= n_j
    return tuple(math.ceil(c) for j, c in enumerate(p) if j != axis)


def _working_points(s: TranslateSet, n: int) -> List[Point]:
    if s.is_periodic:
        # every point that can drift into the working box by less than 1 per axis
        return enumerate_window(s, Window.radius(n + 2, s.dim))
    return list(s.offsets)


def integerize_plan(s: TranslateSet, n: int, line_order: Optional[Sequence[tuple]] = None,
                    check: bool = True) -> List[SlideSpec]:
    """Slides (anchor 0) that make every translate in (-n, n)^d integral.

    Axes are processed in turn.  Within an axis the lines
    ``{x_j = n_j for j != axis}``, n_j in -n..n+1, are visited in
    lexicographic order (or ``line_order``).  For the first cube of the
    working box (-n-1, n+1)^d meeting a line, with fractional part f on the
    active axis, the whole non-integral class slides by -b where b is f or
    f - 1, chosen so the running total of b stays in [0, 1).  Every translate
    therefore moves by less than 1 along each axis.
    """
    n = int(n)
    if n < 1:
        raise ValueError("N must be a positive integer")
    box = Window.radius(n, s.dim)
    if check:
        report = check_orthogonality(s, box, limit=1)
        if report:
            t, u = report.pairs[0]
            raise ValueError(f"set is not orthogonal in the working window: "
                             f"{format_point(t)} | {format_point(u)}")
    pts = _working_points(s, n)
    plan: List[SlideSpec] = []
    for axis in range(s.dim):
        lines = defaultdict(list)
        for i, p in enumerate(pts):
            lines[_line_key(p, axis)].append(i)
        order = line_order if line_order is not None else itertools.product(range(-n, n + 2), repeat=s.dim - 1)
        total = Fraction(0)
        for line in order:
            members = [pts[i] for i in lines.get(tuple(line), ()) if pts[i] in box]
            if not members:
                continue
            f = frac(min(members)[axis])
            if f == 0:
                continue
            b = f if total + f < 1 else f - 1
            total += b
            spec = SlideSpec(axis, Fraction(0), -b)
            plan.append(spec)
            pts = [slide_point(p, spec) for p in pts]
    return plan


def integerize_steps(s: TranslateSet, n: int, **kwargs) -> Iterator[Tuple[SlideSpec, TranslateSet]]:
    """Yield each slide of the plan together with the set after it."""
    for spec in integerize_plan(s, n, **kwargs):
        s = slide(s, spec)
        yield spec, s


def integerize(s: TranslateSet, n: int, **kwargs) -> TranslateSet:
    for _, s in integerize_steps(s, n, **kwargs):
        pass
    return s
