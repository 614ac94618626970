"""Exact tiling decisions for periodic translate sets.

A periodic set with integer periods N_j and offsets on the 1/q grid tiles
R^d iff its cubes, wrapped onto the torus prod_j [0, N_j), cover every
grid cell of side 1/q exactly once.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .exact import (
    Point,
    TranslateSet,
    Window,
    common_denominator,
    enumerate_window,
    format_point,
    reduce_mod,
)
from .exact_cover import ExactCover

DEFAULT_CELL_BUDGET = 10 ** 8

TILES = "tiles"
OVERLAP = "overlap"
HOLE = "hole"


class GridTooLarge(ValueError):
    pass


class NotPeriodic(ValueError):
    pass


@dataclass
class TorusGrid:
    period: Tuple[int, ...]
    denominator: int
    multiplicity: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.period)

    def cell_corner(self, cell: Sequence[int]) -> Point:
        return tuple(Fraction(int(i), self.denominator) for i in cell)

    def cell_center(self, cell: Sequence[int]) -> Point:
        return tuple(Fraction(2 * int(i) + 1, 2 * self.denominator) for i in cell)


@dataclass
class TilingVerdict:
    """Outcome of the cover check.

    ``cell`` is the lower corner of the witness grid cell (side
    1/``denominator``); ``translates`` holds the two covering translates for
    an overlap.
    """

    outcome: str
    cell: Optional[Point] = None
    translates: Tuple[Point, ...] = ()
    denominator: int = 1

    @property
    def tiles(self) -> bool:
        return self.outcome == TILES

    def __str__(self) -> str:
        if self.outcome == TILES:
            return "TILES"
        if self.outcome == HOLE:
            return f"HOLE at {format_point(self.cell)}"
        t, u = self.translates
        return f"OVERLAP at {format_point(self.cell)}: {format_point(t)} | {format_point(u)}"


def _require_periodic(s: TranslateSet) -> None:
    if not s.is_periodic:
        raise NotPeriodic("tiling of R^d is decided for periodic sets only; use hole_finder for finite sets")


def _grid_shape(period: Sequence[int], q: int, budget: int) -> Tuple[int, ...]:
    shape = tuple(n * q for n in period)
    cells = math.prod(shape)
    if cells > budget:
        raise GridTooLarge(f"torus grid needs {cells} cells, budget is {budget}")
    return shape


def _cube_cells(offset: Point, q: int, shape: Sequence[int]) -> List[np.ndarray]:
    # half-open cube [t, t+1) covers grid indices t*q .. t*q + q - 1 on each axis
    return [(int(c * q) + np.arange(q)) % m for c, m in zip(offset, shape)]


def torus_cover_map(s: TranslateSet, budget: int = DEFAULT_CELL_BUDGET,
                    denominator: Optional[int] = None) -> TorusGrid:
    """Per-cell cover multiplicity of the set wrapped onto one period torus."""
    _require_periodic(s)
    q = denominator or common_denominator(s)
    if q % common_denominator(s):
        raise ValueError("grid denominator must be a multiple of the set's common denominator")
    shape = _grid_shape(s.period, q, budget)
    grid = np.zeros(shape, dtype=np.int32)
    for o in s.offsets:
        grid[np.ix_(*_cube_cells(o, q, shape))] += 1
    return TorusGrid(s.period, q, grid)


def _covering_translates(s: TranslateSet, point: Point) -> List[Point]:
    """Translates t of the periodic set with point in [t, t+1)^d, sorted."""
    out = []
    for o in s.offsets:
        t = []
        for c, x, n in zip(o, point, s.period):
            # unique k with c + n*k <= x < c + n*k + 1, if any (n >= 1)
            k = math.floor((x - c) / n)
            tj = c + n * k
            if not tj <= x < tj + 1:
                break
            t.append(tj)
        else:
            out.append(tuple(t))
    return sorted(out)


def check_tiling(s: TranslateSet, budget: int = DEFAULT_CELL_BUDGET) -> TilingVerdict:
    """Decide whether the periodic set tiles R^d by unit cubes."""
    _require_periodic(s)
    expected = math.prod(s.period)
    grid = torus_cover_map(s, budget)
    mult = grid.multiplicity
    count = len(s.offsets)
    if count < expected:
        bad = np.argwhere(mult == 0)
    elif count > expected:
        bad = np.argwhere(mult >= 2)
    else:
        bad = np.argwhere(mult >= 2)
        if len(bad) == 0:
            return TilingVerdict(TILES, denominator=grid.denominator)
    cell = tuple(int(i) for i in bad[0])
    corner = grid.cell_corner(cell)
    if mult[cell] == 0:
        return TilingVerdict(HOLE, corner, (), grid.denominator)
    t, u = _covering_translates(s, grid.cell_center(cell))[:2]
    return TilingVerdict(OVERLAP, corner, (t, u), grid.denominator)


def hole_cell_samples(s: TranslateSet, verdict: TilingVerdict) -> List[Point]:
    """Sample points attached to a hole witness.

    The hole cell's centre, plus every grid point u with the hole cell inside
    [u, u+1)^d (candidate corners of an uncovered cube, where the missing mass
    is largest).
    """
    if verdict.outcome != HOLE:
        return []
    q = verdict.denominator
    h = verdict.cell
    pts = [tuple(c + Fraction(1, 2 * q) for c in h)]
    for k in itertools.product(range(q), repeat=len(h)):
        pts.append(tuple(c - Fraction(kj, q) for c, kj in zip(h, k)))
    return pts


# -- enumeration -------------------------------------------------------------

def _cover_instance(d: int, period: Sequence[int], q: int, budget: int):
    if len(period) != d:
        raise ValueError("period must have one entry per axis")
    shape = _grid_shape(period, q, budget)
    strides = np.cumprod((1,) + shape[:0:-1])[::-1]
    candidates = list(itertools.product(*(range(m) for m in shape)))
    rows = []
    for idx in candidates:
        axes = [(i + np.arange(q)) % m for i, m in zip(idx, shape)]
        flat = np.zeros(1, dtype=np.int64)
        for a, st in zip(axes, strides):
            flat = (flat[:, None] + a[None, :] * int(st)).ravel()
        rows.append(flat.tolist())
    return math.prod(shape), candidates, rows


def _torus_canonical(offsets: Sequence[Point], period: Sequence[int], q: int) -> tuple:
    """Lexicographically least representative under grid translations."""
    best = None
    for shift in itertools.product(*(range(n * q) for n in period)):
        v = tuple(Fraction(k, q) for k in shift)
        moved = tuple(sorted(reduce_mod(tuple(a + b for a, b in zip(p, v)), period) for p in offsets))
        if best is None or moved < best:
            best = moved
    return best


def enumerate_tilings(d: int, period: Sequence[int], q: int, dedup: bool = False,
                      budget: int = DEFAULT_CELL_BUDGET) -> Iterator[TranslateSet]:
    """Stream every periodic tiling with offsets on the 1/q grid.

    Each exact cover of the torus grid (rows = candidate cubes, columns =
    cells) is a tiling.  With ``dedup`` only the first tiling of each torus
    translation class is emitted.  The order is deterministic.
    """
    period = tuple(int(n) for n in period)
    n_cols, candidates, rows = _cover_instance(d, period, q, budget)
    seen = set()
    for sol in ExactCover(n_cols, rows).solutions():
        offsets = [tuple(Fraction(i, q) for i in candidates[r]) for r in sol]
        if dedup:
            key = _torus_canonical(offsets, period, q)
            if key in seen:
                continue
            seen.add(key)
        yield TranslateSet.periodic(period, offsets)


def sample_tilings(d: int, period: Sequence[int], q: int, count: int, seed: int = 0,
                   distinct: bool = True, max_tries: Optional[int] = None,
                   budget: int = DEFAULT_CELL_BUDGET) -> List[TranslateSet]:
    """Random exact covers: first solution found under shuffled row orders."""
    period = tuple(int(n) for n in period)
    n_cols, candidates, rows = _cover_instance(d, period, q, budget)
    solver = ExactCover(n_cols, rows)
    rng = random.Random(seed)
    out, seen = [], set()
    tries = 0
    limit = max_tries if max_tries is not None else 20 * count
    while len(out) < count and tries < limit:
        tries += 1
        sol = solver.first(rng)
        if sol is None:
            break
        s = TranslateSet.periodic(period, [tuple(Fraction(i, q) for i in candidates[r]) for r in sol])
        if distinct and s.offsets in seen:
            continue
        seen.add(s.offsets)
        out.append(s)
    return out


# -- finite sets -------------------------------------------------------------

def is_covered(s: TranslateSet, point) -> bool:
    """Whether ``point`` lies in some cube [t, t+1)^d of the set."""
    point = tuple(Fraction(c) for c in point)
    if s.is_periodic:
        return bool(_covering_translates(s, point))
    for delta in itertools.product((0, -1), repeat=s.dim):
        # t_j in (x_j - 1, x_j]; t_j is x_j's floor-bucket or the one below
        for t in s.floor_buckets.get(tuple(math.floor(c) + e for c, e in zip(point, delta)), ()):
            if all(a <= c < a + 1 for a, c in zip(t, point)):
                return True
    return False


def hole_finder(s: TranslateSet, w: Window) -> Optional[Point]:
    """Centre of the first uncovered cell of the window, or None.

    The window (treated as open) is cut by every cube face crossing it; each
    resulting cell is either fully covered or fully uncovered, so testing its
    centre is exact.  Cells are scanned in lexicographic order.
    """
    if s.is_periodic:
        grow = Window(tuple(c - 1 for c in w.lower), w.upper)
        s = TranslateSet.finite(enumerate_window(s, grow), dim=s.dim)
    cuts = []
    for j in range(s.dim):
        lo, hi = w.lower[j], w.upper[j]
        marks = {lo, hi}
        for t in s.offsets:
            for v in (t[j], t[j] + 1):
                if lo < v < hi:
                    marks.add(v)
        cuts.append(sorted(marks))
    for cell in itertools.product(*(range(len(c) - 1) for c in cuts)):
        centre = tuple((cuts[j][i] + cuts[j][i + 1]) / 2 for j, i in enumerate(cell))
        if not is_covered(s, centre):
            return centre
    return None
