"""Deterministic generators of periodic translate sets."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import List, Optional, Sequence

from .exact import TranslateSet, frac, reduce_mod, to_fraction
from .transforms import SlideSpec, slide

# lcm(2, 3, 4, 6, 8) = 24 keeps torus grids small even at d = 3
DEFAULT_DENOMINATORS = (2, 3, 4, 6, 8)


def gen_lattice(d: int) -> TranslateSet:
    """Z^d as a periodic set with unit period."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return TranslateSet.periodic((1,) * d, [(0,) * d])


def gen_shifted_columns(d: int, period: Sequence[int], shifts: Sequence, axis: Optional[int] = None) -> TranslateSet:
    """Z^d with each column along ``axis`` shifted independently.

    Columns are the lines through integer points parallel to ``axis`` (the
    last axis by default); one shift per column class modulo the period, in
    lexicographic order of the remaining coordinates.  Every column is a
    stack of cubes in its own prism, so the result always tiles.
    """
    if axis is None:
        axis = d - 1
    period = tuple(int(p) for p in period)
    if len(period) != d:
        raise ValueError("period must have d entries")
    others = [j for j in range(d) if j != axis]
    classes = list(itertools.product(*(range(period[j]) for j in others)))
    shifts = [to_fraction(s) for s in shifts]
    if len(shifts) != len(classes):
        raise ValueError(f"need {len(classes)} shifts (one per column class), got {len(shifts)}")
    offsets = []
    for cls, s in zip(classes, shifts):
        if not 0 <= s < 1:
            raise ValueError("column shifts must lie in [0, 1)")
        for k in range(period[axis]):
            p = [Fraction(0)] * d
            for j, c in zip(others, cls):
                p[j] = Fraction(c)
            p[axis] = k + s
            offsets.append(p)
    return TranslateSet.periodic(period, offsets)


def _random_rational(rng: random.Random, denominators: Sequence[int]) -> Fraction:
    q = rng.choice(denominators)
    return Fraction(rng.randrange(1, 2 * q), q) - 1


def random_slide_spec(rng: random.Random, s: TranslateSet,
                      denominators: Sequence[int] = DEFAULT_DENOMINATORS) -> SlideSpec:
    """A slide whose anchor usually hits a residue class present in ``s``."""
    axis = rng.randrange(s.dim)
    residues = sorted({frac(p[axis]) for p in s.offsets})
    if residues and rng.random() < 0.8:
        anchor = rng.choice(residues) + rng.randrange(-2, 3)
    else:
        anchor = _random_rational(rng, denominators)
    shift = Fraction(0)
    while shift == 0:
        shift = _random_rational(rng, denominators)
    return SlideSpec(axis, anchor, shift)


def _layer_shift(rng: random.Random, s: TranslateSet, denominators: Sequence[int]) -> Optional[TranslateSet]:
    # If every translate has the same fractional part on axis k, the set splits
    # into slabs [a+m, a+m+1) along k, each tiled by its own layer; one layer
    # class may then move freely inside its slab.
    layered = [k for k in range(s.dim) if len({frac(p[k]) for p in s.offsets}) == 1 and s.period[k] > 1]
    if not layered or s.dim < 2:
        return None
    k = rng.choice(layered)
    j = rng.choice([i for i in range(s.dim) if i != k])
    layer = rng.randrange(s.period[k])
    base = frac(s.offsets[0][k])
    b = Fraction(0)
    while b == 0:
        b = _random_rational(rng, denominators)
    moved = []
    for p in s.offsets:
        if math.floor(p[k] - base) % s.period[k] == layer:
            p = p[:j] + (p[j] + b,) + p[j + 1:]
        moved.append(p)
    return TranslateSet.periodic(s.period, moved)


def gen_random_slides(seed: int, d: int, steps: int, period: int = 2,
                      denominators: Sequence[int] = DEFAULT_DENOMINATORS) -> TranslateSet:
    """Random composition of tiling-preserving moves applied to Z^d.

    Z^d is written with period ``period`` on every axis.  Each step is a slide
    or, when the set is layered along some axis, a single-layer shift; a pure
    sequence of slides from Z^d only ever produces translates of Z^d.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    s = TranslateSet.periodic((period,) * d, itertools.product(range(period), repeat=d))
    for _ in range(steps):
        nxt = None
        if rng.random() < 0.5:
            nxt = _layer_shift(rng, s, denominators)
        if nxt is None:
            nxt = slide(s, random_slide_spec(rng, s, denominators))
        s = nxt
    return s


def gen_unitriangular_lattice(seed: int, d: int, denominators: Sequence[int] = (1, 2, 3, 4)) -> TranslateSet:
    """Lattice spanned by the columns of a random lower unitriangular matrix.

    Its determinant is 1, so the lattice tiles; it is returned as a periodic
    set over the smallest diagonal integer period it contains.
    """
    rng = random.Random(seed)
    L = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(i):
            L[i][j] = Fraction(rng.randrange(0, rng.choice(denominators) * 2), rng.choice(denominators))
    inv = _unitriangular_inverse(L)
    # period_j e_j is in the lattice iff period_j * (column j of L^-1) is integral
    period = tuple(math.lcm(*(inv[i][j].denominator for i in range(d))) for j in range(d))
    gens = [tuple(L[i][j] for i in range(d)) for j in range(d)]
    seen = {reduce_mod((Fraction(0),) * d, period)}
    frontier = list(seen)
    while frontier:
        p = frontier.pop()
        for g in gens:
            u = reduce_mod(tuple(a + b for a, b in zip(p, g)), period)
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return TranslateSet.periodic(period, seen)


def _unitriangular_inverse(L):
    d = len(L)
    inv = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(i):
            inv[i][j] = -sum((L[i][k] * inv[k][j] for k in range(j, i)), Fraction(0))
    return inv


def perturb_one(s: TranslateSet, seed: int, denominators: Sequence[int] = (2, 4)) -> TranslateSet:
    """Move one offset by a random non-zero rational vector (not a period)."""
    rng = random.Random(seed)
    for _ in range(100):
        i = rng.randrange(len(s.offsets))
        v = tuple(_random_rational(rng, denominators) if rng.random() < 0.7 else Fraction(0) for _ in range(s.dim))
        if all(c == 0 for c in v):
            continue
        moved = reduce_mod(tuple(a + b for a, b in zip(s.offsets[i], v)), s.period)
        if moved in s:
            continue
        return s.replace_offsets(moved if k == i else p for k, p in enumerate(s.offsets))
    raise RuntimeError("could not find a perturbation")


def remove_one(s: TranslateSet, seed: int) -> TranslateSet:
    rng = random.Random(seed)
    return s.without(rng.choice(s.offsets))


def halton_samples(s: TranslateSet, count: int = 16) -> List[tuple]:
    """Rational low-discrepancy points spread over the period box (or unit cube)."""
    primes = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if s.dim > len(primes):
        raise ValueError("too many dimensions for the built-in Halton bases")
    box = s.period if s.is_periodic else (1,) * s.dim
    return [tuple(_radical_inverse(i, primes[j]) * box[j] for j in range(s.dim)) for i in range(1, count + 1)]


def _radical_inverse(i: int, base: int) -> Fraction:
    out, f = Fraction(0), Fraction(1, base)
    while i:
        i, r = divmod(i, base)
        out += r * f
        f /= base
    return out
