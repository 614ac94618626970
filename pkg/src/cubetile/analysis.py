"""Orthogonality, packing and completeness-sum checks.

For translates t, u the exponentials e_t, e_u on [0,1)^d have inner product
``prod_j phi(t_j - u_j)`` with ``phi(x) = (exp(2 pi i x) - 1) / (2 pi i x)``.
Only the squared modulus ``prod_j sinc^2`` is ever needed here.  Every
zero/one decision is taken in exact rational arithmetic before any floating
point evaluation.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exact import (
    DimensionMismatch,
    Point,
    TranslateSet,
    Window,
    _k_range,
    add,
    common_denominator,
    enumerate_window,
    format_point,
    format_rational,
    frac,
    sub,
    to_fraction,
    to_point,
    unit,
)

ORTHOGONALITY = "orthogonality"
OVERLAP = "overlap"

DEFAULT_N = 100
DEFAULT_EPS = 0.05
# absorbs floating-point error in the partial sum before a deficit is certified
FLOAT_SLACK = 1e-10

_PI2 = math.pi ** 2


def phi_sq(x) -> float:
    """|phi(x)|^2, i.e. (sin(pi x) / (pi x))^2 with phi(0) = 1.

    Rational input (int, Fraction, 'p/q') is decided exactly at integers;
    floats are evaluated directly.
    """
    if isinstance(x, float):
        if x == 0.0:
            return 1.0
        return (math.sin(math.pi * x) / (math.pi * x)) ** 2
    x = to_fraction(x)
    if x == 0:
        return 1.0
    if x.denominator == 1:
        return 0.0
    # sin^2 has period 1: evaluate on the fractional part to keep precision
    s = math.sin(math.pi * float(frac(x)))
    return s * s / (_PI2 * float(x) ** 2)


def _check_dims(t, u):
    if len(t) != len(u):
        raise DimensionMismatch(f"{len(t)}-dimensional point paired with {len(u)}-dimensional point")


def pair_inner_sq(t, u) -> float:
    """|<e_t, e_u>|^2 on the unit cube."""
    t, u = to_point(t), to_point(u)
    _check_dims(t, u)
    out = 1.0
    for a, b in zip(t, u):
        v = phi_sq(a - b)
        if v == 0.0:
            return 0.0
        out *= v
    return out


def _gap_is_nonzero_integer(x: Fraction) -> bool:
    return x != 0 and x.denominator == 1


def _distinct(t, u):
    t, u = to_point(t), to_point(u)
    _check_dims(t, u)
    if t == u:
        raise ValueError(f"pair check needs two distinct translates, got {format_point(t)} twice")
    return t, u


def is_orthogonal_pair(t, u) -> bool:
    """e_t and e_u are orthogonal iff some coordinate gap is a nonzero integer."""
    t, u = _distinct(t, u)
    return _orthogonal(t, u)


def is_disjoint_pair(t, u) -> bool:
    """Half-open cubes Q+t and Q+u are disjoint iff some |t_j - u_j| >= 1."""
    t, u = _distinct(t, u)
    return _disjoint(t, u)


def _orthogonal(t: Point, u: Point) -> bool:
    return any(_gap_is_nonzero_integer(a - b) for a, b in zip(t, u))


def _disjoint(t: Point, u: Point) -> bool:
    return any(abs(a - b) >= 1 for a, b in zip(t, u))


@dataclass
class ViolationReport:
    """Pairs of translates violating orthogonality or the packing condition."""

    kind: str
    pairs: List[Tuple[Point, Point]] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not self.pairs

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def lines(self) -> List[str]:
        return [f"pair: {format_point(t)} | {format_point(u)}" for t, u in self.pairs]

    def recheck(self) -> bool:
        pred = _orthogonal if self.kind == ORTHOGONALITY else _disjoint
        return all(t != u and not pred(t, u) for t, u in self.pairs)


class NotOrthogonal(ValueError):
    """Raised when a Bessel-type sum is requested for a non-orthogonal set."""

    def __init__(self, report: ViolationReport):
        self.report = report
        t, u = report.pairs[0]
        super().__init__(f"set is not orthogonal: {format_point(t)} | {format_point(u)}")


def _scope_points(s: TranslateSet, window: Optional[Window]) -> List[Point]:
    if window is None:
        return list(s.offsets)
    return enumerate_window(s, window)


def _finite_orthogonality_violations(points: Sequence[Point], limit: Optional[int]) -> list:
    # Points sharing all fractional parts only differ by integers and are
    # always orthogonal.  Across two residue classes a pair fails exactly when
    # it agrees on every axis where the residues agree.
    classes = defaultdict(list)
    for p in points:
        classes[tuple(frac(c) for c in p)].append(p)
    keys = sorted(classes)
    out = []
    for i, r in enumerate(keys):
        for r2 in keys[i + 1:]:
            same = [j for j in range(len(r)) if r[j] == r2[j]]
            buckets = defaultdict(list)
            for u in classes[r2]:
                buckets[tuple(u[j] for j in same)].append(u)
            for t in classes[r]:
                for u in buckets.get(tuple(t[j] for j in same), ()):
                    out.append((min(t, u), max(t, u)))
                    if limit is not None and len(out) >= limit:
                        return out
    return out


def _finite_overlap_violations(points: Sequence[Point], limit: Optional[int]) -> list:
    d = len(points[0]) if points else 0
    buckets = defaultdict(list)
    for p in points:
        buckets[tuple(math.floor(c) for c in p)].append(p)
    out = []
    for key, members in buckets.items():
        for delta in itertools.product((-1, 0, 1), repeat=d):
            other = tuple(k + e for k, e in zip(key, delta))
            for t in members:
                for u in buckets.get(other, ()):
                    if t < u and not _disjoint(t, u):
                        out.append((t, u))
                        if limit is not None and len(out) >= limit:
                            return out
    return out


def _periodic_representative_violations(s: TranslateSet, pred, limit: Optional[int]) -> list:
    # Coordinate gaps of a periodic set repeat modulo the period lattice, and
    # offsets lie in [0, period), so the 3^d block of neighbouring periods
    # contains a representative of every violating pair.
    out = []
    shifts = list(itertools.product((-1, 0, 1), repeat=s.dim))
    for i, o in enumerate(s.offsets):
        for o2 in s.offsets[i + 1:]:
            for m in shifts:
                u = tuple(c + n * k for c, n, k in zip(o2, s.period, m))
                if not pred(o, u):
                    out.append((min(o, u), max(o, u)))
                    if limit is not None and len(out) >= limit:
                        return out
    return out


def check_orthogonality(s: TranslateSet, window: Optional[Window] = None,
                        limit: Optional[int] = None) -> ViolationReport:
    """List pairs of translates whose exponentials are not orthogonal.

    With ``window=None`` the whole set is in scope: every pair for finite
    sets, and one representative per violating class (offset against the
    3^d neighbouring periods) for periodic sets.  With a window, every pair of
    translates inside it is examined.
    """
    if s.is_periodic and window is None:
        pairs = _periodic_representative_violations(s, _orthogonal, limit)
    else:
        pairs = _finite_orthogonality_violations(_scope_points(s, window), limit)
    return ViolationReport(ORTHOGONALITY, sorted(set(pairs)))


def check_packing(s: TranslateSet, window: Optional[Window] = None,
                  limit: Optional[int] = None) -> ViolationReport:
    """List pairs of overlapping cubes (same scoping rules as check_orthogonality)."""
    if s.is_periodic and window is None:
        pairs = _periodic_representative_violations(s, _disjoint, limit)
    else:
        pairs = _finite_overlap_violations(_scope_points(s, window), limit)
    return ViolationReport(OVERLAP, sorted(set(pairs)))


def has_face_twin(s: TranslateSet) -> Optional[Tuple[Point, Point]]:
    """Return a pair (t, t + e_j) in the set, if any.

    Axes are tried in order; on the first axis with a twin the pair with the
    least t is returned, so Z^d yields (0, e_1).
    """
    for j in range(s.dim):
        e = unit(s.dim, j)
        found = [t for t in s.offsets if add(t, e) in s]
        if found:
            t = min(found)
            return t, add(t, e)
    return None


# -- completeness sums -------------------------------------------------------

# The majorant psi(x) = 1 on (-1, 1) and 1/(pi^2 x^2) elsewhere dominates
# |phi(t)|^2 on the unit cube X_{t,P} attached to each tail point.  Terms left
# out of the window (-N-1, N+1)^d have some |t_j| >= N+1, so the
# integrals are 1/(pi^2 N) on the outer axes and < 2 + 1/pi^2 on the inner
# ones.  Summing over the 4^d sign/size partitions with at least one outer
# axis gives (A + B/N)^d - A^d <= ((A + B)^d - A^d) / N.
_TAIL_A = 4.0 + 2.0 / _PI2
_TAIL_B = 2.0 / _PI2


def tail_constant(d: int) -> float:
    """C_d such that the completeness-sum tail beyond radius N is <= C_d / N."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    return (_TAIL_A + _TAIL_B) ** d - _TAIL_A ** d


def tail_bound(d: int, n: int) -> float:
    if n < 1:
        raise ValueError("cutoff N must be a positive integer")
    return tail_constant(d) / n


@dataclass
class CompletenessReport:
    sample_point: Point
    cutoff: int
    partial_sum: float
    tail_bound: float
    epsilon: float
    complete: bool
    deficit: Optional[float] = None

    @property
    def verdict(self) -> str:
        if self.complete:
            return f"CompleteWithin({self.epsilon:g})"
        return f"DeficitAtLeast({self.deficit:.6g})"

    def csv_row(self) -> List[str]:
        return [
            " ".join(format_rational(c) for c in self.sample_point),
            str(self.cutoff),
            f"{self.partial_sum:.17g}",
            f"{self.tail_bound:.17g}",
            self.verdict,
        ]


CSV_HEADER = ["x", "N", "partial_sum", "tail_bound", "verdict"]


def _axis_sum(c0: Fraction, period: int, n: int) -> float:
    """Sum of phi_sq(c0 + period*k) over k with the argument in (-n-1, n+1)."""
    ks = _k_range(c0, period, Fraction(-n - 1), Fraction(n + 1), False)
    if len(ks) == 0:
        return 0.0
    f = frac(c0)
    if f == 0:
        # integer arguments: only an exact zero contributes
        return 1.0 if c0 % period == 0 else 0.0
    start = float(c0 + period * ks.start)
    vals = start + period * np.arange(len(ks), dtype=np.float64)
    s = math.sin(math.pi * float(f))
    return s * s / _PI2 * float(np.sum(1.0 / (vals * vals)))


def _periodic_partial(s: TranslateSet, x: Point, n: int) -> float:
    # the window is a box, so the lattice sum factorises over axes per offset
    total = 0.0
    for o in s.offsets:
        term = 1.0
        for c, xj, p in zip(o, x, s.period):
            term *= _axis_sum(c - xj, p, n)
            if term == 0.0:
                break
        total += term
    return total


@lru_cache(maxsize=8)
def _scaled_finite(s: TranslateSet):
    q = common_denominator(s)
    ints = [[int(c * q) for c in p] for p in s.offsets]
    big = max((abs(v) for row in ints for v in row), default=0)
    dtype = np.int64 if big < 2 ** 40 else object
    return q, np.array(ints, dtype=dtype).reshape(len(ints), s.dim)


def _finite_partial(s: TranslateSet, x: Point, n: int) -> float:
    if not s.offsets:
        return 0.0
    q, arr = _scaled_finite(s)
    big_q = math.lcm(q, *(c.denominator for c in x))
    xs = [int(c * big_q) for c in x]
    if arr.dtype != object and big_q < 2 ** 20 and max(abs(v) for v in xs) < 2 ** 60:
        diff = arr * (big_q // q) - np.array(xs, dtype=np.int64)
    else:
        diff = arr.astype(object) * (big_q // q) - np.array(xs, dtype=object)
    lim = (n + 1) * big_q
    inside = np.all(np.abs(diff) < lim, axis=1)
    diff = diff[inside]
    if diff.shape[0] == 0:
        return 0.0
    rem = np.mod(diff, big_q)
    zero_term = (rem == 0) & (diff != 0)
    vals = np.ones(diff.shape, dtype=np.float64)
    live = rem != 0
    if np.any(live):
        r = rem[live].astype(np.float64) / big_q
        v = diff[live].astype(np.float64) / big_q
        vals[live] = np.sin(np.pi * r) ** 2 / (_PI2 * v * v)
    vals[zero_term] = 0.0
    return float(np.sum(np.prod(vals, axis=1)))


def partial_sum(s: TranslateSet, x, n: int) -> float:
    """Sum of |<e_x, e_t>|^2 over translates t with t - x in (-n-1, n+1)^d."""
    x = to_point(x)
    _check_dims(x, (0,) * s.dim)
    if s.is_periodic:
        return _periodic_partial(s, x, n)
    return _finite_partial(s, x, n)


def _require_orthogonal(s: TranslateSet) -> None:
    report = check_orthogonality(s, limit=1)
    if report:
        raise NotOrthogonal(report)


def completeness_sum(s: TranslateSet, x, n: int = DEFAULT_N, eps: float = DEFAULT_EPS,
                     check: bool = True) -> CompletenessReport:
    """Windowed completeness sum at ``x`` with a certified tail bound.

    A deficit verdict is rigorous: ``partial + tail_bound < 1`` rules out the
    identity at ``x``.  The complete verdict is only tolerance-qualified.
    Raises NotOrthogonal when the set (as a whole) is not orthogonal, since
    neither Bessel's inequality nor the tail estimate apply then.
    """
    if int(n) != n or n < 1:
        raise ValueError("cutoff N must be a positive integer")
    if eps < 1e-9:
        raise ValueError("eps must be at least 1e-9")
    n = int(n)
    x = to_point(x)
    if check:
        _require_orthogonal(s)
    total = partial_sum(s, x, n)
    tail = tail_bound(s.dim, n)
    if total >= 1.0 - eps - tail:
        return CompletenessReport(x, n, total, tail, eps, True)
    return CompletenessReport(x, n, total, tail, eps, False, 1.0 - total - tail - FLOAT_SLACK)


@dataclass
class SpectrumVerdict:
    """LikelySpectrum (``likely=True``) or NotSpectrum with a witness.

    The witness is a sample point with a certified deficit, or, when the set
    is not even orthogonal, ``violation`` holds an offending pair instead.
    """

    likely: bool
    witness: Optional[Point] = None
    reports: List[CompletenessReport] = field(default_factory=list)
    violation: Optional[Tuple[Point, Point]] = None

    def __str__(self) -> str:
        if self.likely:
            return "LikelySpectrum"
        if self.violation is not None:
            t, u = self.violation
            return f"NotSpectrum (not orthogonal: {format_point(t)} | {format_point(u)})"
        return f"NotSpectrum at {format_point(self.witness)}"


def spectrum_verdict(s: TranslateSet, samples: Iterable, n: int = DEFAULT_N,
                     eps: float = DEFAULT_EPS) -> SpectrumVerdict:
    _require_orthogonal(s)
    reports = [completeness_sum(s, x, n, eps, check=False) for x in samples]
    for r in reports:
        if not r.complete:
            return SpectrumVerdict(False, r.sample_point, reports)
    return SpectrumVerdict(True, None, reports)


def not_orthogonal_verdict(report: ViolationReport) -> SpectrumVerdict:
    return SpectrumVerdict(False, violation=report.pairs[0])
