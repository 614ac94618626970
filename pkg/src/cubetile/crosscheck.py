"""Tiling versus spectrum cross-check.

For the unit cube a set tiles iff its exponentials form an orthonormal basis,
so the exact tiling verdict and the (numerical) spectrum verdict must agree.
A disagreement means a bug somewhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .analysis import (
    DEFAULT_EPS,
    DEFAULT_N,
    CompletenessReport,
    SpectrumVerdict,
    ViolationReport,
    check_orthogonality,
    not_orthogonal_verdict,
    spectrum_verdict,
)
from .exact import TranslateSet, to_point
from .generators import halton_samples
from .tiling import TilingVerdict, check_tiling, hole_cell_samples


@dataclass
class CrossCheckResult:
    set_id: str
    tiling: TilingVerdict
    spectrum: SpectrumVerdict
    violations: ViolationReport
    reports: List[CompletenessReport] = field(default_factory=list)

    @property
    def agreement(self) -> bool:
        return self.tiling.tiles == self.spectrum.likely

    def summary(self) -> str:
        flag = "agree" if self.agreement else "DISAGREE"
        return f"{self.set_id}: {self.tiling} / {self.spectrum} -> {flag}"


def default_samples(s: TranslateSet, tiling: Optional[TilingVerdict] = None, count: int = 16) -> list:
    """Halton points over the period box plus points attached to a hole witness."""
    pts = halton_samples(s, count)
    if tiling is not None:
        pts.extend(hole_cell_samples(s, tiling))
    # drop repeats, keep order
    return list(dict.fromkeys(pts))


def cross_check(s: TranslateSet, samples: Optional[Sequence] = None, n: int = DEFAULT_N,
                eps: float = DEFAULT_EPS, set_id: str = "set") -> CrossCheckResult:
    tiling = check_tiling(s)
    violations = check_orthogonality(s)
    if violations:
        # non-orthogonal exponentials cannot be an orthonormal basis
        spec = not_orthogonal_verdict(violations)
    else:
        if samples is None:
            samples = default_samples(s, tiling)
        spec = spectrum_verdict(s, [to_point(x) for x in samples], n, eps)
    return CrossCheckResult(set_id, tiling, spec, violations, spec.reports)
