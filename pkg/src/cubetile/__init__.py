"""Cube tilings and exponential bases of the unit cube [0,1)^d."""

from .analysis import (
    CompletenessReport,
    NotOrthogonal,
    SpectrumVerdict,
    ViolationReport,
    check_orthogonality,
    check_packing,
    completeness_sum,
    has_face_twin,
    is_disjoint_pair,
    is_orthogonal_pair,
    pair_inner_sq,
    phi_sq,
    spectrum_verdict,
    tail_bound,
    tail_constant,
)
from .crosscheck import CrossCheckResult, cross_check
from .exact import (
    DuplicateTranslate,
    TranslateSet,
    Window,
    canonicalize,
    common_denominator,
    enumerate_window,
    translate,
)
from .generators import gen_lattice, gen_random_slides, gen_shifted_columns
from .tiling import (
    GridTooLarge,
    TilingVerdict,
    check_tiling,
    enumerate_tilings,
    hole_finder,
    torus_cover_map,
)
from .transforms import SlideSpec, TranslateCollision, integerize, keller_shift, slide

__version__ = "0.1.0"
