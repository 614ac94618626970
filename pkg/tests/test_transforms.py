import random
from fractions import Fraction as F

import pytest

from cubetile.analysis import check_orthogonality
from cubetile.exact import TranslateSet, Window, enumerate_window
from cubetile.generators import gen_lattice, gen_shifted_columns, random_slide_spec
from cubetile.tiling import check_tiling, hole_finder, is_covered
from cubetile.transforms import (
    SlideSpec,
    TranslateCollision,
    integerize,
    integerize_plan,
    keller_shift,
    slide,
    slide_point,
)


def test_slide_nothing_moves_on_integer_anchor():
    z = gen_lattice(2)
    assert slide(z, SlideSpec(0, 0, F(1, 2))) == z


def test_slide_everything_moves():
    out = slide(gen_lattice(2), SlideSpec(0, F(1, 2), F(1, 2)))
    assert out.offsets == ((F(1, 2), F(0)),)


def test_slide_single_column():
    s = gen_shifted_columns(2, [2, 1], [0, F(1, 3)])
    out = slide(s, SlideSpec(1, 0, F(2, 3)))
    assert out == gen_shifted_columns(2, [2, 1], [0, 0])
    assert check_tiling(out).tiles


def test_slide_collision():
    s = TranslateSet.finite([(0, 0), (F(1, 2), 0)])
    with pytest.raises(TranslateCollision):
        slide(s, SlideSpec(0, 0, F(-1, 2)))


def test_slide_axis_out_of_range():
    with pytest.raises(ValueError):
        slide(gen_lattice(2), SlideSpec(2, 0, 1))
    with pytest.raises(ValueError):
        SlideSpec(-1, 0, 1)


def test_slide_spec_str_is_one_based():
    assert str(SlideSpec(0, F(1, 3), F(-1, 2))) == "slide(axis=1, anchor=1/3, shift=-1/2)"


def test_zero_shift_is_identity(tilings, holey):
    rng = random.Random(0)
    for s in tilings + holey:
        spec = random_slide_spec(rng, s)
        assert slide(s, SlideSpec(spec.axis, spec.anchor, 0)) == s


def test_round_trip(tilings, holey):
    rng = random.Random(1)
    hit = 0
    for s in tilings + holey:
        for _ in range(5):
            spec = random_slide_spec(rng, s)
            out = slide(s, spec)
            back = SlideSpec(spec.axis, spec.anchor + spec.shift, -spec.shift)
            moved = {p for p in s.offsets if spec.moves(p)}
            moved_back = {slide_point(p, spec) for p in moved}
            if {p for p in out.offsets if back.moves(p)} == moved_back:
                hit += 1
                assert slide(out, back) == s
    assert hit > 20


def test_slides_preserve_verdicts(tilings, holey):
    rng = random.Random(2)
    for s in tilings:
        out = slide(s, random_slide_spec(rng, s))
        assert check_tiling(out).tiles
    for s in holey:
        out = slide(s, random_slide_spec(rng, s))
        assert check_orthogonality(out).empty
        assert not check_tiling(out).tiles


def test_hole_persists(holey):
    rng = random.Random(3)
    for s in holey[:20]:
        g = hole_finder(s, Window.period_box(s))
        assert g is not None
        spec = random_slide_spec(rng, s)
        out = slide(s, spec)
        gc = tuple(c + spec.shift if j == spec.axis else c for j, c in enumerate(g))
        assert not is_covered(out, g) or not is_covered(out, gc)


# -- keller_shift -------------------------------------------------------------

def test_keller_shift_aligns_pair():
    s = gen_shifted_columns(2, [1, 2], [0, F(1, 3)], axis=0)
    t, tp = (F(1, 3), 1), (0, 0)
    out = keller_shift(s, t, tp)
    assert (0, 1) in out and (0, 0) in out
    assert check_tiling(out).tiles


def test_keller_shift_integer_gap():
    s = gen_shifted_columns(2, [1, 2], [0, F(1, 3)], axis=0)
    with pytest.raises(ValueError):
        keller_shift(s, (0, 0), (1, 0))
    with pytest.raises(ValueError):
        keller_shift(gen_lattice(2), (0, 0), (2, 5))


def test_keller_shift_rejects_foreign_point():
    with pytest.raises(ValueError):
        keller_shift(gen_lattice(2), (F(1, 2), 0), (0, 0))


# -- integerize ---------------------------------------------------------------

def _assert_integerized(s, n):
    out = integerize(s, n)
    inner = enumerate_window(out, Window.radius(n - 1, s.dim))
    assert inner
    assert all(c.denominator == 1 for p in inner for c in p)
    assert check_orthogonality(out, Window.radius(n, s.dim)).empty
    # track each working point through the plan
    pts = enumerate_window(s, Window.radius(n + 2, s.dim))
    moved = list(pts)
    for spec in integerize_plan(s, n):
        moved = [slide_point(p, spec) for p in moved]
    for a, b in zip(pts, moved):
        assert all(abs(x - y) < 1 for x, y in zip(a, b))
    return out


@pytest.mark.parametrize("d", [1, 2, 3])
def test_integerize_lattice_unchanged(d):
    assert integerize(gen_lattice(d), 3) == gen_lattice(d)
    assert integerize_plan(gen_lattice(d), 3) == []


def test_integerize_half_shift():
    s = TranslateSet.periodic([1, 1], [(F(1, 2), 0)])
    out = _assert_integerized(s, 3)
    assert len(integerize_plan(s, 3)) == 1


def test_integerize_sevenths():
    s = gen_shifted_columns(2, [7, 1], [F(m, 7) for m in range(7)])
    _assert_integerized(s, 3)


def test_integerize_suite(tilings, holey):
    for s in (tilings + holey)[::3]:
        _assert_integerized(s, 3)


def test_integerize_idempotent_on_window(tilings):
    for s in tilings[::4]:
        once = integerize(s, 3)
        twice = integerize(once, 3)
        w = Window.radius(2, s.dim)
        assert enumerate_window(twice, w) == enumerate_window(once, w)


def test_integerize_rejects_overlap():
    with pytest.raises(ValueError):
        integerize(TranslateSet.periodic([1, 1], [(0, 0), (F(1, 2), F(1, 2))]), 2)
    with pytest.raises(ValueError):
        integerize(gen_lattice(2), 0)


def test_integerize_finite():
    s = TranslateSet.finite([(F(1, 4) + i, F(2, 3) + j) for i in range(-4, 4) for j in range(-4, 4)])
    out = integerize(s, 2)
    inner = [p for p in out.offsets if p in Window.radius(1, 2)]
    assert inner and all(c.denominator == 1 for p in inner for c in p)
