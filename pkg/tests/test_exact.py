import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubetile.exact import (
    CubesetError,
    DuplicateTranslate,
    TranslateSet,
    Window,
    canonicalize,
    common_denominator,
    enumerate_window,
    format_point,
    translate,
)


def test_periodic_offsets_reduced_mod_period():
    s = TranslateSet.periodic([2], [["5/2"]])
    assert s.offsets == ((F(1, 2),),)


def test_finite_canonical_sorted():
    s = TranslateSet.finite([(1, F(1, 2)), (0, 0)])
    assert s.offsets == ((0, 0), (1, F(1, 2)))
    assert canonicalize(s) == s


def test_duplicate_after_reduction():
    with pytest.raises(DuplicateTranslate):
        TranslateSet.periodic([1], [[0], [1]])


def test_finite_duplicates_rejected():
    with pytest.raises(DuplicateTranslate):
        TranslateSet.finite([("1/2", 0), (F(2, 4), 0)])


def test_bad_inputs():
    with pytest.raises(CubesetError):
        TranslateSet.periodic([0, 1], [[0, 0]])
    with pytest.raises(CubesetError):
        TranslateSet.finite([(0, 0), (1,)])
    with pytest.raises(TypeError):
        TranslateSet.finite([(0.5, 0)])
    with pytest.raises(ValueError):
        Window((0, 0), (1, 0))


def test_enumerate_integers_in_interval():
    z = TranslateSet.periodic([1], [[0]])
    assert enumerate_window(z, Window(("-3/2",), ("3/2",))) == [(-1,), (0,), (1,)]
    assert enumerate_window(z, Window(("1/10",), ("9/10",))) == []


def test_enumerate_periodic_2d_against_brute_force():
    s = TranslateSet.periodic([2, 2], [(0, 0), (1, F(1, 2))])
    w = Window.cube(F(-1, 2), F(5, 2), 2)
    got = enumerate_window(s, w)
    # brute force over k in {-1,0,1}^2 (and a margin, which must add nothing)
    brute = set()
    for k in itertools.product(range(-3, 4), repeat=2):
        for o in s.offsets:
            p = tuple(c + 2 * kj for c, kj in zip(o, k))
            if all(F(-1, 2) < c < F(5, 2) for c in p):
                brute.add(p)
    assert got == sorted(brute)
    # four copies of (0, 0) and one of (1, 1/2); 5/2 is outside the open box
    assert got == [(0, 0), (0, 2), (1, F(1, 2)), (2, 0), (2, 2)]


def test_finite_window_returns_what_exists():
    s = TranslateSet.finite([(0, 0), (5, 5)])
    assert enumerate_window(s, Window.cube(-100, 100, 2)) == [(0, 0), (5, 5)]


def test_common_denominator():
    assert common_denominator(TranslateSet.finite([(0, 0), (1, F(1, 2))])) == 2
    assert common_denominator(TranslateSet.periodic([1, 1], [(0, 0)])) == 1
    assert common_denominator(TranslateSet.finite([(F(1, 3), F(1, 4))])) == 12


def test_radius_window_is_working_box():
    w = Window.radius(3, 2)
    assert w.lower == (-4, -4) and w.upper == (4, 4)
    assert (F(-39, 10), 0) in w and (-4, 0) not in w


def test_translate_and_membership():
    s = translate(TranslateSet.periodic([2], [[0]]), ["1/2"])
    assert (F(5, 2),) in s and (F(-3, 2),) in s and (0,) not in s
    assert format_point((F(1, 2), F(-3))) == "(1/2, -3)"


def test_without():
    s = TranslateSet.periodic([2, 1], [(0, 0), (1, 0)])
    assert s.without((3, 5)).offsets == ((0, 0),)
    with pytest.raises(KeyError):
        s.without((F(1, 2), 0))


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=6)


@st.composite
def periodic_sets(draw):
    d = draw(st.integers(1, 3))
    period = draw(st.lists(st.integers(1, 3), min_size=d, max_size=d))
    pts = draw(st.lists(st.tuples(*[rationals] * d), min_size=1, max_size=6))
    reduced = {tuple(c % n for c, n in zip(p, period)) for p in pts}
    return TranslateSet.periodic(period, reduced)


@settings(max_examples=60, deadline=None)
@given(periodic_sets())
def test_canonicalize_idempotent(s):
    assert canonicalize(canonicalize(s)) == canonicalize(s)


@settings(max_examples=60, deadline=None)
@given(periodic_sets())
def test_period_box_holds_one_copy_per_offset(s):
    assert len(enumerate_window(s, Window.period_box(s))) == len(s.offsets)


@settings(max_examples=60, deadline=None)
@given(periodic_sets(), st.integers(0, 3), st.integers(0, 3))
def test_window_monotone(s, a, b):
    small = Window.cube(-1 - F(a, 2), 1 + F(a, 2), s.dim)
    big = Window.cube(-1 - F(a + b, 2) - F(1, 3), 1 + F(a + b, 2) + F(1, 3), s.dim)
    assert big.contains_window(small)
    assert set(enumerate_window(s, small)) <= set(enumerate_window(s, big))
