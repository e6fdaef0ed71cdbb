import math

import pytest

from cheegerwidth.cheeger import (
    SQRT_PI_SQRT3,
    WH_MAX,
    area_profile,
    cheeger,
    cheeger_constant,
    cheeger_radius,
    cheeger_scalars,
    profile_dominates,
    wh_exceeds,
    width_cheeger_product,
)
from cheegerwidth.errors import NegativeOffset, OffsetBeyondInradius
from cheegerwidth.geometry import canonicalize, inradius
from cheegerwidth.shapes import equilateral, random_convex, rect_RL, rectangle, regular_ngon
from cheegerwidth.verify import rectangle_cheeger_root


def test_constant():
    assert WH_MAX == 3.0 + math.sqrt(math.pi * math.sqrt(3.0))
    assert WH_MAX == pytest.approx(5.332680452334321, abs=1e-15)
    assert SQRT_PI_SQRT3 ** 2 == pytest.approx(math.pi * math.sqrt(3.0))


def test_equilateral():
    res = cheeger(equilateral(1.0))
    assert res.h == pytest.approx(WH_MAX, abs=1e-12)
    assert abs(res.residual) < 1e-12
    for w in (1e-3, 0.7, 250.0):
        assert width_cheeger_product(equilateral(w, (3.0, -1.0), 0.4)) == pytest.approx(WH_MAX, abs=1e-11)


def test_unit_square():
    assert cheeger_constant(rectangle(1.0, 1.0)) == pytest.approx(2.0 + math.sqrt(math.pi), abs=1e-12)


def test_rectangles_match_quadratic_root():
    for a, b in ((2.0, 1.0), (5.0, 0.5), (1.0, 3.0)):
        t = rectangle_cheeger_root(a, b)
        # root of (4 - pi) t^2 - 2 (a + b) t + a b = 0
        assert (4 - math.pi) * t * t - 2 * (a + b) * t + a * b == pytest.approx(0.0, abs=1e-14)
        assert cheeger_radius(rectangle(a, b)) == pytest.approx(t, rel=1e-12)


def test_rect_RL_uses_full_length():
    # [-L, L] x [0, 1] is a 2L x 1 rectangle
    assert cheeger_constant(rect_RL(1.0)) == pytest.approx(1 / rectangle_cheeger_root(2.0, 1.0), rel=1e-12)
    assert width_cheeger_product(rect_RL(1.0)) == pytest.approx(2.8493688624, abs=1e-9)


def test_tangential_polygons_closed_form():
    # every side touches the incircle, so |K_-t| = |K| (1 - t/r)^2 and 1/r* = 1/r + sqrt(pi/|K|)
    shapes = [regular_ngon(n, 1.3) for n in range(3, 13)] + [random_convex(3, s) for s in range(10)]
    for P in shapes:
        expected = 1.0 / inradius(P) + math.sqrt(math.pi / P.area)
        assert cheeger_constant(P) == pytest.approx(expected, rel=1e-10)


def test_disk_limit():
    # 1/r* -> 2/R for a disk of radius R
    assert cheeger_constant(regular_ngon(512, 2.0)) == pytest.approx(2.0, abs=1e-4)


def test_cheeger_set_consistency():
    for s in range(10):
        res = cheeger(random_convex(8, [11, s]))
        cs = res.cheeger_set
        assert cs.perimeter / cs.area == pytest.approx(res.h, rel=1e-12)
        assert cs.radius == res.r_star


def test_area_profile():
    sq = rectangle(1.0, 1.0)
    assert area_profile(sq, 0.0) == 1.0
    assert area_profile(sq, 0.25) == pytest.approx(0.25)
    assert area_profile(sq, 0.5) == 0.0
    with pytest.raises(NegativeOffset):
        area_profile(sq, -1e-3)
    with pytest.raises(OffsetBeyondInradius):
        area_profile(sq, 0.6)


def test_wh_exceeds_agrees_with_product():
    for s in range(30):
        P = random_convex(3 + s % 6, [12, s])
        v = width_cheeger_product(P)
        assert wh_exceeds(P, v * (1 - 1e-9))
        assert not wh_exceeds(P, v * (1 + 1e-9))


def test_scalars():
    sc = cheeger_scalars(rectangle(2.0, 1.0))
    assert (sc.w, sc.area, sc.perim) == pytest.approx((1.0, 2.0, 6.0))
    assert sc.r == pytest.approx(0.5, rel=1e-11)
    assert sc.diam == pytest.approx(math.sqrt(5.0))
    assert sc.wh == pytest.approx(sc.w * sc.h)


def test_profile_domination_implies_smaller_h():
    K = rectangle(2.0, 2.0)
    H = canonicalize([(0, 0), (2, 0), (1, 1.5)])
    assert profile_dominates(K, H)
    assert not profile_dominates(H, K)
    assert cheeger_constant(K) <= cheeger_constant(H)


def test_equilateral_is_fast():
    import time

    T = equilateral(1.0)
    t0 = time.perf_counter()
    for _ in range(20):
        cheeger(T)
    assert (time.perf_counter() - t0) / 20 < 0.01
