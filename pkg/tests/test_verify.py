import json
import math

import numpy as np
import pytest

from cheegerwidth.cheeger import WH_MAX
from cheegerwidth.errors import OffsetBeyondInradius, ParamOutOfRange
from cheegerwidth.geometry import SQRT3
from cheegerwidth.shapes import equilateral, family_Reps, random_convex, rect_RL, rectangle, reuleaux_polygon
from cheegerwidth.verify import (
    ADMISSIBLE_C,
    ETA_MAX,
    H_T0,
    CorpusParams,
    ShapeReport,
    SweepRecord,
    c2_for_constant,
    check_area_comparison,
    check_ftouhi,
    check_lower,
    check_main,
    check_pal,
    check_width_lemma,
    corpus_shape,
    deficit,
    loglog_slope,
    shape_report,
    stability_check,
    stability_constant,
    sweep_rectangles,
    sweep_sharpness,
    verify_corpus,
    verify_shapes,
)

SQUARE = rectangle(1.0, 1.0)


def test_deficit_values():
    assert abs(deficit(equilateral(3.0, (1, 1), 0.2))) < 1e-9
    assert deficit(SQUARE) == pytest.approx(WH_MAX - (2 + math.sqrt(math.pi)), abs=1e-12)
    assert deficit(SQUARE) == pytest.approx(1.5602266014, abs=1e-9)
    ds = [deficit(rect_RL(L)) for L in (1, 4, 16, 64, 256)]
    assert all(a < b for a, b in zip(ds, ds[1:]))
    assert ds[-1] < 1 + ETA_MAX
    assert 1 + ETA_MAX == pytest.approx(3.3326804523, abs=1e-9)


def test_equilateral_margins_are_tight():
    T = equilateral(1.0)
    assert check_main(T) == pytest.approx(0.0, abs=1e-9)
    pal_r, pal_a = check_pal(T)
    assert pal_r == pytest.approx(0.0, abs=1e-9)
    assert pal_a == pytest.approx(0.0, abs=1e-12)
    # triangles are tangential polygons, where the Ftouhi bound is an equality
    assert check_ftouhi(T) == pytest.approx(0.0, abs=1e-9)
    for k in range(8):
        assert check_width_lemma(T, k / 24) == pytest.approx(0.0, abs=1e-12)
        assert check_area_comparison(T, k / 24) == pytest.approx(0.0, abs=1e-12)


def test_width_lemma_square():
    assert check_width_lemma(SQUARE, 0.2) == pytest.approx(0.2)
    assert check_width_lemma(SQUARE, 0.0) == pytest.approx(0.0)
    with pytest.raises(OffsetBeyondInradius):
        check_width_lemma(SQUARE, 0.5)
    with pytest.raises(OffsetBeyondInradius):
        check_area_comparison(SQUARE, 0.7)


def test_area_comparison_square():
    # |K_-t| = (1-2t)^2 against (1-3t)^2/sqrt(3)
    t = 0.1
    assert check_area_comparison(SQUARE, t) == pytest.approx(0.64 - 0.49 / SQRT3)


def test_lower_margin_shrinks_with_L():
    m8, m2 = check_lower(rect_RL(8)), check_lower(rect_RL(2))
    assert 0 < m8 < m2


def test_stability_constant():
    p = stability_constant(ETA_MAX / 2, 1.0)
    assert p.C == pytest.approx(2 * ETA_MAX / (SQRT3 * (ETA_MAX / 2) ** 2))
    assert p.C == pytest.approx(1.9800, abs=1e-4)
    assert ADMISSIBLE_C == pytest.approx(0.03542, abs=1e-5)
    assert stability_constant(ETA_MAX / 2, c2_for_constant(ETA_MAX / 2, ADMISSIBLE_C)).C == pytest.approx(ADMISSIBLE_C)
    for eta, c2 in ((0.0, 1.0), (ETA_MAX, 1.0), (-1.0, 1.0), (0.5, 0.0), (0.5, -2.0)):
        with pytest.raises(ParamOutOfRange):
            stability_constant(eta, c2)


def test_stability_check():
    p = stability_constant(1.0, 1.0)
    assert stability_check(equilateral(1.0), p) == pytest.approx(0.0, abs=1e-8)
    # the square is too far from optimal for the local estimate
    assert stability_check(SQUARE, p) is None
    m = stability_check(family_Reps(0.05), p)
    assert m is not None and m > 0


def test_shape_report_round_trip():
    rep = shape_report(random_convex(6, 8))
    assert rep.wh == rep.w * rep.h
    assert rep.deficit == WH_MAX - rep.wh
    again = ShapeReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert again == rep
    assert set(rep.margins) == {"main", "lower", "ftouhi", "pal_inradius", "pal_area", "width_lemma", "area_comparison"}
    assert shape_report(SQUARE, with_asymmetry=False).asymmetry is None


def test_sweep_record_rel_err():
    rec = SweepRecord(1.0, {"a": 1.1, "b": 2.0, "c": 5.0}, {"a": 1.0, "b": 2.0})
    assert rec.rel_err == pytest.approx(0.1)


def test_sweep_rectangles():
    recs = sweep_rectangles([2.0**k for k in range(1, 10)])
    hs = [r.measured["h"] for r in recs]
    assert all(a > b > 2 for a, b in zip(hs, hs[1:]))
    assert hs[-1] - 2 <= 0.01
    assert max(r.rel_err for r in recs) < 1e-10
    with pytest.raises(ParamOutOfRange):
        sweep_rectangles([0.5])


def test_sweep_sharpness_deficit_and_h():
    eps = [2.0**-k for k in range(3, 11)]
    recs = sweep_sharpness(eps)
    for r in recs:
        assert r.measured["h"] == pytest.approx(H_T0, rel=1e-12)
        assert r.measured["deficit"] == pytest.approx(r.param * H_T0, rel=1e-9)
        assert r.measured["ratio"] == r.measured["asymmetry"] / r.measured["deficit"]
    assert loglog_slope(eps, [r.measured["deficit"] for r in recs]) == pytest.approx(1.0, abs=1e-9)
    assert H_T0 == pytest.approx(3.0788, abs=1e-4)
    with pytest.raises(ParamOutOfRange):
        sweep_sharpness([0.6])


def test_corpus_small_run():
    rep = verify_corpus(40, 7)
    assert rep.ok and rep.count == 40
    assert min(rep.min_margins.values()) > -1e-9
    assert rep.max_cheeger_rel_err < 1e-9
    again = verify_corpus(40, 7)
    assert [r.wh for r in again.rows] == [r.wh for r in rep.rows]
    assert corpus_shape(7, 3) == corpus_shape(7, 3)
    with pytest.raises(ParamOutOfRange):
        verify_corpus(0, 7)


def test_corpus_parallel_matches_serial():
    a = verify_corpus(12, 3, CorpusParams(workers=1, asym_sample=0))
    b = verify_corpus(12, 3, CorpusParams(workers=2, asym_sample=0))
    assert [(r.wh, r.margins) for r in a.rows] == [(r.wh, r.margins) for r in b.rows]


def test_corpus_of_equilateral_triangles():
    rng = np.random.default_rng(5)
    shapes = [equilateral(math.exp(rng.normal()), tuple(rng.normal(size=2)), rng.uniform(0, 7)) for _ in range(30)]
    rep = verify_shapes(shapes, CorpusParams(asym_sample=0))
    assert rep.ok
    assert max(abs(r.deficit) for r in rep.rows) <= 1e-8


def test_corpus_with_reuleaux():
    rep = verify_shapes([reuleaux_polygon(256)], CorpusParams(asym_sample=0))
    assert rep.ok
    assert rep.min_margins["main"] > 0.05
