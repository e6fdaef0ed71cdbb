"""Inequality checks, deficit/asymmetry functionals, family sweeps and corpus runs.

Every check returns a margin, RHS - LHS of the inequality after normalizing
lengths by w(K) and areas by w(K)**2, so one absolute tolerance applies to all
shapes regardless of scale.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .asymmetry import asymmetry
from .cheeger import WH_MAX, SQRT_PI_SQRT3, cheeger
from .errors import OffsetBeyondInradius, ParamOutOfRange
from .geometry import (
    SQRT3,
    ConvexPolygon,
    diameter,
    hausdorff,
    inner_area,
    inner_parallel,
    inradius,
    minimal_width,
)
from .shapes import family_Reps, family_Teps, random_convex, rect_RL

MARGIN_TOL = 1e-9
# 3^(1/4) pi^(1/2): sup of the deficit, and the upper end of the stability range
ETA_MAX = SQRT_PI_SQRT3
# admissible stability constant quoted for eta <= ETA_MAX / 2
ADMISSIBLE_C = 8.0 * 3.0**0.25 / (75.0 * math.sqrt(5.0 * math.pi))
H_T0 = WH_MAX / SQRT3  # Cheeger constant of the width-sqrt(3) equilateral triangle
CHECKS = ("main", "lower", "ftouhi", "pal_inradius", "pal_area", "width_lemma", "area_comparison")


@dataclass(frozen=True)
class Measured:
    """Scalars of one polygon, computed once and shared by all checks."""

    polygon: ConvexPolygon
    w: float
    r: float
    area: float
    perim: float
    h: float
    cheeger_rel_err: float

    @property
    def wh(self) -> float:
        return self.w * self.h


def measure(P: ConvexPolygon) -> Measured:
    res = cheeger(P)
    cs = res.cheeger_set
    return Measured(
        polygon=P,
        w=minimal_width(P)[0],
        r=inradius(P),
        area=P.area,
        perim=P.perimeter,
        h=res.h,
        cheeger_rel_err=abs(cs.perimeter / cs.area - res.h) / res.h,
    )


def _m(P) -> Measured:
    return P if isinstance(P, Measured) else measure(P)


# ---------------------------------------------------------------- functionals


def deficit(P) -> float:
    """WH_MAX - w(K) h(K); zero exactly for equilateral triangles."""
    return WH_MAX - _m(P).wh


def check_main(P) -> float:
    return WH_MAX - _m(P).wh


def check_lower(P) -> float:
    return _m(P).wh - 2.0


def check_ftouhi(P) -> float:
    """h <= 1/r + sqrt(pi/|K|), multiplied through by w."""
    m = _m(P)
    return m.w / m.r + m.w * math.sqrt(math.pi / m.area) - m.wh


def check_pal(P) -> tuple[float, float]:
    """(3r - w)/w and (sqrt(3)|K| - w^2)/w^2."""
    m = _m(P)
    return (3.0 * m.r - m.w) / m.w, (SQRT3 * m.area - m.w * m.w) / (m.w * m.w)


def _check_offset(m: Measured, t: float) -> None:
    if t < 0.0 or t >= m.r:
        raise OffsetBeyondInradius(f"need 0 <= t < r = {m.r}, got {t}")


def check_width_lemma(P, t: float) -> float:
    """w(K_{-t}) >= w(K) - 3t, normalized by w(K)."""
    m = _m(P)
    _check_offset(m, t)
    inner = inner_parallel(m.polygon, t)
    w_inner = 0.0 if inner is None else minimal_width(inner)[0]
    return (w_inner - (m.w - 3.0 * t)) / m.w


def equilateral_inner_area(w: float, t: float) -> float:
    """|T_{-t}| for an equilateral T of width w; inner sets are homothetic of width w - 3t."""
    s = max(w - 3.0 * t, 0.0)
    return s * s / SQRT3


def check_area_comparison(P, t: float) -> float:
    """|K_{-t}| >= |T_{-t}| for the equilateral T of equal width, normalized by w^2."""
    m = _m(P)
    _check_offset(m, t)
    return (inner_area(m.polygon, t) - equilateral_inner_area(m.w, t)) / (m.w * m.w)


# ---------------------------------------------------------------- stability


@dataclass(frozen=True)
class StabilityParams:
    eta: float
    c2: float
    C: float


def stability_constant(eta: float, c2: float) -> StabilityParams:
    """C(eta) = 2 sqrt(pi sqrt 3) / (c2 sqrt 3 (sqrt(pi sqrt 3) - eta)^2)."""
    if not 0.0 < eta < ETA_MAX:
        raise ParamOutOfRange(f"eta must lie in (0, {ETA_MAX}), got {eta}")
    if not c2 > 0.0:
        raise ParamOutOfRange(f"c2 must be positive, got {c2}")
    C = 2.0 * SQRT_PI_SQRT3 / (c2 * SQRT3 * (SQRT_PI_SQRT3 - eta) ** 2)
    return StabilityParams(eta, c2, C)


def c2_for_constant(eta: float, C: float) -> float:
    """The c2 that makes C(eta) equal to the given C."""
    return stability_constant(eta, 1.0).C / C


def stability_check(P, params: StabilityParams, asym: Optional[float] = None) -> Optional[float]:
    """C * deficit - asymmetry, or None when the deficit exceeds eta."""
    m = _m(P)
    d = WH_MAX - m.wh
    if d > params.eta:
        return None
    if asym is None:
        asym = asymmetry(m.polygon)[0]
    return params.C * d - asym


# ---------------------------------------------------------------- reports


@dataclass
class ShapeReport:
    w: float
    r: float
    area: float
    perim: float
    diam: float
    h: float
    wh: float
    deficit: float
    asymmetry: Optional[float]
    margins: dict[str, float]

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ShapeReport":
        return cls(**{**d, "margins": dict(d["margins"])})


def shape_report(P: ConvexPolygon, with_asymmetry: bool = True, t_grid: int = 8) -> ShapeReport:
    m = measure(P)
    pal_r, pal_a = check_pal(m)
    ts = [m.r * k / t_grid for k in range(t_grid)]
    margins = {
        "main": check_main(m),
        "lower": check_lower(m),
        "ftouhi": check_ftouhi(m),
        "pal_inradius": pal_r,
        "pal_area": pal_a,
        "width_lemma": min(check_width_lemma(m, t) for t in ts),
        "area_comparison": min(check_area_comparison(m, t) for t in ts),
    }
    return ShapeReport(
        w=m.w,
        r=m.r,
        area=m.area,
        perim=m.perim,
        diam=diameter(P),
        h=m.h,
        wh=m.wh,
        deficit=WH_MAX - m.wh,
        asymmetry=asymmetry(P)[0] if with_asymmetry else None,
        margins=margins,
    )


# ---------------------------------------------------------------- sweeps


@dataclass
class SweepRecord:
    param: float
    measured: dict[str, float]
    reference: dict[str, float]
    rel_err: float = field(init=False)

    def __post_init__(self):
        self.rel_err = max((self.errors().values()), default=0.0)

    def errors(self) -> dict[str, float]:
        return {
            k: abs(self.measured[k] - ref) / abs(ref) for k, ref in self.reference.items() if k in self.measured
        }


def sharpness_asymmetry_reference(eps: float) -> float:
    """Closed form eps / (2 (sqrt 3 - eps)) for the asymmetry of the clipped triangle."""
    return eps / (2.0 * (SQRT3 - eps))


def sweep_sharpness(eps_list: Iterable[float]) -> list[SweepRecord]:
    """Deficit, asymmetry and d_H(R_eps, T_eps) for the clipped-triangle family."""
    out = []
    for eps in eps_list:
        if not 0.0 < eps <= min(SQRT3 / 2, 0.5):
            raise ParamOutOfRange(f"epsilon must lie in (0, 0.5], got {eps}")
        R = family_Reps(eps)
        m = measure(R)
        d = WH_MAX - m.wh
        a = asymmetry(R)[0]
        measured = {
            "h": m.h,
            "deficit": d,
            "asymmetry": a,
            "hausdorff": hausdorff(R, family_Teps(eps)),
            "ratio": a / d,
        }
        reference = {
            "h": H_T0,
            "deficit": eps * H_T0,
            "asymmetry": sharpness_asymmetry_reference(eps),
            "hausdorff": eps / 2.0,
        }
        out.append(SweepRecord(eps, measured, reference))
    return out


def rectangle_cheeger_root(length: float, height: float = 1.0) -> float:
    """Smaller root of (length - 2t)(height - 2t) = pi t^2, the Cheeger radius of the rectangle."""
    a = 4.0 - math.pi
    b = 2.0 * (length + height)
    c = length * height
    # numerically stable form of (b - sqrt(b^2 - 4ac)) / (2a)
    return 2.0 * c / (b + math.sqrt(b * b - 4.0 * a * c))


def sweep_rectangles(L_list: Iterable[float]) -> list[SweepRecord]:
    out = []
    for L in L_list:
        R = rect_RL(L)
        m = measure(R)
        h_ref = 1.0 / rectangle_cheeger_root(2.0 * L, 1.0)
        out.append(SweepRecord(L, {"h": m.h, "wh": m.wh}, {"h": h_ref, "wh": h_ref}))
    return out


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


# ---------------------------------------------------------------- corpus


@dataclass
class CorpusParams:
    n_max: int = 12
    t_grid: int = 8
    eta: float = ETA_MAX / 2
    c2: float = field(default_factory=lambda: c2_for_constant(ETA_MAX / 2, ADMISSIBLE_C))
    asym_sample: int = 32
    tol: float = MARGIN_TOL
    workers: int = 1


@dataclass
class ShapeRow:
    index: int
    n_vertices: int
    w: float
    r: float
    area: float
    h: float
    wh: float
    deficit: float
    cheeger_rel_err: float
    margins: dict[str, float]
    vertices: tuple
    asymmetry: Optional[float] = None


@dataclass
class Violation:
    check: str
    index: int
    margin: float
    vertices: tuple

    def message(self) -> str:
        return (
            f"{THEOREM_NAMES[self.check]} violated by shape #{self.index} (margin {self.margin!r}): "
            f"{json.dumps({'vertices': [list(v) for v in self.vertices]})}"
        )


THEOREM_NAMES = {
    "main": "reverse Cheeger inequality w h <= 3 + sqrt(pi sqrt 3)",
    "lower": "lower bound w h > 2",
    "ftouhi": "Ftouhi inequality h <= 1/r + sqrt(pi/|K|)",
    "pal_inradius": "Pal inequality w <= 3r",
    "pal_area": "Pal inequality w^2 <= sqrt(3)|K|",
    "width_lemma": "inner-width lemma w(K_-t) >= w(K) - 3t",
    "area_comparison": "inner-area comparison |K_-t| >= |T_-t|",
    "cheeger_consistency": "Cheeger set perimeter/area = h",
}


@dataclass
class CorpusReport:
    count: int
    seed: Optional[int]
    rows: list[ShapeRow]
    min_margins: dict[str, float]
    violations: list[Violation]
    max_cheeger_rel_err: float
    max_wh: float
    stability: StabilityParams
    asym_ratio_max: Optional[float]
    stability_exceedances: int

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "ok": self.ok,
            "violations": [v.message() for v in self.violations],
            "min_margins": self.min_margins,
            "max_wh": self.max_wh,
            "max_cheeger_rel_err": self.max_cheeger_rel_err,
            "stability": asdict(self.stability),
            "admissible_C": ADMISSIBLE_C,
            "asym_ratio_max": self.asym_ratio_max,
            "asym_ratio_sample": sum(1 for r in self.rows if r.asymmetry is not None),
            "stability_exceedances": self.stability_exceedances,
        }


def _evaluate(args) -> ShapeRow:
    index, P, t_grid = args
    m = measure(P)
    pal_r, pal_a = check_pal(m)
    ts = [m.r * k / t_grid for k in range(t_grid)]
    margins = {
        "main": check_main(m),
        "lower": check_lower(m),
        "ftouhi": check_ftouhi(m),
        "pal_inradius": pal_r,
        "pal_area": pal_a,
        "width_lemma": min(check_width_lemma(m, t) for t in ts),
        "area_comparison": min(check_area_comparison(m, t) for t in ts),
    }
    return ShapeRow(
        index=index,
        n_vertices=len(P),
        w=m.w,
        r=m.r,
        area=m.area,
        h=m.h,
        wh=m.wh,
        deficit=WH_MAX - m.wh,
        cheeger_rel_err=m.cheeger_rel_err,
        margins=margins,
        vertices=P.vertices,
    )


def corpus_shape(seed: int, index: int, n_max: int = 12) -> ConvexPolygon:
    """The index-th shape of the seeded corpus; independent of every other index."""
    rng = np.random.default_rng([seed, index])
    return random_convex(int(rng.integers(3, n_max + 1)), rng)


def verify_shapes(
    shapes: Iterable[ConvexPolygon], params: Optional[CorpusParams] = None, seed: Optional[int] = None
) -> CorpusReport:
    params = params or CorpusParams()
    jobs = [(i, P, params.t_grid) for i, P in enumerate(shapes)]
    if params.workers > 1:
        with ProcessPoolExecutor(params.workers) as pool:
            rows = list(pool.map(_evaluate, jobs, chunksize=64))
    else:
        rows = [_evaluate(j) for j in jobs]

    stab = stability_constant(params.eta, params.c2)
    violations: list[Violation] = []
    min_margins = {k: math.inf for k in CHECKS}
    for row in rows:
        for k, v in row.margins.items():
            min_margins[k] = min(min_margins[k], v)
            if v < -params.tol:
                violations.append(Violation(k, row.index, v, row.vertices))
        if row.cheeger_rel_err > params.tol:
            violations.append(Violation("cheeger_consistency", row.index, -row.cheeger_rel_err, row.vertices))

    ratio_max = None
    exceed = 0
    eligible = [r for r in rows if 0.0 < r.deficit <= params.eta][: params.asym_sample]
    for row in eligible:
        row.asymmetry = asymmetry(ConvexPolygon(row.vertices))[0]
        ratio = row.asymmetry / row.deficit
        ratio_max = ratio if ratio_max is None else max(ratio_max, ratio)
        if stab.C * row.deficit - row.asymmetry < -params.tol:
            exceed += 1

    return CorpusReport(
        count=len(rows),
        seed=seed,
        rows=rows,
        min_margins=min_margins,
        violations=violations,
        max_cheeger_rel_err=max((r.cheeger_rel_err for r in rows), default=0.0),
        max_wh=max((r.wh for r in rows), default=math.nan),
        stability=stab,
        asym_ratio_max=ratio_max,
        stability_exceedances=exceed,
    )


def verify_corpus(count: int, seed: int, params: Optional[CorpusParams] = None) -> CorpusReport:
    """Run every check on ``count`` seeded random polygons with 3..n_max vertices."""
    if count < 1:
        raise ParamOutOfRange(f"count must be >= 1, got {count}")
    params = params or CorpusParams()
    shapes = (corpus_shape(seed, i, params.n_max) for i in range(count))
    return verify_shapes(shapes, params, seed=seed)
