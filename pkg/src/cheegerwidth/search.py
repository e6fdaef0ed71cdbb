"""Random-restart hill climbing on w*h over convex polygons with at most n vertices."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .asymmetry import asymmetry
from .cheeger import WH_MAX, cheeger_constant, wh_exceeds, width_cheeger_product
from .errors import GeometryError, ParamOutOfRange
from .geometry import ConvexPolygon, canonicalize, minimal_width
from .shapes import equilateral, random_convex, rect_RL

STEP_FLOOR = 1e-6
BOUND_TOL = 1e-9


@dataclass(frozen=True)
class SearchConfig:
    n_vertices: int = 3
    iters: int = 20_000
    seed: int = 0
    step0: float = 0.05  # vertex offset relative to the polygon's bbox diagonal
    decay: Optional[float] = None  # None: reach STEP_FLOOR on the last iteration
    restarts: int = 8
    start: str = "random"  # or "equilateral"
    workers: int = 1

    def __post_init__(self):
        if self.n_vertices < 3:
            raise ParamOutOfRange(f"n_vertices must be >= 3, got {self.n_vertices}")
        if self.iters < 1 or self.restarts < 1 or self.workers < 1:
            raise ParamOutOfRange("iters, restarts and workers must be positive")
        if not self.step0 > 0.0:
            raise ParamOutOfRange(f"step0 must be positive, got {self.step0}")
        if self.decay is not None and not 0.0 < self.decay <= 1.0:
            raise ParamOutOfRange(f"decay must lie in (0, 1], got {self.decay}")
        if self.start not in ("random", "equilateral"):
            raise ParamOutOfRange(f"unknown start {self.start!r}")

    @property
    def step_decay(self) -> float:
        if self.decay is not None:
            return self.decay
        return min(1.0, (STEP_FLOOR / self.step0) ** (1.0 / self.iters))


@dataclass
class RestartResult:
    restart: int
    shape: ConvexPolygon
    value: float
    trajectory: list[tuple[int, float]]
    accepted: int


@dataclass
class SearchResult:
    best_shape: ConvexPolygon
    best_value: float
    trajectory: list[tuple[int, float]]
    asym_of_best: float
    restart_values: list[float] = field(default_factory=list)
    max_accepted: float = -math.inf
    accepted: int = 0

    @property
    def bound_ok(self) -> bool:
        return self.max_accepted <= WH_MAX + BOUND_TOL

    def to_dict(self) -> dict:
        return {
            "best_value": self.best_value,
            "asym_of_best": self.asym_of_best,
            "bound": WH_MAX,
            "bound_ok": self.bound_ok,
            "max_accepted": self.max_accepted,
            "accepted": self.accepted,
            "restart_values": self.restart_values,
            "best_shape": self.best_shape.to_json(),
            "trajectory": [[i, v] for i, v in self.trajectory],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def trajectory_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["iteration", "wh"])
        wr.writerows(self.trajectory)
        return buf.getvalue()


def _run_restart(cfg: SearchConfig, restart: int) -> RestartResult:
    rng = np.random.default_rng([cfg.seed, restart])
    P = equilateral(1.0) if cfg.start == "equilateral" else random_convex(cfg.n_vertices, rng)
    w = minimal_width(P)[0]
    value = w * cheeger_constant(P)
    traj = [(0, value)]
    step = cfg.step0
    decay = cfg.step_decay
    accepted = 0
    for it in range(1, cfg.iters + 1):
        verts = P.vertices
        k = int(rng.integers(len(verts)))
        dx, dy = rng.normal(size=2) * (step * P.scale)
        step = max(step * decay, STEP_FLOOR)
        moved = list(verts)
        moved[k] = (verts[k][0] + dx, verts[k][1] + dy)
        try:
            Q = canonicalize(moved)
        except GeometryError:
            continue
        wq = minimal_width(Q)[0]
        if not wh_exceeds(Q, value, wq):
            continue
        vq = wq * cheeger_constant(Q)
        if vq > value:
            P, value = Q, vq
            accepted += 1
            traj.append((it, value))
    return RestartResult(restart, P, value, traj, accepted)


def _run_restart_args(args):
    return _run_restart(*args)


def maximize_wh(cfg: SearchConfig) -> SearchResult:
    """Best w*h found over independent restarts; each restart is seeded by (seed, restart)."""
    jobs = [(cfg, i) for i in range(cfg.restarts)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            runs = list(pool.map(_run_restart_args, jobs))
    else:
        runs = [_run_restart(*j) for j in jobs]
    # max value, ties broken by the lexicographically smallest serialized shape
    best = min(runs, key=lambda r: (-r.value, json.dumps(r.shape.to_json())))
    return SearchResult(
        best_shape=best.shape,
        best_value=best.value,
        trajectory=best.trajectory,
        asym_of_best=asymmetry(best.shape)[0],
        restart_values=[r.value for r in runs],
        max_accepted=max(v for r in runs for _, v in r.trajectory),
        accepted=sum(r.accepted for r in runs),
    )


def minimize_wh_trace(L_list: Iterable[float]) -> list[tuple[float, float]]:
    """w*h along the stretched rectangles [-L, L] x [0, 1]."""
    out = []
    prev = -math.inf
    for L in L_list:
        if not L > prev:
            raise ParamOutOfRange("L values must be strictly increasing")
        prev = L
        out.append((L, width_cheeger_product(rect_RL(L))))
    return out


def shortest_edge(P: ConvexPolygon) -> float:
    v = P.vertices
    return min(math.dist(v[i], v[i - 1]) for i in range(len(v)))
