"""Command-line interface: ``cheegerwidth <command> [flags]``.

Exit codes: 0 success, 1 an inequality was violated, 2 malformed input or flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional, Sequence

from .asymmetry import asymmetry
from .cheeger import cheeger
from .errors import GeometryError
from .geometry import ConvexPolygon, canonicalize
from .search import SearchConfig, maximize_wh
from .verify import (
    ADMISSIBLE_C,
    ETA_MAX,
    THEOREM_NAMES,
    CorpusParams,
    c2_for_constant,
    shape_report,
    sweep_rectangles,
    sweep_sharpness,
    verify_corpus,
)

EXIT_OK, EXIT_VIOLATION, EXIT_BAD_INPUT = 0, 1, 2
DEFAULT_EPS = [2.0**-k for k in range(3, 11)]
DEFAULT_L = [2.0**k for k in range(1, 10)]


class BadInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadInput(message)


def load_shape(path: str) -> ConvexPolygon:
    """Read ``{"vertices": [[x, y], ...]}`` and canonicalize it."""
    try:
        with open(path) as fh:
            data = json.load(fh)
        pts = data["vertices"]
        if not isinstance(pts, list) or not all(isinstance(p, list) and len(p) == 2 for p in pts):
            raise BadInput(f"{path}: 'vertices' must be a list of [x, y] pairs")
        pts = [(float(x), float(y)) for x, y in pts]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise BadInput(f"{path}: {exc}") from exc
    if not all(math.isfinite(c) for p in pts for c in p):
        raise BadInput(f"{path}: non-finite coordinate")
    try:
        return canonicalize(pts)
    except GeometryError as exc:
        raise BadInput(f"{path}: {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _float_list(s: str) -> list[float]:
    try:
        return [float(x) for x in s.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cheegerwidth", description="Width and Cheeger constant of convex polygons.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("report", help="print scalars and inequality margins of one shape")
    r.add_argument("--shape", required=True)
    r.add_argument("--no-asymmetry", action="store_true")

    v = sub.add_parser("verify", help="check all inequalities on a seeded random corpus")
    v.add_argument("--count", type=_positive_int, required=True)
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--eta", type=float, default=ETA_MAX / 2)
    v.add_argument("--c2", type=float, default=None)
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--asym-sample", type=int, default=32)
    v.add_argument("--workers", type=_positive_int, default=1)
    v.add_argument("--out", help="per-shape CSV")

    s = sub.add_parser("sweep", help="closed-form families: reps (clipped triangles) or rectangles")
    s.add_argument("family", choices=["reps", "rectangles"])
    s.add_argument("--values", type=_float_list, help="comma-separated epsilon or L values")
    s.add_argument("--out")

    a = sub.add_parser("asymmetry", help="Hausdorff distance to the nearest equal-width equilateral triangle")
    a.add_argument("--shape", required=True)

    o = sub.add_parser("optimize", help="hill-climb w*h over polygons with at most n vertices")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--seed", type=int, required=True)
    o.add_argument("--iters", type=_positive_int, default=20_000)
    o.add_argument("--restarts", type=_positive_int, default=8)
    o.add_argument("--step0", type=float, default=0.05)
    o.add_argument("--workers", type=_positive_int, default=1)
    o.add_argument("--trajectory", help="trajectory CSV")

    c = sub.add_parser("cheeger-set", help="render a shape and its Cheeger set as SVG")
    c.add_argument("--shape", required=True)
    c.add_argument("--out", required=True)
    return p


# ---------------------------------------------------------------- commands


def _cmd_report(args) -> int:
    P = load_shape(args.shape)
    rep = shape_report(P, with_asymmetry=not args.no_asymmetry)
    print(_dump(rep.to_dict()))
    bad = [k for k, m in rep.margins.items() if m < -1e-9]
    for k in bad:
        print(f"{THEOREM_NAMES[k]} violated (margin {rep.margins[k]!r}): {json.dumps(P.to_json())}", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def _corpus_csv(report) -> str:
    keys = list(report.rows[0].margins) if report.rows else []
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["index", "n_vertices", "w", "r", "area", "h", "wh", "deficit", "cheeger_rel_err", "asymmetry"]
                + [f"margin_{k}" for k in keys] + ["vertices"])
    for row in report.rows:
        wr.writerow([row.index, row.n_vertices, row.w, row.r, row.area, row.h, row.wh, row.deficit,
                     row.cheeger_rel_err, "" if row.asymmetry is None else row.asymmetry]
                    + [row.margins[k] for k in keys] + [json.dumps([list(v) for v in row.vertices])])
    return buf.getvalue()


def _cmd_verify(args) -> int:
    try:
        c2 = args.c2 if args.c2 is not None else c2_for_constant(args.eta, ADMISSIBLE_C)
        params = CorpusParams(n_max=args.n_max, eta=args.eta, c2=c2, asym_sample=args.asym_sample, workers=args.workers)
        if params.n_max < 3:
            raise BadInput("--n-max must be >= 3")
        report = verify_corpus(args.count, args.seed, params)
    except GeometryError as exc:
        raise BadInput(str(exc)) from exc
    print(_dump(report.summary()))
    if args.out:
        _write_text(args.out, _corpus_csv(report))
    for v in report.violations:
        print(v.message(), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def sweep_csv(records) -> str:
    """Long format: one row per (parameter, quantity)."""
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["param", "quantity", "measured", "reference", "rel_err"])
    for rec in records:
        errs = rec.errors()
        for k, m in rec.measured.items():
            wr.writerow([rec.param, k, m, rec.reference.get(k, ""), errs.get(k, "")])
    return buf.getvalue()


def _cmd_sweep(args) -> int:
    try:
        if args.family == "reps":
            recs = sweep_sharpness(args.values or DEFAULT_EPS)
        else:
            recs = sweep_rectangles(args.values or DEFAULT_L)
    except GeometryError as exc:
        raise BadInput(str(exc)) from exc
    _write_text(args.out, sweep_csv(recs))
    return EXIT_OK


def _cmd_asymmetry(args) -> int:
    P = load_shape(args.shape)
    val, pose = asymmetry(P)
    print(_dump({
        "asymmetry": val,
        "pose": {"width": pose.width, "center": list(pose.center), "rotation": pose.rotation},
        "triangle": {"vertices": [list(v) for v in pose.vertices()]},
    }))
    return EXIT_OK


def _cmd_optimize(args) -> int:
    try:
        cfg = SearchConfig(n_vertices=args.n, iters=args.iters, seed=args.seed, step0=args.step0,
                           restarts=args.restarts, workers=args.workers)
    except GeometryError as exc:
        raise BadInput(str(exc)) from exc
    res = maximize_wh(cfg)
    print(res.to_json())
    if args.trajectory:
        _write_text(args.trajectory, res.trajectory_csv())
    if not res.bound_ok:
        print(f"{THEOREM_NAMES['main']} exceeded by an accepted state: {res.max_accepted!r}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cheeger_svg(P: ConvexPolygon, size: float = 400.0) -> str:
    """Polygon outline plus the Cheeger set drawn as core offsets joined by arcs."""
    res = cheeger(P)
    core, rho = res.cheeger_set.core.vertices, res.r_star
    xs = [x for x, _ in P.vertices]
    ys = [y for _, y in P.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    pad = 0.05 * span
    vb = (min(xs) - pad, -(max(ys) + pad), span + 2 * pad, span + 2 * pad)

    def pt(x, y):
        return f"{x!r},{-y!r}"

    outline = " ".join(pt(x, y) for x, y in P.vertices)
    # y is negated, so CCW arcs become positive-angle arcs in SVG coordinates (sweep-flag 1)
    n = len(core)
    cmds = []
    for i in range(n):
        a, b = core[i], core[(i + 1) % n]
        ex, ey = b[0] - a[0], b[1] - a[1]
        L = math.hypot(ex, ey)
        nx, ny = ey / L, -ex / L
        start = (a[0] + rho * nx, a[1] + rho * ny)
        end = (b[0] + rho * nx, b[1] + rho * ny)
        cmds.append(("M " if i == 0 else "L ") + pt(*start))
        cmds.append("L " + pt(*end))
        c = core[(i + 2) % n]
        fx, fy = c[0] - b[0], c[1] - b[1]
        fl = math.hypot(fx, fy)
        nxt = (b[0] + rho * fy / fl, b[1] - rho * fx / fl)
        cmds.append(f"A {rho!r},{rho!r} 0 0 1 " + pt(*nxt))
    path = " ".join(cmds) + " Z"
    stroke = span / 200
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size!r}" height="{size!r}" '
        f'viewBox="{vb[0]!r} {vb[1]!r} {vb[2]!r} {vb[3]!r}">\n'
        f'  <polygon points="{outline}" fill="none" stroke="black" stroke-width="{stroke!r}"/>\n'
        f'  <path d="{path}" fill="#4a90d9" fill-opacity="0.4" stroke="#1f4e8c" stroke-width="{stroke!r}"/>\n'
        f"  <!-- h = {res.h!r}, r* = {rho!r} -->\n"
        "</svg>\n"
    )


def _cmd_cheeger_set(args) -> int:
    P = load_shape(args.shape)
    _write_text(args.out, cheeger_svg(P))
    return EXIT_OK


COMMANDS = {
    "report": _cmd_report,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "asymmetry": _cmd_asymmetry,
    "optimize": _cmd_optimize,
    "cheeger-set": _cmd_cheeger_set,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run())
