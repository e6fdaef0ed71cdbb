"""Independent reference computations used only by the tests.

They trade speed for simplicity: shapely for exact point/polygon distances,
dense angle grids, an LP for the translation subproblem and a brute-force grid
for the asymmetry of the square.
"""

import math

import numpy as np
from scipy.optimize import linprog, minimize
from shapely.geometry import Point, Polygon

from cheegerwidth.geometry import EquilateralPose, ConvexPolygon, hausdorff


def hausdorff_vertices(P, Q):
    """d_H of convex polygons: the farthest point of one from the other is a vertex."""
    sp, sq = Polygon(P.vertices), Polygon(Q.vertices)
    a = max(sq.distance(Point(v)) for v in P.vertices)
    b = max(sp.distance(Point(v)) for v in Q.vertices)
    return max(a, b)


def support_np(P, thetas):
    v = np.asarray(P.vertices)
    return (v[:, 0:1] * np.cos(thetas) + v[:, 1:2] * np.sin(thetas)).max(axis=0)


def hausdorff_sampled(P, Q, n=20000):
    th = np.linspace(0.0, 2 * math.pi, n, endpoint=False)
    return float(np.abs(support_np(P, th) - support_np(Q, th)).max())


def width_naive(P):
    """min over edge normals of the directional width, O(n^2)."""
    v = np.asarray(P.vertices)
    best = math.inf
    for i in range(len(v)):
        e = v[(i + 1) % len(v)] - v[i]
        nrm = np.array([e[1], -e[0]]) / np.hypot(*e)
        proj = v @ nrm
        best = min(best, proj.max() - proj.min())
    return best


def width_grid(P, n=200000):
    th = np.linspace(0.0, math.pi, n, endpoint=False)
    return float((support_np(P, th) + support_np(P, th + math.pi)).min())


def edge_normal_angles(P):
    v = np.asarray(P.vertices)
    e = np.roll(v, -1, axis=0) - v
    return np.mod(np.arctan2(-e[:, 0], e[:, 1]), 2 * math.pi)


def lp_translation(K, T, n=4096):
    """min_c max_theta |h_K - h_T - c.nu| on a grid that includes every kink; returns (s, c)."""
    th = np.concatenate([np.linspace(0, 2 * math.pi, n, endpoint=False), edge_normal_angles(K), edge_normal_angles(T)])
    g = support_np(K, th) - support_np(T, th)
    cs, sn = np.cos(th), np.sin(th)
    # variables (cx, cy, s): |g - c.nu| <= s
    A = np.concatenate([np.stack([-cs, -sn, -np.ones_like(th)], 1), np.stack([cs, sn, -np.ones_like(th)], 1)])
    b = np.concatenate([-g, g])
    res = linprog([0, 0, 1], A_ub=A, b_ub=b, bounds=[(None, None)] * 3, method="highs")
    return res.x[2], (res.x[0], res.x[1])


def asymmetry_grid_square(n_rot=100, n_tr=100, n_theta=720):
    """Brute-force asymmetry of the unit square [0,1]^2: 10^6 pose nodes, then a local polish."""
    sq = np.array([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    th = np.linspace(0, 2 * math.pi, n_theta, endpoint=False)
    cs, sn = np.cos(th), np.sin(th)
    hk = (sq[:, 0:1] * cs + sq[:, 1:2] * sn).max(axis=0)
    offs = np.linspace(-0.25, 0.25, n_tr)
    cx, cy = np.meshgrid(0.5 + offs, 0.5 + offs, indexing="ij")
    cx, cy = cx.ravel(), cy.ravel()
    best = (math.inf, None)
    for rho in np.linspace(0, 2 * math.pi / 3, n_rot, endpoint=False):
        tri = np.array(EquilateralPose(1.0, (0.0, 0.0), rho).vertices())
        ht = (tri[:, 0:1] * cs + tri[:, 1:2] * sn).max(axis=0)
        err = np.abs((hk - ht)[None, :] - cx[:, None] * cs[None, :] - cy[:, None] * sn[None, :]).max(axis=1)
        k = int(err.argmin())
        if err[k] < best[0]:
            best = (float(err[k]), (cx[k], cy[k], rho))
    K = ConvexPolygon(tuple(map(tuple, sq)))

    def f(x):
        return hausdorff(K, ConvexPolygon(EquilateralPose(1.0, (x[0], x[1]), x[2]).vertices()))

    res = minimize(f, best[1], method="Nelder-Mead", options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000})
    return min(float(res.fun), best[0])
