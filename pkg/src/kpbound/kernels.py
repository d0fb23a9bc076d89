"""Hot numeric kernels.

Each kernel exists twice: a loop version compiled with numba and a
vectorized numpy version.  The module-level names dispatch to one or the
other according to :mod:`kpbound._accel`; both variants stay importable
(``*_numba`` / ``*_numpy``) so tests and the benchmark can compare them.

Hull parameter vector (``hull``), shared by the distance kernels::

    [c1x, c1y, r1, c2x, c2y, r2, npx, npy, nmx, nmy, has_cross]

describing the convex hull of two disks.  ``(npx, npy)`` and ``(nmx, nmy)``
are the outward normals of the two common tangent segments; ``has_cross``
is 0.0 when the hull is a single disk (both disk slots then hold it).
"""

from __future__ import annotations

import math

import numpy as np

from ._accel import USE_NUMBA, njit

_VALID_SLACK = 1e-14
_NEAR_NODE = 1e-6


# --------------------------------------------------------------------------
# support-gap distance to the boundary of a two-disk hull

@njit
def hull_gap_numba(px, py, hull):
    """Signed support gap ``min_n (h(n) - <p, n>)`` and its minimizing normal.

    For interior points this is the distance to the boundary and the normal
    is the outward normal at the nearest boundary point.
    """
    c1x, c1y, r1 = hull[0], hull[1], hull[2]
    c2x, c2y, r2 = hull[3], hull[4], hull[5]
    best = math.inf
    bnx = 1.0
    bny = 0.0
    two = hull[10] > 0.5
    for k in range(2):
        if k == 0:
            cx, cy, r, ox, oy, ro = c1x, c1y, r1, c2x, c2y, r2
        else:
            if not two:
                break
            cx, cy, r, ox, oy, ro = c2x, c2y, r2, c1x, c1y, r1
        vx = px - cx
        vy = py - cy
        s = math.hypot(vx, vy)
        if s > 0.0:
            nx = vx / s
            ny = vy / s
        elif two:
            ux = cx - ox
            uy = cy - oy
            du = math.hypot(ux, uy)
            nx = ux / du
            ny = uy / du
        else:
            nx = 1.0
            ny = 0.0
        val = r - s
        if two:
            other = (ox - px) * nx + (oy - py) * ny + ro
            scale = abs(val) + abs(other) + 1.0
            if other > val + _VALID_SLACK * scale:
                continue
        if val < best:
            best = val
            bnx = nx
            bny = ny
    if two:
        for k in range(2):
            nx = hull[6 + 2 * k]
            ny = hull[7 + 2 * k]
            val = (c1x - px) * nx + (c1y - py) * ny + r1
            if val < best:
                best = val
                bnx = nx
                bny = ny
    return best, bnx, bny


@njit
def hull_gap_many_numba(points, hull):
    n = points.shape[0]
    out = np.empty(n)
    normals = np.empty((n, 2))
    for i in range(n):
        g, nx, ny = hull_gap_numba(points[i, 0], points[i, 1], hull)
        out[i] = g
        normals[i, 0] = nx
        normals[i, 1] = ny
    return out, normals


# scalar fallback: the same source, interpreted (array set-up per call costs more)
hull_gap_numpy = getattr(hull_gap_numba, "py_func", hull_gap_numba)


def hull_gap_many_numpy(points, hull):
    points = np.asarray(points, dtype=float)
    hull = np.asarray(hull, dtype=float)
    two = hull[10] > 0.5
    cx = np.array([hull[0], hull[3]])
    cy = np.array([hull[1], hull[4]])
    rr = np.array([hull[2], hull[5]])
    px = points[:, 0]
    py = points[:, 1]
    cands = []
    for k in (0, 1) if two else (0,):
        o = 1 - k
        vx = px - cx[k]
        vy = py - cy[k]
        s = np.hypot(vx, vy)
        if two:
            ux = cx[k] - cx[o]
            uy = cy[k] - cy[o]
            du = math.hypot(ux, uy)
            fx, fy = ux / du, uy / du
        else:
            fx, fy = 1.0, 0.0
        safe = np.where(s > 0.0, s, 1.0)
        nx = np.where(s > 0.0, vx / safe, fx)
        ny = np.where(s > 0.0, vy / safe, fy)
        val = rr[k] - s
        if two:
            other = (cx[o] - px) * nx + (cy[o] - py) * ny + rr[o]
            scale = np.abs(val) + np.abs(other) + 1.0
            val = np.where(other > val + _VALID_SLACK * scale, np.inf, val)
        cands.append((val, nx, ny))
    if two:
        for k in range(2):
            nx = np.full_like(px, hull[6 + 2 * k])
            ny = np.full_like(px, hull[7 + 2 * k])
            val = (cx[0] - px) * nx + (cy[0] - py) * ny + rr[0]
            cands.append((val, nx, ny))
    vals = np.stack([c[0] for c in cands])
    idx = np.argmin(vals, axis=0)
    cols = np.arange(px.shape[0])
    best = vals[idx, cols]
    nxs = np.stack([c[1] for c in cands])[idx, cols]
    nys = np.stack([c[2] for c in cands])[idx, cols]
    return best, np.column_stack([nxs, nys])


# --------------------------------------------------------------------------
# Kerzman-Stein system for the Szego kernel

@njit
def kerzman_stein_system_numba(z, tangent, sqrt_w):
    """``I + W^1/2 A W^1/2`` with ``A(w, z) = conj(H(z, w)) - H(w, z)`` on the nodes."""
    n = z.shape[0]
    m = np.empty((n, n), dtype=np.complex128)
    c = 1.0 / (2j * math.pi)
    for i in range(n):
        ti = np.conj(tangent[i])
        for j in range(n):
            if i == j:
                m[i, j] = 1.0
                continue
            dz = z[j] - z[i]
            a = c * (ti / np.conj(dz) - tangent[j] / dz)
            m[i, j] = sqrt_w[i] * a * sqrt_w[j]
    return m


def kerzman_stein_system_numpy(z, tangent, sqrt_w):
    dz = z[None, :] - z[:, None]
    np.fill_diagonal(dz, 1.0)
    a = (np.conj(tangent)[:, None] / np.conj(dz) - tangent[None, :] / dz) / (2j * math.pi)
    np.fill_diagonal(a, 0.0)
    m = sqrt_w[:, None] * a * sqrt_w[None, :]
    m[np.diag_indices_from(m)] += 1.0
    return m


@njit
def kerzman_stein_apply_numba(w, tangent_w, z, tangent, weights, values):
    """``sum_j A(w_k, z_j) weights_j values_j`` at boundary points ``w`` off the nodes."""
    m = w.shape[0]
    n = z.shape[0]
    out = np.zeros(m, dtype=np.complex128)
    c = 1.0 / (2j * math.pi)
    for k in range(m):
        tk = np.conj(tangent_w[k])
        acc = 0.0 + 0.0j
        for j in range(n):
            dz = z[j] - w[k]
            # the kernel vanishes on the diagonal; closer than this its two
            # 1/dz terms cancel catastrophically
            if abs(dz) <= _NEAR_NODE * weights[j].real:
                continue
            acc += c * (tk / np.conj(dz) - tangent[j] / dz) * weights[j] * values[j]
        out[k] = acc
    return out


def kerzman_stein_apply_numpy(w, tangent_w, z, tangent, weights, values):
    out = np.empty(w.shape[0], dtype=np.complex128)
    for lo in range(0, w.shape[0], 512):
        ww = w[lo:lo + 512]
        dz = z[None, :] - ww[:, None]
        hit = np.abs(dz) <= _NEAR_NODE * weights.real[None, :]
        dz = np.where(hit, 1.0, dz)
        a = (np.conj(tangent_w[lo:lo + 512])[:, None] / np.conj(dz) - tangent[None, :] / dz) / (2j * math.pi)
        a = np.where(hit, 0.0, a)
        out[lo:lo + 512] = a @ (weights * values)
    return out


# --------------------------------------------------------------------------
# barycentric Cauchy integral

@njit
def cauchy_barycentric_numba(targets, nodes, dnodes, values):
    """Evaluate ``sum_j v_j c_j / sum_j c_j`` with ``c_j = dnodes_j / (nodes_j - t)``.

    ``dnodes`` holds the complex quadrature differentials ``dz_j`` of the
    contour.  ``values`` has shape (k, n): k functions sampled at the nodes.
    Exactly hitting a node returns the node value.
    """
    m = targets.shape[0]
    k = values.shape[0]
    n = nodes.shape[0]
    out = np.zeros((k, m), dtype=np.complex128)
    for i in range(m):
        t = targets[i]
        den = 0.0 + 0.0j
        hit = -1
        for j in range(n):
            d = nodes[j] - t
            if d == 0.0:
                hit = j
                break
            den += dnodes[j] / d
        if hit >= 0:
            for q in range(k):
                out[q, i] = values[q, hit]
            continue
        for q in range(k):
            num = 0.0 + 0.0j
            for j in range(n):
                num += values[q, j] * dnodes[j] / (nodes[j] - t)
            out[q, i] = num / den
    return out


def cauchy_barycentric_numpy(targets, nodes, dnodes, values):
    m = targets.shape[0]
    out = np.empty((values.shape[0], m), dtype=np.complex128)
    for lo in range(0, m, 512):
        t = targets[lo:lo + 512]
        d = nodes[None, :] - t[:, None]
        hit = d == 0.0
        c = dnodes[None, :] / np.where(hit, 1.0, d)
        c = np.where(hit, 0.0, c)
        num = c @ values.T
        den = c.sum(axis=1)
        block = (num / den[:, None]).T
        rows, cols = np.nonzero(hit)
        for r, col in zip(rows, cols):
            block[:, r] = values[:, col]
        out[:, lo:lo + 512] = block
    return out


# --------------------------------------------------------------------------
# dispatch

if USE_NUMBA:
    hull_gap = hull_gap_numba
    hull_gap_many = hull_gap_many_numba
    kerzman_stein_system = kerzman_stein_system_numba
    kerzman_stein_apply = kerzman_stein_apply_numba
    cauchy_barycentric = cauchy_barycentric_numba
else:
    hull_gap = hull_gap_numpy
    hull_gap_many = hull_gap_many_numpy
    kerzman_stein_system = kerzman_stein_system_numpy
    kerzman_stein_apply = kerzman_stein_apply_numpy
    cauchy_barycentric = cauchy_barycentric_numpy

PAIRS = {
    "hull_gap_many": (hull_gap_many_numba, hull_gap_many_numpy),
    "kerzman_stein_system": (kerzman_stein_system_numba, kerzman_stein_system_numpy),
    "kerzman_stein_apply": (kerzman_stein_apply_numba, kerzman_stein_apply_numpy),
    "cauchy_barycentric": (cauchy_barycentric_numba, cauchy_barycentric_numpy),
}
