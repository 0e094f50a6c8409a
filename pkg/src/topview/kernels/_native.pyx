# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled backend for the raster kernels; mirrors reference.py exactly.

Compiled with -ffp-contract=off so results match the NumPy backend
bit for bit (no fused multiply-add reassociation).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport floor, fabs

cnp.import_array()

DEF DENOM_EPS = 1e-12


cdef inline double _bilinear_one(const double[:, :, ::1] image, double x, double y,
                                 Py_ssize_t c, Py_ssize_t h, Py_ssize_t w) noexcept nogil:
    cdef double x0 = floor(x)
    cdef double y0 = floor(y)
    cdef double fx = x - x0
    cdef double fy = y - y0
    cdef Py_ssize_t xi = <Py_ssize_t>x0
    cdef Py_ssize_t yi = <Py_ssize_t>y0
    cdef double acc = 0.0
    cdef double wgt
    cdef Py_ssize_t dx, dy, px, py
    for dy in range(2):
        for dx in range(2):
            px = xi + dx
            py = yi + dy
            if 0 <= px < w and 0 <= py < h:
                wgt = (fx if dx else 1.0 - fx) * (fy if dy else 1.0 - fy)
                acc = acc + wgt * image[py, px, c]
    return acc


def bilinear_sample_many(image, xs, ys):
    cdef const double[:, :, ::1] img = np.ascontiguousarray(image, dtype=np.float64)
    cdef const double[::1] x = np.ascontiguousarray(np.ravel(xs), dtype=np.float64)
    cdef const double[::1] y = np.ascontiguousarray(np.ravel(ys), dtype=np.float64)
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1], c = img.shape[2]
    cdef Py_ssize_t n = x.shape[0]
    out_arr = np.zeros((n, c), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, ch
    with nogil:
        for i in range(n):
            for ch in range(c):
                out[i, ch] = _bilinear_one(img, x[i], y[i], ch, h, w)
    return out_arr


def warp_perspective(image, matrix, Py_ssize_t out_h, Py_ssize_t out_w):
    cdef const double[:, :, ::1] img = np.ascontiguousarray(image, dtype=np.float64)
    cdef const double[:, ::1] m = np.ascontiguousarray(matrix, dtype=np.float64)
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1], c = img.shape[2]
    out_arr = np.zeros((out_h, out_w, c), dtype=np.float64)
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, j, ch
    cdef double xt, yt, denom, xs, ys
    with nogil:
        for i in range(out_h):
            yt = <double>i
            for j in range(out_w):
                xt = <double>j
                denom = m[2, 0] * xt + m[2, 1] * yt + m[2, 2]
                if fabs(denom) <= DENOM_EPS:
                    continue
                xs = (m[0, 0] * xt + m[0, 1] * yt + m[0, 2]) / denom
                ys = (m[1, 0] * xt + m[1, 1] * yt + m[1, 2]) / denom
                for ch in range(c):
                    out[i, j, ch] = _bilinear_one(img, xs, ys, ch, h, w)
    return out_arr


def fill_convex_polygon(Py_ssize_t out_h, Py_ssize_t out_w, xs, ys):
    cdef const double[::1] vx = np.ascontiguousarray(np.ravel(xs), dtype=np.float64)
    cdef const double[::1] vy = np.ascontiguousarray(np.ravel(ys), dtype=np.float64)
    cdef Py_ssize_t n = vx.shape[0]
    out_arr = np.zeros((out_h, out_w), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_arr
    if n < 3:
        return out_arr

    cdef double area2 = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        j = (i + 1) % n
        area2 += vx[i] * vy[j] - vx[j] * vy[i]
    if area2 == 0.0:
        return out_arr
    cdef double sign = 1.0 if area2 > 0.0 else -1.0

    cdef double minx = vx[0], maxx = vx[0], miny = vy[0], maxy = vy[0]
    for i in range(1, n):
        if vx[i] < minx: minx = vx[i]
        if vx[i] > maxx: maxx = vx[i]
        if vy[i] < miny: miny = vy[i]
        if vy[i] > maxy: maxy = vy[i]
    cdef Py_ssize_t lo_x = max(0, <Py_ssize_t>np.ceil(minx))
    cdef Py_ssize_t hi_x = min(out_w - 1, <Py_ssize_t>np.floor(maxx))
    cdef Py_ssize_t lo_y = max(0, <Py_ssize_t>np.ceil(miny))
    cdef Py_ssize_t hi_y = min(out_h - 1, <Py_ssize_t>np.floor(maxy))

    cdef Py_ssize_t px, py
    cdef double cross, fpx, fpy
    cdef bint inside
    with nogil:
        for py in range(lo_y, hi_y + 1):
            fpy = <double>py
            for px in range(lo_x, hi_x + 1):
                fpx = <double>px
                inside = True
                for i in range(n):
                    j = (i + 1) % n
                    cross = (vx[j] - vx[i]) * (fpy - vy[i]) - (vy[j] - vy[i]) * (fpx - vx[i])
                    if sign * cross < 0.0:
                        inside = False
                        break
                if inside:
                    out[py, px] = 1
    return out_arr


cdef inline void _ground_color_one(double gx, double gy,
                                   double road_hw, double arm_len, double spacing,
                                   double lane_hw, double duty,
                                   const double[:, ::1] colors,
                                   double* r, double* g, double* b) noexcept nogil:
    cdef double ax = fabs(gx)
    cdef double ay = fabs(gy)
    cdef bint on_x_road = ay <= road_hw and ax <= arm_len
    cdef bint on_y_road = ax <= road_hw and ay <= arm_len
    cdef bint core = ax <= road_hw and ay <= road_hw
    cdef double mx = gx - spacing * floor(gx / spacing)
    cdef double my = gy - spacing * floor(gy / spacing)
    cdef bint line = (on_x_road and not core and ay <= lane_hw and mx < duty * spacing) or \
                     (on_y_road and not core and ax <= lane_hw and my < duty * spacing)
    cdef Py_ssize_t idx
    if line:
        idx = 2
    elif on_x_road or on_y_road:
        idx = 0
    else:
        idx = 1
    r[0] = colors[idx, 0]
    g[0] = colors[idx, 1]
    b[0] = colors[idx, 2]


def ground_colors(gx, gy, texture, colors):
    gx_arr = np.ascontiguousarray(np.ravel(gx), dtype=np.float64)
    gy_arr = np.ascontiguousarray(np.ravel(gy), dtype=np.float64)
    cdef const double[::1] x = gx_arr
    cdef const double[::1] y = gy_arr
    cdef const double[:, ::1] cols = np.ascontiguousarray(colors, dtype=np.float64)
    cdef double road_hw = texture[0], arm_len = texture[1], spacing = texture[2]
    cdef double lane_hw = texture[3], duty = texture[4]
    cdef Py_ssize_t n = x.shape[0]
    out_arr = np.zeros((n, 3), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _ground_color_one(x[i], y[i], road_hw, arm_len, spacing, lane_hw, duty,
                              cols, &out[i, 0], &out[i, 1], &out[i, 2])
    shape = np.shape(gx)
    return out_arr.reshape(shape + (3,))


def render_ground_view(rotation, camera_center, double fx, double fy,
                       double cx, double cy, Py_ssize_t out_h, Py_ssize_t out_w,
                       texture, colors, sky):
    cdef const double[:, ::1] rot = np.ascontiguousarray(rotation, dtype=np.float64)
    cdef const double[::1] cam = np.ascontiguousarray(camera_center, dtype=np.float64)
    cdef const double[:, ::1] cols = np.ascontiguousarray(colors, dtype=np.float64)
    cdef const double[::1] sky_c = np.ascontiguousarray(sky, dtype=np.float64)
    cdef double road_hw = texture[0], arm_len = texture[1], spacing = texture[2]
    cdef double lane_hw = texture[3], duty = texture[4]
    out_arr = np.zeros((out_h, out_w, 3), dtype=np.float64)
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double dcx, dcy, dx, dy, dz, s, gx, gy
    with nogil:
        for i in range(out_h):
            dcy = (<double>i - cy) / fy
            for j in range(out_w):
                dcx = (<double>j - cx) / fx
                # world direction: R^T @ (dcx, dcy, 1)
                dx = rot[0, 0] * dcx + rot[1, 0] * dcy + rot[2, 0]
                dy = rot[0, 1] * dcx + rot[1, 1] * dcy + rot[2, 1]
                dz = rot[0, 2] * dcx + rot[1, 2] * dcy + rot[2, 2]
                if dz < -DENOM_EPS:
                    s = -cam[2] / dz
                    if s > 0.0:
                        gx = cam[0] + s * dx
                        gy = cam[1] + s * dy
                        _ground_color_one(gx, gy, road_hw, arm_len, spacing,
                                          lane_hw, duty, cols,
                                          &out[i, j, 0], &out[i, j, 1], &out[i, j, 2])
                        continue
                out[i, j, 0] = sky_c[0]
                out[i, j, 1] = sky_c[1]
                out[i, j, 2] = sky_c[2]
    return out_arr
