"""NumPy backend for the raster kernels.

Semantics shared with the compiled backend:
    - pixel (m, n) sits at continuous coordinates (m, n);
    - sampling outside the image contributes zero (zero padding);
    - polygon edges are inclusive.
"""

import numpy as np

DENOMINATOR_EPS = 1e-12


def bilinear_sample_many(image, xs, ys):
    """Sample an (H, W, C) float64 image at continuous (xs, ys) -> (K, C).

    V = sum_corners U(m, n) * max(0, 1-|x-m|) * max(0, 1-|y-n|).
    """
    image = np.asarray(image, dtype=np.float64)
    h, w, c = image.shape
    xs = np.asarray(xs, dtype=np.float64).ravel()
    ys = np.asarray(ys, dtype=np.float64).ravel()

    x0 = np.floor(xs)
    y0 = np.floor(ys)
    fx = xs - x0
    fy = ys - y0
    x0 = x0.astype(np.int64)
    y0 = y0.astype(np.int64)

    out = np.zeros((xs.size, c))
    for dx, dy in ((0, 0), (1, 0), (0, 1), (1, 1)):
        xi = x0 + dx
        yi = y0 + dy
        weight = (fx if dx else 1.0 - fx) * (fy if dy else 1.0 - fy)
        valid = (xi >= 0) & (xi < w) & (yi >= 0) & (yi < h)
        xi = np.clip(xi, 0, w - 1)
        yi = np.clip(yi, 0, h - 1)
        out += (weight * valid)[:, None] * image[yi, xi]
    return out


def warp_perspective(image, matrix, out_h, out_w):
    """Inverse-map warp: out(x, y) = bilinear(image, matrix @ (x, y, 1)).

    `matrix` sends output pixel coordinates to source pixel coordinates.
    Output pixels whose source lies at infinity (|w| <= 1e-12) are zero.
    """
    image = np.asarray(image, dtype=np.float64)
    m = np.asarray(matrix, dtype=np.float64)
    xt, yt = np.meshgrid(
        np.arange(out_w, dtype=np.float64), np.arange(out_h, dtype=np.float64)
    )
    denom = m[2, 0] * xt + m[2, 1] * yt + m[2, 2]
    valid = np.abs(denom) > DENOMINATOR_EPS
    denom = np.where(valid, denom, 1.0)
    xs = (m[0, 0] * xt + m[0, 1] * yt + m[0, 2]) / denom
    ys = (m[1, 0] * xt + m[1, 1] * yt + m[1, 2]) / denom
    xs = np.where(valid, xs, -1.0)
    ys = np.where(valid, ys, -1.0)
    sampled = bilinear_sample_many(image, xs.ravel(), ys.ravel())
    return sampled.reshape(out_h, out_w, image.shape[2])


def fill_convex_polygon(out_h, out_w, xs, ys):
    """Rasterize a convex polygon (vertices in order) to a uint8 mask.

    A pixel center is inside when it lies on the interior side of every
    edge, boundary inclusive; vertex order may be CW or CCW.
    """
    xs = np.asarray(xs, dtype=np.float64).ravel()
    ys = np.asarray(ys, dtype=np.float64).ravel()
    mask = np.zeros((out_h, out_w), dtype=np.uint8)
    n = xs.size
    if n < 3:
        return mask

    area2 = 0.0
    for i in range(n):
        j = (i + 1) % n
        area2 += xs[i] * ys[j] - xs[j] * ys[i]
    if area2 == 0.0:
        return mask
    sign = 1.0 if area2 > 0.0 else -1.0

    lo_x = max(0, int(np.ceil(xs.min())))
    hi_x = min(out_w - 1, int(np.floor(xs.max())))
    lo_y = max(0, int(np.ceil(ys.min())))
    hi_y = min(out_h - 1, int(np.floor(ys.max())))
    if lo_x > hi_x or lo_y > hi_y:
        return mask

    px, py = np.meshgrid(
        np.arange(lo_x, hi_x + 1, dtype=np.float64),
        np.arange(lo_y, hi_y + 1, dtype=np.float64),
    )
    inside = np.ones(px.shape, dtype=bool)
    for i in range(n):
        j = (i + 1) % n
        cross = (xs[j] - xs[i]) * (py - ys[i]) - (ys[j] - ys[i]) * (px - xs[i])
        inside &= sign * cross >= 0.0
    mask[lo_y : hi_y + 1, lo_x : hi_x + 1] = inside.astype(np.uint8)
    return mask


def ground_colors(gx, gy, texture, colors):
    """Color ground-plane points by the intersection texture.

    texture: (road_half_width, arm_length, lane_spacing, lane_half_width,
              dash_fraction); colors: (3, 3) rows road, background, line.
    Painted dashes run along each road's center line outside the core box.
    """
    gx = np.asarray(gx, dtype=np.float64)
    gy = np.asarray(gy, dtype=np.float64)
    road_hw, arm_len, spacing, lane_hw, duty = texture
    colors = np.asarray(colors, dtype=np.float64)

    ax = np.abs(gx)
    ay = np.abs(gy)
    on_x_road = (ay <= road_hw) & (ax <= arm_len)
    on_y_road = (ax <= road_hw) & (ay <= arm_len)
    core = (ax <= road_hw) & (ay <= road_hw)

    def dashed(coord):
        m = coord - spacing * np.floor(coord / spacing)
        return m < duty * spacing

    line = (on_x_road & ~core & (ay <= lane_hw) & dashed(gx)) | (
        on_y_road & ~core & (ax <= lane_hw) & dashed(gy)
    )

    out = np.broadcast_to(colors[1], gx.shape + (3,)).copy()
    out[on_x_road | on_y_road] = colors[0]
    out[line] = colors[2]
    return out


def render_ground_view(
    rotation, camera_center, fx, fy, cx, cy, out_h, out_w, texture, colors, sky
):
    """Render the ground plane by per-pixel ray casting.

    Rays through each pixel are intersected with z = 0; hits are textured
    via `ground_colors`, rays at or above the horizon get the sky color.
    """
    rotation = np.asarray(rotation, dtype=np.float64)
    center = np.asarray(camera_center, dtype=np.float64)
    u, v = np.meshgrid(
        np.arange(out_w, dtype=np.float64), np.arange(out_h, dtype=np.float64)
    )
    dir_cam = np.stack([(u - cx) / fx, (v - cy) / fy, np.ones_like(u)], axis=-1)
    dir_world = dir_cam @ rotation  # R^T applied to each direction
    dz = dir_world[..., 2]
    hits = dz < -DENOMINATOR_EPS
    s = np.where(hits, -center[2] / np.where(hits, dz, -1.0), 0.0)
    hits &= s > 0
    gx = center[0] + s * dir_world[..., 0]
    gy = center[1] + s * dir_world[..., 1]

    out = np.broadcast_to(np.asarray(sky, dtype=np.float64), (out_h, out_w, 3)).copy()
    ground = ground_colors(gx[hits], gy[hits], texture, colors)
    out[hits] = ground
    return out
