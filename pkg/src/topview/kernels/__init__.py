"""Raster inner loops with two interchangeable backends.

The compiled Cython extension (`topview.kernels._native`) is preferred;
the vectorized NumPy module (`topview.kernels.reference`) is the always-
available fallback and the semantic ground truth. Both expose the same
four functions and must agree to float64 round-off.

Set TOPVIEW_NO_EXT=1 to force the NumPy backend.
"""

import os

from . import reference

if os.environ.get("TOPVIEW_NO_EXT"):
    _impl = reference
else:
    try:
        from . import _native as _impl
    except ImportError:
        _impl = reference

bilinear_sample_many = _impl.bilinear_sample_many
warp_perspective = _impl.warp_perspective
fill_convex_polygon = _impl.fill_convex_polygon
ground_colors = _impl.ground_colors
render_ground_view = _impl.render_ground_view


def backend_name() -> str:
    return "native" if _impl is not reference else "reference"


__all__ = [
    "bilinear_sample_many",
    "warp_perspective",
    "fill_convex_polygon",
    "ground_colors",
    "render_ground_view",
    "backend_name",
    "reference",
]
