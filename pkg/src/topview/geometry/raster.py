"""In-memory raster images, bilinear sampling, and homography warping."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image

from .. import kernels
from .homography import Homography


@dataclass(frozen=True)
class RasterImage:
    """Row-major float image with values in [0, 1], 1 or 3 channels."""

    pixels: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.pixels, dtype=np.float64)
        if p.ndim == 2:
            p = p[..., None]
        if p.ndim != 3 or p.shape[2] not in (1, 3):
            raise ValueError(f"expected (H, W, 1|3) pixels, got shape {p.shape}")
        if not np.all(np.isfinite(p)) or p.min() < 0.0 or p.max() > 1.0:
            raise ValueError("pixel values must be finite and within [0, 1]")
        p.flags.writeable = False
        object.__setattr__(self, "pixels", p)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def channels(self) -> int:
        return self.pixels.shape[2]


def bilinear_sample(image: RasterImage, xs: float, ys: float) -> np.ndarray:
    """Bilinearly interpolate one continuous location; (C,) per-channel values.

    Coordinates outside [0, W-1] x [0, H-1] contribute zero.
    """
    if not (np.isfinite(xs) and np.isfinite(ys)):
        raise ValueError("sample coordinates must be finite")
    return kernels.bilinear_sample_many(
        image.pixels, np.array([xs]), np.array([ys])
    )[0]


def warp_image(
    image: RasterImage, h: Homography, out_width: int, out_height: int
) -> RasterImage:
    """Inverse-mapping warp: each output pixel samples the input at h(x, y).

    `h` therefore maps output pixel coordinates to input pixel coordinates;
    pass the inverse of a source->target homography to render the target view.
    """
    warped = kernels.warp_perspective(image.pixels, h.h, out_height, out_width)
    return RasterImage(np.clip(warped, 0.0, 1.0))


def load_png(path) -> RasterImage:
    """Load an 8-bit grayscale or RGB PNG; byte v maps to v / 255."""
    with Image.open(path) as img:
        if img.mode not in ("L", "RGB"):
            img = img.convert("RGB" if img.mode in ("RGBA", "P") else "L")
        data = np.asarray(img, dtype=np.float64) / 255.0
    return RasterImage(data)


def save_png(image: RasterImage, path) -> None:
    """Save as 8-bit PNG; value r maps to round(r * 255) clamped to [0, 255]."""
    data = np.clip(np.rint(image.pixels * 255.0), 0, 255).astype(np.uint8)
    if data.shape[2] == 1:
        pil = Image.fromarray(data[:, :, 0], mode="L")
    else:
        pil = Image.fromarray(data, mode="RGB")
    path = Path(path)
    pil.save(path, format="PNG")
