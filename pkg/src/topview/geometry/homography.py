"""Planar projective transforms: application, composition, DLT estimation.

Conventions:
    - Points are (x, y) pixel coordinates; pixel (m, n) sits exactly at
      continuous coordinates (m, n).
    - A homography maps source points to target points via homogeneous
      multiplication followed by division by the third component.
    - Matrices are stored normalized so that h[2, 2] == 1 whenever that
      entry is usably far from zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..errors import (
    DegenerateConfigurationError,
    DegenerateDenominatorError,
    InsufficientPointsError,
    SingularHomographyError,
)

DENOMINATOR_EPS = 1e-12
DET_EPS = 1e-12
COLLINEARITY_AREA_EPS = 1e-9


@dataclass(frozen=True)
class Homography:
    """Invertible 3x3 projective map between image planes."""

    h: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.h, dtype=np.float64)
        if h.shape != (3, 3):
            raise ValueError(f"homography must be 3x3, got {h.shape}")
        if not np.all(np.isfinite(h)):
            raise ValueError("homography entries must be finite")
        if abs(np.linalg.det(h)) <= DET_EPS:
            raise SingularHomographyError("matrix is singular within 1e-12")
        if abs(h[2, 2]) > DENOMINATOR_EPS:
            h = h / h[2, 2]
        h.flags.writeable = False
        object.__setattr__(self, "h", h)

    @classmethod
    def identity(cls) -> "Homography":
        return cls(np.eye(3))

    def inverse(self) -> "Homography":
        return Homography(np.linalg.inv(self.h))

    def __matmul__(self, other: "Homography") -> "Homography":
        """Composition: (self @ other) applies `other` first."""
        return Homography(self.h @ other.h)

    def to_text(self) -> str:
        """Nine row-major decimal numbers, one matrix row per line."""
        return "\n".join(" ".join(repr(v) for v in row) for row in self.h) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Homography":
        values = [float(tok) for tok in text.split()]
        if len(values) != 9:
            raise ValueError(f"expected 9 numbers, got {len(values)}")
        return cls(np.array(values, dtype=np.float64).reshape(3, 3))


@dataclass(frozen=True)
class PointCorrespondence:
    """A matched pixel pair between a source and a target image."""

    source: np.ndarray
    target: np.ndarray

    def __post_init__(self):
        for name in ("source", "target"):
            p = np.asarray(getattr(self, name), dtype=np.float64).reshape(2)
            if not np.all(np.isfinite(p)):
                raise ValueError(f"{name} point must be finite")
            object.__setattr__(self, name, p)


def apply_homography_many(h: Homography, points: np.ndarray) -> np.ndarray:
    """Map an (N, 2) array of points through `h` with perspective division.

    Raises DegenerateDenominatorError if any point maps to infinity
    (|third homogeneous component| <= 1e-12).
    """
    pts = np.asarray(points, dtype=np.float64)
    squeeze = pts.ndim == 1
    pts = np.atleast_2d(pts)
    m = h.h
    w = m[2, 0] * pts[:, 0] + m[2, 1] * pts[:, 1] + m[2, 2]
    if np.any(np.abs(w) <= DENOMINATOR_EPS):
        raise DegenerateDenominatorError("point maps to infinity (|w| <= 1e-12)")
    x = (m[0, 0] * pts[:, 0] + m[0, 1] * pts[:, 1] + m[0, 2]) / w
    y = (m[1, 0] * pts[:, 0] + m[1, 1] * pts[:, 1] + m[1, 2]) / w
    out = np.stack([x, y], axis=1)
    return out[0] if squeeze else out


def apply_homography(h: Homography, point) -> np.ndarray:
    """Map a single (x, y) point through `h`."""
    return apply_homography_many(h, np.asarray(point, dtype=np.float64).reshape(2))


def _normalization_transform(points: np.ndarray) -> np.ndarray:
    """Similarity transform translating the centroid to the origin and
    scaling the mean distance from it to sqrt(2)."""
    centroid = points.mean(axis=0)
    dists = np.linalg.norm(points - centroid, axis=1)
    mean_dist = dists.mean()
    scale = np.sqrt(2.0) / mean_dist if mean_dist > 0 else 1.0
    return np.array(
        [
            [scale, 0.0, -scale * centroid[0]],
            [0.0, scale, -scale * centroid[1]],
            [0.0, 0.0, 1.0],
        ]
    )


def _apply_transform(t: np.ndarray, points: np.ndarray) -> np.ndarray:
    homogeneous = np.column_stack([points, np.ones(len(points))])
    mapped = homogeneous @ t.T
    return mapped[:, :2] / mapped[:, 2:3]


def _check_collinearity(points: np.ndarray):
    # Triangle-area test on normalized coordinates; any flat triple is fatal.
    for i, j, k in itertools.combinations(range(len(points)), 3):
        a, b, c = points[i], points[j], points[k]
        area = 0.5 * abs(
            (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])
        )
        if area <= COLLINEARITY_AREA_EPS:
            raise DegenerateConfigurationError(
                f"points {i}, {j}, {k} are collinear (area {area:.2e})"
            )


def estimate_homography_dlt(correspondences) -> Homography:
    """Estimate the homography mapping source to target points.

    Standard direct linear transform with Hartley normalization; the
    homogeneous system is solved by the right singular vector of the
    2n x 9 design matrix belonging to its smallest singular value.
    Exact, non-degenerate inputs of four correspondences are recovered
    with algebraic residual below 1e-8.
    """
    correspondences = list(correspondences)
    if len(correspondences) < 4:
        raise InsufficientPointsError(
            f"need at least 4 correspondences, got {len(correspondences)}"
        )
    src = np.array([c.source for c in correspondences], dtype=np.float64)
    dst = np.array([c.target for c in correspondences], dtype=np.float64)

    t_src = _normalization_transform(src)
    t_dst = _normalization_transform(dst)
    src_n = _apply_transform(t_src, src)
    dst_n = _apply_transform(t_dst, dst)

    _check_collinearity(src_n)

    n = len(src_n)
    a = np.zeros((2 * n, 9))
    for i in range(n):
        x, y = src_n[i]
        u, v = dst_n[i]
        a[2 * i] = [x, y, 1.0, 0.0, 0.0, 0.0, -u * x, -u * y, -u]
        a[2 * i + 1] = [0.0, 0.0, 0.0, x, y, 1.0, -v * x, -v * y, -v]

    _, _, vt = np.linalg.svd(a)
    h_n = vt[-1].reshape(3, 3)
    h = np.linalg.inv(t_dst) @ h_n @ t_src
    try:
        return Homography(h)
    except SingularHomographyError as exc:
        raise DegenerateConfigurationError(
            "correspondences produced a singular homography"
        ) from exc
