"""Pinhole camera model and the analytic ground-plane (z = 0) homography.

Coordinate frames:
    World:  right-handed, z up, ground plane at z = 0, units meters.
    Camera: right-handed, x right, y down, z forward (optical axis).
            world->camera: p_cam = R @ p_world + t.
    Image:  origin top-left, u right, v down, units pixels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import BehindCameraError, CameraInPlaneError
from .homography import Homography

MIN_DEPTH = 1e-6
MIN_CAMERA_HEIGHT = 1e-6
ORTHONORMALITY_TOL = 1e-9


@dataclass(frozen=True)
class CameraIntrinsics:
    fx: float
    fy: float
    cx: float
    cy: float
    width: int
    height: int

    def __post_init__(self):
        if self.fx <= 0 or self.fy <= 0:
            raise ValueError("focal lengths must be positive")
        if not (0 <= self.cx < self.width and 0 <= self.cy < self.height):
            raise ValueError("principal point must lie inside the image")

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.fx, 0.0, self.cx], [0.0, self.fy, self.cy], [0.0, 0.0, 1.0]]
        )


@dataclass(frozen=True)
class CameraExtrinsics:
    """World-to-camera rigid transform: p_cam = rotation @ p_world + translation."""

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=np.float64)
        t = np.asarray(self.translation, dtype=np.float64).reshape(3)
        if r.shape != (3, 3):
            raise ValueError("rotation must be 3x3")
        if np.max(np.abs(r.T @ r - np.eye(3))) >= ORTHONORMALITY_TOL:
            raise ValueError("rotation must be orthonormal")
        if np.linalg.det(r) <= 0:
            raise ValueError("rotation must be proper (det +1)")
        r.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)

    @property
    def camera_center(self) -> np.ndarray:
        """Camera position in world coordinates (-R^T t)."""
        return -self.rotation.T @ self.translation


def look_at_extrinsics(position, target) -> CameraExtrinsics:
    """Extrinsics for a camera at `position` whose optical axis points at
    `target`, with the image x axis horizontal. A camera looking straight
    up or down keeps world +x as image right."""
    position = np.asarray(position, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    forward = target - position
    norm = np.linalg.norm(forward)
    if norm == 0:
        raise ValueError("camera position and target coincide")
    forward = forward / norm
    up = np.array([0.0, 0.0, 1.0])
    right = np.cross(forward, up)
    right_norm = np.linalg.norm(right)
    if right_norm < 1e-12:
        right = np.array([1.0, 0.0, 0.0])
    else:
        right = right / right_norm
    down = np.cross(forward, right)
    rotation = np.stack([right, down, forward])
    # Re-orthonormalize to keep the constructor's 1e-9 tolerance honest.
    u, _, vt = np.linalg.svd(rotation)
    rotation = u @ vt
    translation = -rotation @ position
    return CameraExtrinsics(rotation, translation)


def project_points(
    intr: CameraIntrinsics, extr: CameraExtrinsics, points: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Project (N, 3) world points; returns ((N, 2) pixels, (N,) depths).

    No visibility check is applied; callers decide what to do with
    non-positive depths.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    cam = pts @ extr.rotation.T + extr.translation
    depths = cam[:, 2]
    with np.errstate(divide="ignore", invalid="ignore"):
        u = intr.cx + intr.fx * cam[:, 0] / depths
        v = intr.cy + intr.fy * cam[:, 1] / depths
    return np.stack([u, v], axis=1), depths


def project_ground_to_image(
    intr: CameraIntrinsics, extr: CameraExtrinsics, ground_point
) -> np.ndarray:
    """Pinhole projection of the ground-plane point (X, Y, 0) to pixels."""
    g = np.asarray(ground_point, dtype=np.float64).reshape(2)
    pixels, depths = project_points(intr, extr, np.array([[g[0], g[1], 0.0]]))
    if depths[0] <= MIN_DEPTH:
        raise BehindCameraError(f"ground point has camera depth {depths[0]:.3g}")
    return pixels[0]


def homography_from_camera(
    intr: CameraIntrinsics, extr: CameraExtrinsics
) -> Homography:
    """Ground-plane homography mapping world (X, Y) meters to pixels.

    For points on z = 0 the projection collapses to
    K @ [r1 r2 t] @ (X, Y, 1)^T, which is invertible exactly when the
    camera center is off the plane.
    """
    center = extr.camera_center
    if abs(center[2]) <= MIN_CAMERA_HEIGHT:
        raise CameraInPlaneError(
            f"camera center height {center[2]:.3g} m is inside the ground plane"
        )
    r = extr.rotation
    cols = np.column_stack([r[:, 0], r[:, 1], extr.translation])
    return Homography(intr.matrix @ cols)
