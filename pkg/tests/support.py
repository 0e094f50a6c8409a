"""Shared helpers for the test suite."""

import numpy as np

from topview.geometry import Homography, PointCorrespondence

UNIT_SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def random_homography(rng, scale=0.3, cond_max=1e4):
    """A random non-singular homography near the identity with bounded
    condition number, safe to evaluate on the unit square."""
    while True:
        m = np.eye(3) + scale * rng.standard_normal((3, 3))
        if abs(m[2, 2]) < 0.5:
            continue
        m = m / m[2, 2]
        if abs(np.linalg.det(m)) < 1e-3 or np.linalg.cond(m) >= cond_max:
            continue
        w = m[2, 0] * UNIT_SQUARE[:, 0] + m[2, 1] * UNIT_SQUARE[:, 1] + m[2, 2]
        if np.min(np.abs(w)) < 0.2:
            continue
        return Homography(m)


def correspondences_through(h, source_points):
    from topview.geometry import apply_homography_many

    targets = apply_homography_many(h, source_points)
    return [PointCorrespondence(s, t) for s, t in zip(source_points, targets)]
