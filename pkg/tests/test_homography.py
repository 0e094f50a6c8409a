import numpy as np
import pytest

from topview.errors import (
    DegenerateConfigurationError,
    DegenerateDenominatorError,
    InsufficientPointsError,
    SingularHomographyError,
)
from topview.geometry import (
    Homography,
    PointCorrespondence,
    apply_homography,
    apply_homography_many,
    estimate_homography_dlt,
)

from support import UNIT_SQUARE, correspondences_through, random_homography


class TestApply:
    def test_identity_is_noop(self):
        p = apply_homography(Homography.identity(), (3.5, 7.0))
        assert np.array_equal(p, [3.5, 7.0])

    def test_pure_translation(self):
        h = Homography([[1, 0, 2], [0, 1, -1], [0, 0, 1]])
        assert np.array_equal(apply_homography(h, (0.0, 0.0)), [2.0, -1.0])

    def test_homogeneous_division(self):
        # Third row (0, 0, 2) halves both output coordinates.
        h = Homography([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
        assert np.allclose(apply_homography(h, (1.0, 1.0)), [0.5, 0.5])

    def test_point_at_infinity_raises(self):
        h = Homography([[1, 0, 0], [0, 1, 0], [1, 0, -1]])
        with pytest.raises(DegenerateDenominatorError):
            apply_homography(h, (1.0, 5.0))

    def test_scale_invariance(self):
        rng = np.random.default_rng(7)
        m = np.eye(3) + 0.2 * rng.standard_normal((3, 3))
        pts = rng.random((50, 2)) * 4
        a = apply_homography_many(Homography(m), pts)
        b = apply_homography_many(Homography(2.0 * m), pts)
        assert np.max(np.abs(a - b)) < 1e-12

    def test_composition(self):
        rng = np.random.default_rng(11)
        h1 = random_homography(rng)
        h2 = random_homography(rng)
        pts = rng.random((20, 2))
        nested = apply_homography_many(h2, apply_homography_many(h1, pts))
        composed = apply_homography_many(h2 @ h1, pts)
        assert np.max(np.abs(nested - composed)) < 1e-9


class TestValidation:
    def test_singular_matrix_rejected(self):
        with pytest.raises(SingularHomographyError):
            Homography(np.ones((3, 3)))

    def test_normalized_storage(self):
        h = Homography([[2, 0, 0], [0, 2, 0], [0, 0, 2]])
        assert h.h[2, 2] == 1.0

    def test_text_round_trip(self):
        rng = np.random.default_rng(3)
        h = random_homography(rng)
        again = Homography.from_text(h.to_text())
        assert np.array_equal(h.h, again.h)


class TestDlt:
    def test_identity_from_unit_square(self):
        corr = [PointCorrespondence(p, p) for p in UNIT_SQUARE]
        h = estimate_homography_dlt(corr)
        assert np.max(np.abs(h.h - np.eye(3))) < 1e-8

    def test_recovers_random_homography(self):
        rng = np.random.default_rng(42)
        for _ in range(20):
            h = random_homography(rng)
            est = estimate_homography_dlt(correspondences_through(h, UNIT_SQUARE))
            assert np.max(np.abs(est.h - h.h)) < 1e-6

    def test_recovered_map_agrees_pointwise(self):
        rng = np.random.default_rng(5)
        h = random_homography(rng)
        est = estimate_homography_dlt(correspondences_through(h, UNIT_SQUARE))
        pts = rng.random((50, 2))
        assert np.max(
            np.abs(apply_homography_many(h, pts) - apply_homography_many(est, pts))
        ) < 1e-6

    def test_collinear_sources_rejected(self):
        pts = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [0.0, 1.0]])
        corr = [PointCorrespondence(p, p + 1.0) for p in pts]
        with pytest.raises(DegenerateConfigurationError):
            estimate_homography_dlt(corr)

    def test_too_few_points_rejected(self):
        corr = [PointCorrespondence(p, p) for p in UNIT_SQUARE[:3]]
        with pytest.raises(InsufficientPointsError):
            estimate_homography_dlt(corr)

    def test_algebraic_residual_small(self):
        rng = np.random.default_rng(9)
        h = random_homography(rng)
        corr = correspondences_through(h, UNIT_SQUARE)
        est = estimate_homography_dlt(corr)
        src = np.array([c.source for c in corr])
        predicted = apply_homography_many(est, src)
        targets = np.array([c.target for c in corr])
        assert np.max(np.abs(predicted - targets)) < 1e-8
