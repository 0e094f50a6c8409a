"""Exception taxonomy shared across the package.

Two base classes exist so the CLI can map failures onto exit codes:
``DataError`` (missing/corrupt inputs, exit 3) and ``NumericError``
(degenerate or diverging computations, exit 4).
"""


class DataError(Exception):
    """Input data is missing, malformed, or unusable."""


class NumericError(Exception):
    """A computation hit a degenerate or non-finite configuration."""


class DegenerateDenominatorError(NumericError):
    """Homogeneous division by a (near-)zero third component."""


class SingularHomographyError(NumericError):
    """3x3 matrix is not invertible enough to act as a homography."""


class InsufficientPointsError(NumericError):
    """Too few correspondences for estimation."""


class DegenerateConfigurationError(NumericError):
    """Correspondence layout admits no unique homography (collinear points)."""


class CameraInPlaneError(NumericError):
    """Camera center lies in the ground plane; no ground homography exists."""


class BehindCameraError(NumericError):
    """Point projects behind the camera."""


class DivergenceError(NumericError):
    """Training loss became non-finite."""


class EmptyGroundTruthError(NumericError):
    """Ground-truth mask has no foreground pixels."""


class EmptySplitError(DataError):
    """Requested dataset split contains no samples."""


class UnsatisfiableVisibilityError(DataError):
    """Pose rejection sampling failed to find a visible vehicle."""


class NearHorizonWarning(UserWarning):
    """Sampling grid denominator was clamped near the horizon."""
