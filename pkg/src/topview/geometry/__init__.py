from .homography import (
    Homography,
    PointCorrespondence,
    apply_homography,
    apply_homography_many,
    estimate_homography_dlt,
)
from .camera import (
    CameraIntrinsics,
    CameraExtrinsics,
    look_at_extrinsics,
    project_points,
    project_ground_to_image,
    homography_from_camera,
)
from .raster import RasterImage, bilinear_sample, warp_image, load_png, save_png

__all__ = [
    "Homography",
    "PointCorrespondence",
    "apply_homography",
    "apply_homography_many",
    "estimate_homography_dlt",
    "CameraIntrinsics",
    "CameraExtrinsics",
    "look_at_extrinsics",
    "project_points",
    "project_ground_to_image",
    "homography_from_camera",
    "RasterImage",
    "bilinear_sample",
    "warp_image",
    "load_png",
    "save_png",
]
