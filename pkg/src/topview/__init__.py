"""Perspective-camera to bird's-eye-view tooling for intersection monitoring.

Subpackages:
    geometry    exact projective geometry: homographies, pinhole cameras, warping
    kernels     raster inner loops (compiled extension with NumPy fallback)
    scenegen    procedural intersection scenes and dataset generation
    models      UNet variants with projective spatial-transformer skips
    training    reproducible training loop with early stopping
    evaluation  mask metrics, reports, and overlay rendering
"""

__version__ = "0.1.0"
