"""Kernel backend selection: compiled extension if present, NumPy otherwise."""

try:
    from . import _kernels as kernels
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernels_py as kernels

BACKEND = kernels.BACKEND_NAME
