"""Backend selection for the hot loops.

The compiled extension is preferred; ``HAMNODAL_PURE=1`` forces the
pure-Python implementation.
"""
import os

from . import _fallback

if os.environ.get("HAMNODAL_PURE", "") not in ("", "0"):
    _impl = _fallback
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _fallback

BACKEND = "compiled" if _impl is not _fallback else "python"

laplacian = _impl.laplacian
label_components = _impl.label_components
sign_component_counts = _impl.sign_component_counts

__all__ = ["BACKEND", "laplacian", "label_components", "sign_component_counts"]
