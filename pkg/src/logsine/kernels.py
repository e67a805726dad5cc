"""Backend selection for the series kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``LOGSINE_PURE_PYTHON`` is set to a non-empty value
other than ``0``, the pure-Python twin is used.
"""

from __future__ import annotations

import os

from . import _kernels_py

_force_python = os.environ.get("LOGSINE_PURE_PYTHON", "") not in ("", "0")

if _force_python:
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"
    else:
        BACKEND = "compiled"

li_series = _impl.li_series
harmonic_sq_series = _impl.harmonic_sq_series

__all__ = ["BACKEND", "li_series", "harmonic_sq_series"]
