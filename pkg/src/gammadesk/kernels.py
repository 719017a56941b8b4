"""Backend selection for the permutation kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module. Setting ``GAMMADESK_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("GAMMADESK_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

stat_scan = _impl.stat_scan
contains = _impl.contains
occurs_at_end = _impl.occurs_at_end
avoiders = _impl.avoiders

DES_MASK, DES, MAJ, DD, DD0, DDINF, DESP, DDP = range(8)


def available_backends() -> dict:
    """Map backend name to module for every backend that imports."""
    found = {"python": _kernels_py}
    try:
        from . import _ckernels  # type: ignore[attr-defined]

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
