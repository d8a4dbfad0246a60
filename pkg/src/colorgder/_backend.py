"""Select the elimination kernel at import time.

The compiled ``_kernel`` extension is used when it was built; otherwise the
pure-Python ``_kernel_py`` fallback.  Setting ``COLORGDER_PURE=1`` forces the
fallback.
"""
from __future__ import annotations

import os

from . import _kernel_py

BACKEND = "python"
rref_int = _kernel_py.rref_int
rref_mod = _kernel_py.rref_mod

if os.environ.get("COLORGDER_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernel  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        BACKEND = "compiled"
        rref_int = _kernel.rref_int
        rref_mod = _kernel.rref_mod
