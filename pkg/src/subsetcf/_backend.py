"""Kernel backend selection.

The compiled extension is preferred when importable; set SUBSETCF_PURE=1
to force the pure-Python fallback (used by the backend-equivalence tests
and the benchmark).
"""

import os

if os.environ.get("SUBSETCF_PURE"):
    from . import _pykernels as kernels

    COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        from . import _pykernels as kernels

        COMPILED = False


def backend_name() -> str:
    return "compiled" if COMPILED else "pure"
