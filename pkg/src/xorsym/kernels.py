"""Pick the compiled kernels when importable, else the numpy fallback.

Set ``XORSYM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _fallback

BACKEND = "python"
invariant_shifts = _fallback.invariant_shifts
shift_exists = _fallback.shift_exists

if os.environ.get("XORSYM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._kernels import invariant_shifts, shift_exists  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

__all__ = ["BACKEND", "invariant_shifts", "shift_exists"]
