"""Kernel selection: compiled extension when available, else pure Python.

Set ``SUPERBER_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by tests that compare the two implementations).
"""

import os

if os.environ.get("SUPERBER_PURE_PYTHON"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
koszul_sign = _impl.koszul_sign
mul_terms = _impl.mul_terms
add_terms = _impl.add_terms
