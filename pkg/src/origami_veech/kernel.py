"""Kernel backend selection.

Imports the compiled Cython kernels when available, the pure-Python twins
otherwise.  Set ``ORIGAMI_VEECH_PURE=1`` to force the fallback (used by the
benchmark and the parity tests).
"""

import os
from array import array

if os.environ.get("ORIGAMI_VEECH_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

compose = _impl.compose
invert = _impl.invert


def backend():
    """Name of the active kernel backend: 'cython' or 'python'."""
    return "cython" if _impl.__name__.endswith("_cy") else "python"


def identity(n):
    """Identity permutation as a kernel buffer."""
    return array("i", range(n))


def is_identity(p):
    return all(p[i] == i for i in range(len(p)))
