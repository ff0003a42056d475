"""Kernel backend selection at import time.

The compiled extension is preferred; the pure NumPy module is a drop-in
replacement when the extension was not built. Everything downstream calls
through this module, which keeps the two interchangeable. The benchmark
under benchmarks/ imports both directly to compare them.
"""

from __future__ import annotations

try:
    from . import _kernels as kernels  # type: ignore[attr-defined]
except ImportError:  # extension not built on this installation
    from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND: str = kernels.NAME
