"""
Backend selection for the subspace-counting kernel.

The compiled extension ``_ckernel`` is used when it imports; otherwise, or
when ``SCHUBQUIV_PURE_PYTHON=1`` is set, the pure-Python twin takes over.
Both expose ``count_cells(candidates, contains, within, deadline=None)``.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

BACKENDS = {"python": _kernel_py.count_cells}
if _ckernel is not None:
    BACKENDS["cython"] = _ckernel.count_cells

if os.environ.get("SCHUBQUIV_PURE_PYTHON") == "1" or _ckernel is None:
    BACKEND = "python"
else:
    BACKEND = "cython"


def count_cells(candidates, contains, within, deadline=None, backend: str | None = None) -> int:
    return BACKENDS[backend or BACKEND](candidates, contains, within, deadline)
