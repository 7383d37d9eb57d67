"""Sampling-kernel selection: compiled core with a pure-NumPy fallback.

The compiled extension ``erunion._unionsampler`` is picked when importable;
otherwise the NumPy kernel is used. Both produce bit-identical masks. Set
``ERUNION_BACKEND`` to ``cython`` or ``numpy`` to force a lane (``auto`` is
the default).
"""
from __future__ import annotations

import os

from . import _kernels_np

try:
    from . import _unionsampler as _compiled
except ImportError:  # extension not built; NumPy lane only
    _compiled = None

_choice = os.environ.get("ERUNION_BACKEND", "auto").strip().lower()
if _choice in ("", "auto"):
    _impl = _compiled if _compiled is not None else _kernels_np
elif _choice in ("cython", "compiled", "c"):
    if _compiled is None:
        raise ImportError(
            "ERUNION_BACKEND=cython requested but erunion._unionsampler is not built"
        )
    _impl = _compiled
elif _choice in ("numpy", "pure", "python"):
    _impl = _kernels_np
else:
    raise ValueError(f"unrecognised ERUNION_BACKEND value: {_choice!r}")


def active_backend() -> str:
    """Name of the kernel lane selected at import: 'cython' or 'numpy'."""
    return "cython" if (_compiled is not None and _impl is _compiled) else "numpy"


def union_mask_block(seeds, num_pairs, rounds, threshold):
    """Dispatch to the selected kernel (see the kernel modules for the contract)."""
    return _impl.union_mask_block(seeds, num_pairs, rounds, threshold)
