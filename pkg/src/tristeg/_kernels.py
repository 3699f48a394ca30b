"""Kernel backend selection.

The compiled ``_core`` extension is used when it imports; otherwise the
pure-Python module is used. Set ``TRISTEG_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os

from tristeg import _purepy

if os.environ.get("TRISTEG_PURE_PYTHON", "") not in ("", "0"):
    _impl = _purepy
    BACKEND = "python"
else:
    try:
        from tristeg import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _purepy
        BACKEND = "python"

splitmix_keystream = _impl.splitmix_keystream
splitmix_lsbs = _impl.splitmix_lsbs
apply_tables = _impl.apply_tables
unpack_bits = _impl.unpack_bits
pack_bits = _impl.pack_bits
lsb_scatter = _impl.lsb_scatter
lsb_gather = _impl.lsb_gather

__all__ = [
    "BACKEND",
    "splitmix_keystream",
    "splitmix_lsbs",
    "apply_tables",
    "unpack_bits",
    "pack_bits",
    "lsb_scatter",
    "lsb_gather",
]
