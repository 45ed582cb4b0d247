"""Kernel selection: prefer the compiled extension, fall back to pure Python.

Set MATDECIDE_KERNEL=pure (or =compiled) to force a backend; forcing compiled
raises if the extension is not built.
"""

from __future__ import annotations

import os

from matdecide import _kernel_py

_forced = os.environ.get("MATDECIDE_KERNEL", "").strip().lower()

if _forced == "pure":
    _impl = _kernel_py
    BACKEND = "pure"
else:
    try:
        from matdecide import _ck as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise ImportError(
                "MATDECIDE_KERNEL=compiled but matdecide._ck is not built; "
                "reinstall with Cython and a C compiler available"
            ) from None
        _impl = _kernel_py
        BACKEND = "pure"

reduce_letters = _impl.reduce_letters
concat_reduce_letters = _impl.concat_reduce_letters
dyck_closure = _impl.dyck_closure
dyck_nonempty = _impl.dyck_nonempty


def kernel_backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return BACKEND
