"""Kernel backend selection.

The compiled Cython kernels are preferred; the pure-numpy fallback is used
when the extension is unavailable. Set ``DEMOSHOCK_KERNELS=python`` or
``DEMOSHOCK_KERNELS=cython`` to force a backend (forcing ``cython`` raises if
the extension was not built). Both backends are bit-for-bit equivalent.
"""

import os

_forced = os.environ.get("DEMOSHOCK_KERNELS")

if _forced == "python":
    from . import _pykernels as _impl

    BACKEND = "python"
elif _forced == "cython":
    from . import _cykernels as _impl  # type: ignore[no-redef]

    BACKEND = "cython"
elif _forced is None:
    try:
        from . import _cykernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"
else:
    raise ImportError(f"DEMOSHOCK_KERNELS must be 'python' or 'cython', got {_forced!r}")

group_sums = _impl.group_sums
demean = _impl.demean

__all__ = ["BACKEND", "group_sums", "demean"]
