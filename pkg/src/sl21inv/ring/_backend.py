"""Kernel selection.

The compiled kernel is used when it was built; otherwise the pure-Python
kernel.  ``SL21INV_KERNEL=python`` forces the fallback, ``compiled`` makes a
missing extension an import error.
"""

import os

from sl21inv.ring import _pykernel

try:
    from sl21inv.ring import _ckernel
except ImportError:  # extension not built
    _ckernel = None

AVAILABLE = {"python": _pykernel}
if _ckernel is not None:
    AVAILABLE["compiled"] = _ckernel


def _initial():
    choice = os.environ.get("SL21INV_KERNEL", "auto").strip().lower()
    if choice == "auto":
        return _ckernel or _pykernel
    if choice not in AVAILABLE:
        raise ImportError(f"SL21INV_KERNEL={choice!r} is not available "
                          f"(have {sorted(AVAILABLE)})")
    return AVAILABLE[choice]


kernel = _initial()


def use_kernel(name):
    """Switch the active kernel; returns the previous kernel's name."""
    global kernel
    if name not in AVAILABLE:
        raise ValueError(f"kernel {name!r} not available (have {sorted(AVAILABLE)})")
    previous = kernel.NAME
    kernel = AVAILABLE[name]
    return previous


def active():
    return kernel.NAME
