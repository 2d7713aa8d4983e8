"""Kernel backend selection.

The compiled extension is preferred when importable; the numpy fallback is
always available. Set VOIDFINDER_KERNELS=python to force the fallback or
VOIDFINDER_KERNELS=native to require the extension.
"""

import os

from . import pyimpl

impl = pyimpl

_choice = os.environ.get("VOIDFINDER_KERNELS", "auto").strip().lower()
if _choice in ("auto", "", "native"):
    try:
        from . import _native

        impl = _native
    except ImportError:
        if _choice == "native":
            raise
elif _choice != "python":
    raise ValueError(
        f"VOIDFINDER_KERNELS must be 'auto', 'native' or 'python', got {_choice!r}"
    )


def backend_name() -> str:
    return impl.name
