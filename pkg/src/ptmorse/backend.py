"""Pick the shooting kernel at import: compiled extension, else pure Python.

Set PTMORSE_BACKEND=python (or =compiled) to force a choice; forcing
`compiled` raises if the extension is not importable.
"""

import os

from . import _kernel_py

__all__ = ["kernel", "backend_name", "load_kernel", "available_backends"]

_FORCED = os.environ.get("PTMORSE_BACKEND", "").strip().lower()


def load_kernel(name: str):
    """Return the kernel module for 'compiled' or 'python'."""
    if name == "python":
        return _kernel_py
    if name == "compiled":
        from . import _kernel

        return _kernel
    raise ValueError("unknown backend %r (expected 'compiled' or 'python')" % name)


def available_backends() -> list[str]:
    names = []
    try:
        load_kernel("compiled")
        names.append("compiled")
    except ImportError:
        pass
    names.append("python")
    return names


if _FORCED:
    kernel = load_kernel(_FORCED)
else:
    try:
        kernel = load_kernel("compiled")
    except ImportError:
        kernel = _kernel_py

backend_name = kernel.BACKEND_NAME
