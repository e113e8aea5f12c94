"""Kernel backend selection.

Prefers the compiled extension, falling back to the pure-Python kernel.
Set ``IMBESSEL_BACKEND=python`` (or ``compiled``) to force a choice;
forcing ``compiled`` raises if the extension is not built.
"""

import os

from .errors import DomainError

_requested = os.environ.get("IMBESSEL_BACKEND", "auto").lower()

if _requested not in ("auto", "python", "compiled"):
    raise DomainError(
        f"IMBESSEL_BACKEND must be auto, python or compiled, got {_requested!r}"
    )

if _requested == "python":
    from ._kernel_py import series_sums

    BACKEND = "python"
else:
    try:
        from ._kernel import series_sums  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from ._kernel_py import series_sums  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["series_sums", "BACKEND"]
