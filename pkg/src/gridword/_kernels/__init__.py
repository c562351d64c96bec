"""Kernel backend selection.

The Cython extension is preferred when built; the numpy fallback implements
identical contracts.  Set GRIDWORD_KERNELS=python to force the fallback or
GRIDWORD_KERNELS=compiled to require the extension.
"""

from __future__ import annotations

import os

from . import fallback

NEG = fallback.NEG
DOM_INF = fallback.DOM_INF

_choice = os.environ.get("GRIDWORD_KERNELS", "auto").strip().lower()

backend_name = "python"
_impl = fallback

if _choice not in ("python", "fallback"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        backend_name = "compiled"
    except ImportError:
        if _choice in ("compiled", "c"):
            raise
        _impl = fallback

oracle_row_step = _impl.oracle_row_step
dom_backward_row = _impl.dom_backward_row


def available_backends() -> dict[str, object]:
    """Importable kernel modules by name (for tests and benchmarks)."""
    out: dict[str, object] = {"python": fallback}
    try:
        from . import _speedups

        out["compiled"] = _speedups
    except ImportError:
        pass
    return out
