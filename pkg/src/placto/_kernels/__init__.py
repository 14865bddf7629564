"""Kernel backend selection: compiled extension when built, pure Python otherwise.

Set PLACTO_KERNEL=pure (or =cython) to force a backend; forcing cython raises
if the extension is missing.
"""

import os

_forced = os.environ.get("PLACTO_KERNEL", "")
if _forced not in ("", "pure", "cython"):
    raise RuntimeError(f"PLACTO_KERNEL must be 'pure' or 'cython', got {_forced!r}")

if _forced == "pure":
    from . import pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _forced == "cython":
            raise
        from . import pure as _impl

backend_name = _impl.backend_name
RuleTable = _impl.RuleTable
neighbors = _impl.neighbors
closure = _impl.closure
is_equivalent = _impl.is_equivalent
canonical = _impl.canonical
