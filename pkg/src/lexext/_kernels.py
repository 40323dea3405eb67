"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set LEXEXT_BACKEND=python or LEXEXT_BACKEND=cython to pin the choice at
import time (the default, auto, prefers the extension).  The compiled
path handles orders up to 62; larger graphs are routed to the pure
implementation call by call.
"""

from __future__ import annotations

import os

from . import _core_py

_COMPILED_MAX_N = 62

_requested = os.environ.get("LEXEXT_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "cython", "python"):
    raise ImportError(f"LEXEXT_BACKEND must be auto, cython, or python, got {_requested!r}")

_compiled = None
if _requested in ("auto", "cython"):
    try:
        from . import _core_cy as _compiled  # type: ignore[no-redef]
    except ImportError:
        if _requested == "cython":
            raise
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def profile_counts(adj, n: int) -> list[int]:
    if _compiled is not None and n <= _COMPILED_MAX_N:
        return _compiled.profile_counts(adj, n)
    return _core_py.profile_counts(adj, n)


def max_independent_size(adj, n: int) -> int:
    if _compiled is not None and n <= _COMPILED_MAX_N:
        return _compiled.max_independent_size(adj, n)
    return _core_py.max_independent_size(adj, n)


def scan_graph_range(n: int, m: int, first_combo, steps: int):
    if _compiled is not None and n <= _COMPILED_MAX_N:
        return _compiled.scan_graph_range(n, m, first_combo, steps)
    return _core_py.scan_graph_range(n, m, first_combo, steps)
