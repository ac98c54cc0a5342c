"""Backend selection for the integer kernels.

The compiled module is used when it was built; otherwise the pure-Python
one.  Both return identical results on every input.
"""
from __future__ import annotations

from types import ModuleType

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

BACKEND = "cython" if _compiled is not None else "python"
_active = BACKENDS[BACKEND]


def use_backend(name: str) -> str:
    """Switch kernels globally; returns the previously active backend name."""
    global BACKEND, _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    old, BACKEND, _active = BACKEND, name, BACKENDS[name]
    return old


def rank_int(rows: list[list[int]]) -> int:
    return _active.rank_int(rows)


def matmul_int(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return _active.matmul_int(a, b)
