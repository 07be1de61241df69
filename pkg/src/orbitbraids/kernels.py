"""Hot word kernels, with backend selection at import time.

The compiled extension (Cython) is preferred when it imported cleanly;
otherwise the pure-Python twin is used.  ORBITBRAIDS_PURE=1 forces the
fallback.  use_backend() swaps implementations at run time, which the
benchmark and the backend-agreement tests rely on.
"""

from __future__ import annotations

import os

from . import _kernels_py

_BACKENDS = {"python": _kernels_py}

if os.environ.get("ORBITBRAIDS_PURE") != "1":
    try:
        from . import _kernels_cy

        _BACKENDS["compiled"] = _kernels_cy
    except ImportError:
        pass

_impl = _BACKENDS.get("compiled", _kernels_py)


def backend_name() -> str:
    """Name of the active backend: 'compiled' or 'python'."""
    for name, mod in _BACKENDS.items():
        if mod is _impl:
            return name
    raise RuntimeError("unknown kernel backend")


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use_backend(name: str) -> None:
    global _impl
    if name not in _BACKENDS:
        raise ValueError(f"no kernel backend {name!r}; have {available_backends()}")
    _impl = _BACKENDS[name]


def reduce_letters(codes):
    return _impl.reduce_letters(codes)


def substitute(codes, flat, offsets, size):
    return _impl.substitute(codes, flat, offsets, size)
