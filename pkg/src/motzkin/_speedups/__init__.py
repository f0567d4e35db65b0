"""Kernel selection: compiled Cython loops when available, pure Python else.

The environment variable MOTZKIN_PURE=1 forces the pure fallback even when
the extension built.  ``forced_backend`` swaps the active backend inside a
``with`` block, which the benchmark and the equivalence tests use.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from fractions import Fraction

from . import _pure

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

_backend = _pure if (_kernels is None or os.environ.get("MOTZKIN_PURE") == "1") else _kernels


def backend_name() -> str:
    return "pure" if _backend is _pure else "compiled"


def available_backends() -> tuple[str, ...]:
    return ("pure", "compiled") if _kernels is not None else ("pure",)


def _module_for(name: str):
    if name == "pure":
        return _pure
    if name == "compiled":
        if _kernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _kernels
    raise ValueError(f"unknown backend {name!r}")


@contextmanager
def forced_backend(name: str):
    global _backend
    previous = _backend
    _backend = _module_for(name)
    try:
        yield
    finally:
        _backend = previous


def count_paths(n_max: int, skew: bool) -> dict:
    return _backend.count_paths(n_max, skew)


def poly_acc(out: dict, a: dict, b: dict, negate: bool = False) -> None:
    _backend.poly_acc(out, a, b, negate)


def poly_mul(a: dict, b: dict) -> dict:
    return _backend.poly_mul(a, b)


def clean_terms(d: dict) -> dict:
    """Drop zero coefficients and demote integral Fractions to int."""
    res = {}
    for key, val in d.items():
        if type(val) is Fraction:
            if val.denominator == 1:
                val = val.numerator
        if val != 0:
            res[key] = val
    return res
