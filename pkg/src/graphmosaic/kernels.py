"""Kernel selection and u128 storage helpers.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python twin takes over. Both expose ``bd_mul`` and ``weighted_sum`` with
identical semantics, so callers never branch on the implementation.
"""
from __future__ import annotations

import os
from types import ModuleType

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

IMPLEMENTATIONS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    IMPLEMENTATIONS["compiled"] = _ckernels

DEFAULT_IMPLEMENTATION = "compiled" if _ckernels is not None else "python"

_MASK64 = (1 << 64) - 1


class CountOverflowError(OverflowError):
    """A fixed-width count would have exceeded its width."""


def get_impl(name: str | None = None) -> ModuleType:
    name = name or DEFAULT_IMPLEMENTATION
    try:
        return IMPLEMENTATIONS[name]
    except KeyError:
        raise ValueError(f"kernel implementation {name!r} unavailable; have {sorted(IMPLEMENTATIONS)}") from None


def default_threads() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:  # not on Linux
        return os.cpu_count() or 1


def u128_zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols, 2), dtype=np.uint64)


def u128_identity(dim: int) -> np.ndarray:
    out = u128_zeros(dim, dim)
    out[np.arange(dim), np.arange(dim), 0] = 1
    return out


def to_u128(values) -> np.ndarray:
    """Object/int array -> u128 storage; CountOverflowError if any value needs more than 128 bits."""
    values = np.asarray(values, dtype=object)
    if values.size and (values.min() < 0 or values.max() >> 128):
        raise CountOverflowError("value outside the unsigned 128-bit range")
    out = np.empty(values.shape + (2,), dtype=np.uint64)
    out[..., 0] = (values & _MASK64).astype(np.uint64)
    out[..., 1] = (values >> 64).astype(np.uint64)
    return out


to_ints = _pykernels.to_ints
