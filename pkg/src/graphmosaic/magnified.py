"""Magnified state matrices of suitably connected ``(m, n)``-mosaics.

Rows are indexed by lt-states (left word followed by top word), columns by
rb-states, both under :func:`graphmosaic.mosaic.state_index`. Appending a
column multiplies by a block-diagonal ``I (x) K`` with ``K`` one of the four
state matrices; the Kronecker factor is never materialized.

Two storage backends:

``fixed128``
    ``uint64[d, d, 2]`` u128 storage driven by the selected kernel
    implementation. Overflow raises :class:`CountOverflowError`.
``bignum``
    object arrays of Python ints.

``auto`` runs ``fixed128`` and rebuilds with ``bignum`` if it overflows.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._pykernels import block_mul_ints
from .kernels import CountOverflowError
from .statematrix import ResourceLimitError, build_state_matrices

log = logging.getLogger(__name__)

BACKENDS = ("auto", "fixed128", "bignum")
MAX_MAGNIFIED_BITS = 14


@dataclass(frozen=True, eq=False)
class MagnifiedStateMatrix:
    m: int
    n: int
    data: np.ndarray
    backend: str  # storage actually used: "fixed128" or "bignum"
    impl: str | None = None  # kernel implementation for fixed128

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def to_ints(self) -> np.ndarray:
        """Entries as an object array of Python ints (copies; avoid for large dims)."""
        if self.backend == "bignum":
            return self.data.copy()
        return kernels.to_ints(self.data)

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise IndexError(f"entry ({i}, {j}) outside 1..{self.dim}")
        v = self.data[i - 1, j - 1]
        if self.backend == "bignum":
            return int(v)
        return int(v[1]) << 64 | int(v[0])

    def total(self) -> int:
        return int(self.to_ints().sum())

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.to_ints()]

    def __eq__(self, other):
        mine = self.to_ints()
        if isinstance(other, MagnifiedStateMatrix):
            other = other.to_ints()
        other = np.asarray(other, dtype=object)
        return other.shape == mine.shape and bool((mine == other).all())

    __hash__ = None


def _check_backend(backend: str) -> str:
    if backend not in BACKENDS:
        raise ValueError(f"backend must be one of {', '.join(BACKENDS)}, got {backend!r}")
    return backend


def block_diag_multiply(a, b, copies: int, backend: str = "auto", impl: str | None = None,
                        threads: int = 1) -> np.ndarray:
    """Return ``a @ kron(I_copies, b)`` as an object array of exact ints."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    s = b.shape[0]
    if a.ndim != 2 or b.ndim != 2 or b.shape != (s, s) or a.shape != (copies * s, copies * s):
        raise ValueError(f"dimension mismatch: a is {a.shape}, b is {b.shape}, copies = {copies}")
    if _check_backend(backend) != "bignum":
        try:
            if b.size and (b.min() < 0 or b.max() >> 64):
                raise CountOverflowError("block entries exceed 64 bits")
            out = kernels.u128_zeros(*a.shape)
            if kernels.get_impl(impl).bd_mul(kernels.to_u128(a), b.astype(np.uint64), out, 128, threads):
                raise CountOverflowError("block product exceeds 128 bits")
            return kernels.to_ints(out)
        except CountOverflowError:
            if backend == "fixed128":
                raise
    return block_mul_ints(a, b)


def _quadrant_blocks(m: int):
    sm = build_state_matrices(m)
    # (row quadrant = new t letter, column quadrant = new b letter)
    return (((0, 0), sm.x_plus), ((0, 1), sm.o_minus), ((1, 0), sm.x_minus), ((1, 1), sm.o_plus))


def _build_fixed(m, n, impl, threads, width):
    blocks = [(rc, np.ascontiguousarray(sm.entries)) for rc, sm in _quadrant_blocks(m)]
    kern = kernels.get_impl(impl)
    cur = kernels.u128_identity(1 << m)
    for k in range(n):
        d = cur.shape[0]
        nxt = kernels.u128_zeros(2 * d, 2 * d)
        for (r, c), block in blocks:
            if kern.bd_mul(cur, block, nxt[r * d:(r + 1) * d, c * d:(c + 1) * d], width, threads):
                raise CountOverflowError(f"magnified matrix ({m}, {k + 1}) exceeds {width}-bit counts")
        cur = nxt
    return cur


def _build_bignum(m, n):
    blocks = [(rc, sm.entries.astype(object)) for rc, sm in _quadrant_blocks(m)]
    cur = np.identity(1 << m, dtype=np.int64).astype(object)
    for _ in range(n):
        d = cur.shape[0]
        nxt = np.empty((2 * d, 2 * d), dtype=object)
        for (r, c), block in blocks:
            nxt[r * d:(r + 1) * d, c * d:(c + 1) * d] = block_mul_ints(cur, block)
        cur = nxt
    return cur


def build_magnified(m: int, n: int, backend: str = "auto", impl: str | None = None,
                    threads: int | None = None, width: int = 128,
                    limit: int = MAX_MAGNIFIED_BITS) -> MagnifiedStateMatrix:
    """Magnified state matrix of dimension ``2**(m + n)``, starting from the identity at ``n = 0``.

    ``width`` below 128 makes the fixed-width path treat anything wider as an
    overflow; used to exercise overflow detection.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m + n > limit:
        raise ResourceLimitError(f"magnified matrices limited to m + n <= {limit}, got {m + n}")
    _check_backend(backend)
    if threads is None:
        threads = kernels.default_threads()
    if backend != "bignum":
        impl = impl or kernels.DEFAULT_IMPLEMENTATION
        try:
            return MagnifiedStateMatrix(m, n, _build_fixed(m, n, impl, threads, width), "fixed128", impl)
        except CountOverflowError:
            if backend == "fixed128":
                raise
            log.info("fixed-width overflow at (%d, %d); promoting to bignum", m, n)
    return MagnifiedStateMatrix(m, n, _build_bignum(m, n), "bignum")
