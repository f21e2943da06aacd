"""Counting graph mosaics.

A suitably connected ``(m, n)``-mosaic with ``k`` boundary connection points
extends to exactly ``L_k`` graph ``(m + 2, n + 2)``-mosaics, ``L_k`` the Lucas
numbers. Summing Lucas-weighted entries of the magnified state matrix
therefore counts all graph mosaics of the larger size.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .kernels import CountOverflowError
from .magnified import MAX_MAGNIFIED_BITS, MagnifiedStateMatrix, build_magnified
from .statematrix import ResourceLimitError


def lucas(k: int) -> int:
    """Lucas number by integer recursion: 2, 1, 3, 4, 7, 11, ..."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def lucas_table(max_k: int) -> list[int]:
    table = [2, 1]
    while len(table) <= max_k:
        table.append(table[-1] + table[-2])
    return table[:max_k + 1]


def hamming_pair(i: int, j: int) -> int:
    """Boundary connection points of the mosaic with lt-state ``i`` and rb-state ``j``."""
    if i < 1 or j < 1:
        raise ValueError("state indices are 1-based")
    return (i - 1).bit_count() + (j - 1).bit_count()


def theorem_sum(mat: MagnifiedStateMatrix, impl: str | None = None, width: int = 128) -> int:
    """Sum of ``lucas(hamming_pair(i, j)) * entry(i, j)`` over all entries."""
    weights = lucas_table(2 * (mat.m + mat.n))
    if mat.backend == "fixed128":
        kern = kernels.get_impl(impl or mat.impl)
        value, overflowed = kern.weighted_sum(mat.data, np.array(weights, dtype=np.uint64), width)
        if not overflowed:
            return value
        if width < 128:
            raise CountOverflowError(f"weighted sum exceeds {width}-bit counts")
        data = kernels.to_ints(mat.data)
    else:
        data = mat.data
    pops = np.array([bin(i).count("1") for i in range(mat.dim)])
    w = np.array(weights, dtype=object)[pops[:, None] + pops[None, :]]
    return int((w * data).sum())


@dataclass(frozen=True)
class CensusResult:
    rows: int
    cols: int
    count: int
    method: str  # "formula", "special-case" or "oracle"
    elapsed: float  # seconds
    backend: str
    peak_dim: int = 1
    threads: int = 1


def count_graph_mosaics(rows: int, cols: int, backend: str = "auto", impl: str | None = None,
                        threads: int | None = None, width: int = 128,
                        limit: int = MAX_MAGNIFIED_BITS) -> CensusResult:
    """Number of graph ``rows x cols`` mosaics."""
    if rows < 1 or cols < 1:
        raise ValueError(f"grid sides must be positive, got {rows}x{cols}")
    if threads is None:
        threads = kernels.default_threads()
    start = time.perf_counter()
    if rows == 1 or cols == 1:
        # a single row or column has every tile edge on the boundary
        return CensusResult(rows, cols, 1, "special-case", time.perf_counter() - start, "none", 1, threads)
    m, n = min(rows, cols) - 2, max(rows, cols) - 2
    if m + n > limit:
        raise ResourceLimitError(
            f"{rows}x{cols} needs a magnified matrix of dimension 2^{m + n}; limit is 2^{limit}")
    mat = build_magnified(m, n, backend=backend, impl=impl, threads=threads, width=width, limit=limit)
    try:
        count = theorem_sum(mat, width=width)
    except CountOverflowError:
        if backend != "auto":
            raise
        mat = build_magnified(m, n, backend="bignum", limit=limit)
        count = theorem_sum(mat)
    tag = f"fixed128/{mat.impl}" if mat.backend == "fixed128" else "bignum"
    return CensusResult(rows, cols, count, "formula", time.perf_counter() - start, tag, mat.dim, threads)
