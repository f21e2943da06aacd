"""Brute-force ground truth.

Everything here enumerates tile assignments directly, one actual tile at a
time, and shares nothing with the formula path except the tile table. Cells
are filled row-major; a candidate tile is rejected as soon as it disagrees
with its left or upper neighbour or with a fixed boundary letter.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .statematrix import ResourceLimitError, StateMatrix, normalize_kind
from .tiles import TILE_PATTERNS

MAX_GRAPH_CELLS = 20
MAX_CONNECTED_CELLS = 12
MAX_STATE_M = 3
MAX_MAGNIFIED_CELLS = 4
MAX_BRIDGE_PAIRS = 24

# (t letter, b letter) of the single column for each state matrix kind
_KIND_TB = {"X+": ("x", "x"), "X-": ("o", "x"), "O+": ("o", "o"), "O-": ("x", "o")}


def _word(index: int, length: int) -> str:
    # binary of index - 1, written least significant digit first, padded with x
    digits = format(index - 1, "b")[::-1].ljust(length, "0")
    return digits.replace("0", "x").replace("1", "o")


@dataclass(frozen=True)
class BoundaryRequirement:
    """Required x/o words per side; ``None`` leaves that side free."""

    l: str | None = None
    r: str | None = None
    t: str | None = None
    b: str | None = None

    def check(self, rows: int, cols: int) -> None:
        for side, want in (("l", rows), ("r", rows), ("t", cols), ("b", cols)):
            word = getattr(self, side)
            if word is not None and (len(word) != want or set(word) - {"x", "o"}):
                raise ValueError(f"{side}-requirement {word!r} is not an x/o word of length {want}")

    @classmethod
    def empty_boundary(cls, rows: int, cols: int) -> "BoundaryRequirement":
        return cls("x" * rows, "x" * rows, "x" * cols, "x" * cols)


def _count(rows: int, cols: int, req: BoundaryRequirement) -> int:
    # required flag per boundary edge, or None when free
    def flags(word):
        return None if word is None else [ch == "o" for ch in word]

    left, right, top, bottom = flags(req.l), flags(req.r), flags(req.t), flags(req.b)
    grid = [[0] * cols for _ in range(rows)]
    ncell = rows * cols
    # tiles bucketed by their (l, t) flags, in tile order
    by_lt = {(l, t): [k for k, p in enumerate(TILE_PATTERNS) if p.l == l and p.t == t]
             for l in (False, True) for t in (False, True)}

    def candidates(i, j):
        ls = (False, True) if j == 0 and left is None else \
            (left[i],) if j == 0 else (TILE_PATTERNS[grid[i][j - 1]].r,)
        ts = (False, True) if i == 0 and top is None else \
            (top[j],) if i == 0 else (TILE_PATTERNS[grid[i - 1][j]].b,)
        need_r = right[i] if j == cols - 1 and right is not None else None
        need_b = bottom[j] if i == rows - 1 and bottom is not None else None
        for l in ls:
            for t in ts:
                for tile in by_lt[l, t]:
                    p = TILE_PATTERNS[tile]
                    if (need_r is None or p.r == need_r) and (need_b is None or p.b == need_b):
                        yield tile

    def dfs(cell):
        if cell == ncell:
            return 1
        i, j = divmod(cell, cols)
        total = 0
        for tile in list(candidates(i, j)):
            grid[i][j] = tile
            total += dfs(cell + 1)
        return total

    return dfs(0)


def brute_count_suitably_connected(rows: int, cols: int, req: BoundaryRequirement | None = None) -> int:
    if rows < 1 or cols < 1:
        raise ValueError("grid sides must be positive")
    if rows * cols > MAX_CONNECTED_CELLS:
        raise ResourceLimitError(f"oracle limited to {MAX_CONNECTED_CELLS} cells, got {rows * cols}")
    req = req or BoundaryRequirement()
    req.check(rows, cols)
    return _count(rows, cols, req)


def brute_count_graph_mosaics(rows: int, cols: int) -> int:
    if rows < 1 or cols < 1:
        raise ValueError("grid sides must be positive")
    if rows * cols > MAX_GRAPH_CELLS:
        raise ResourceLimitError(f"oracle limited to {MAX_GRAPH_CELLS} cells, got {rows * cols}")
    return _count(rows, cols, BoundaryRequirement.empty_boundary(rows, cols))


def brute_state_matrix(m: int, kind: str) -> StateMatrix:
    kind = normalize_kind(kind)
    if m > MAX_STATE_M:
        raise ResourceLimitError(f"oracle state matrices limited to m <= {MAX_STATE_M}")
    t, b = _KIND_TB[kind]
    dim = 1 << m
    out = np.zeros((dim, dim), dtype=np.uint64)
    if m == 0:
        # a column of no cells: its t and b edges coincide
        out[0, 0] = int(t == b)
        return StateMatrix(m, kind, out)
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            req = BoundaryRequirement(_word(i, m), _word(j, m), t, b)
            out[i - 1, j - 1] = brute_count_suitably_connected(m, 1, req)
    return StateMatrix(m, kind, out)


def brute_magnified(m: int, n: int) -> np.ndarray:
    """Object array whose ``(i, j)`` entry counts mosaics with lt-state ``i`` and rb-state ``j``."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m + n > MAX_MAGNIFIED_CELLS:
        raise ResourceLimitError(f"oracle magnified matrices limited to m + n <= {MAX_MAGNIFIED_CELLS}")
    dim = 1 << (m + n)
    if n == 0 or m == 0:
        # no cells; by convention the identity, matching the recursion's base
        return np.identity(dim, dtype=np.int64).astype(object)
    out = np.zeros((dim, dim), dtype=object)
    for i in range(1, dim + 1):
        lt = _word(i, m + n)
        for j in range(1, dim + 1):
            rb = _word(j, m + n)
            req = BoundaryRequirement(lt[:m], rb[:m], lt[m:], rb[m:])
            out[i - 1, j - 1] = brute_count_suitably_connected(m, n, req)
    return out


def brute_bridge_count(t: int) -> int:
    """Bridged/unbridged flag cycles of length ``t`` with no two adjacent unbridged pairs."""
    if t < 1:
        raise ValueError("t must be positive")
    if t > MAX_BRIDGE_PAIRS:
        raise ResourceLimitError(f"bridge enumeration limited to t <= {MAX_BRIDGE_PAIRS}")
    full = (1 << t) - 1
    count = 0
    for bridged in range(1 << t):
        unbridged = ~bridged & full
        # rotate by one pair; pair t-1 neighbours pair 0 (for t = 1, itself)
        rotated = (unbridged >> 1) | ((unbridged & 1) << (t - 1))
        if not unbridged & rotated:
            count += 1
    return count
