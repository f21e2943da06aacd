"""State matrices of suitably connected single-column mosaics.

Entry ``(i, j)`` of a state matrix of size ``2**m`` counts the suitably
connected ``(m, 1)``-mosaics whose left state has index ``i`` and right state
index ``j``. The kind fixes the bottom and top letters:

    X+  b = x, t = x        X-  b = x, t = o
    O+  b = o, t = o        O-  b = o, t = x

Entries are bounded by ``16**m``, so ``uint64`` storage is exact for every
``m`` under the default limit; additions are still checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .kernels import CountOverflowError

KINDS = ("X+", "X-", "O+", "O-")
MAX_STATE_M = 14

_U64_MAX = np.iinfo(np.uint64).max


class ResourceLimitError(RuntimeError):
    """Requested size exceeds a configured dimension or enumeration guard."""


def normalize_kind(kind: str) -> str:
    k = kind.replace("−", "-").upper()
    if k not in KINDS:
        raise ValueError(f"unknown state matrix kind {kind!r}; expected one of {', '.join(KINDS)}")
    return k


@dataclass(frozen=True, eq=False)
class StateMatrix:
    m: int
    kind: str
    entries: np.ndarray  # uint64, shape (2**m, 2**m), read-only

    def __post_init__(self):
        self.entries.flags.writeable = False

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def entry(self, i: int, j: int) -> int:
        """1-based accessor returning an exact Python int."""
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise IndexError(f"entry ({i}, {j}) outside 1..{self.dim}")
        return int(self.entries[i - 1, j - 1])

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def __eq__(self, other):
        if isinstance(other, StateMatrix):
            other = other.entries
        other = np.asarray(other, dtype=object)
        return other.shape == self.entries.shape and bool((self.entries.astype(object) == other).all())

    __hash__ = None


class StateMatrices(NamedTuple):
    x_plus: StateMatrix
    x_minus: StateMatrix
    o_plus: StateMatrix
    o_minus: StateMatrix

    def by_kind(self, kind: str) -> StateMatrix:
        return self[KINDS.index(normalize_kind(kind))]


def _add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = a + b
    if (out < a).any():
        raise CountOverflowError("state matrix entry exceeds 64 bits")
    return out


def _times5(a: np.ndarray) -> np.ndarray:
    if a.size and a.max() > _U64_MAX // 5:
        raise CountOverflowError("state matrix entry exceeds 64 bits")
    return a * np.uint64(5)


def _blocks(a, b, c, d):
    return np.block([[a, b], [c, d]])


def build_state_matrices(m: int, limit: int = MAX_STATE_M) -> StateMatrices:
    """Build ``X_m^+, X_m^-, O_m^+, O_m^-`` bottom-up from the 1x1 base at ``m = 0``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > limit:
        raise ResourceLimitError(f"state matrices limited to m <= {limit}, got m = {m}")
    one = np.ones((1, 1), dtype=np.uint64)
    zero = np.zeros((1, 1), dtype=np.uint64)
    xp, xm, op, om = one, zero, one.copy(), zero.copy()
    for _ in range(m):
        xp_om = _add(xp, om)
        xm_op = _add(xm, op)
        xp, xm, op, om = (
            _blocks(xp, om, om, xp_om),
            _blocks(xm, op, op, xm_op),
            _blocks(op, xm_op, xm_op, _add(xm, _times5(op))),
            _blocks(om, xp_om, xp_om, _add(xp, _times5(om))),
        )
    return StateMatrices(*(StateMatrix(m, k, e) for k, e in zip(KINDS, (xp, xm, op, om))))


def state_matrix_entry_count(m: int, kind: str, i: int, j: int) -> int:
    return build_state_matrices(m).by_kind(kind).entry(i, j)


def format_matrix(rows) -> str:
    """Matrix dump: the dimension on one line, then one line of decimal entries per row."""
    rows = [[int(v) for v in row] for row in rows]
    lines = [str(len(rows))]
    lines.extend(" ".join(str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> list[list[int]]:
    lines = text.strip("\n").split("\n")
    dim = int(lines[0])
    rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ValueError(f"matrix dump is not {dim}x{dim}")
    return rows
