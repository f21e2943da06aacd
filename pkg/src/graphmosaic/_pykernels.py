"""Pure-Python twins of the compiled kernels in ``_ckernels.pyx``.

Same signatures and the same ``uint64[rows, cols, 2]`` storage. Arithmetic
runs on Python ints, so nothing can wrap; the width check reproduces the
overflow reporting of the fixed-width kernels.
"""
import numpy as np

_MASK64 = (1 << 64) - 1


def to_ints(arr: np.ndarray) -> np.ndarray:
    """u128 array -> object array of Python ints."""
    return (arr[..., 1].astype(object) << 64) | arr[..., 0].astype(object)


def block_mul_ints(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a @ (I (x) b)`` on object arrays, one column block at a time."""
    d, s = a.shape[0], b.shape[0]
    out = np.empty((d, a.shape[1]), dtype=object)
    for q in range(0, a.shape[1], s):
        out[:, q:q + s] = a[:, q:q + s].dot(b)
    return out


def bd_mul(a, b, out, width=128, threads=1):
    d, s = a.shape[0], b.shape[0]
    if b.shape[1] != s or a.shape[1] != d or d % s:
        raise ValueError(f"dimension mismatch: a is {d}x{a.shape[1]}, block is {s}x{b.shape[1]}")
    if out.shape[:2] != (d, d):
        raise ValueError("output shape does not match a")
    prod = block_mul_ints(to_ints(a), b.astype(object))
    # every partial sum is bounded by the final entry, so checking the result suffices
    if d and prod.max() >> min(width, 128):
        return True
    out[..., 0] = (prod & _MASK64).astype(np.uint64)
    out[..., 1] = (prod >> 64).astype(np.uint64)
    return False


def weighted_sum(n, weights, width=128):
    rows, cols = n.shape[:2]
    bits = max(rows, cols).bit_length() - 1
    if len(weights) < 2 * bits + 1:
        raise ValueError(f"need {2 * bits + 1} weights, got {len(weights)}")
    pop_r = np.array([bin(i).count("1") for i in range(rows)])
    pop_c = np.array([bin(j).count("1") for j in range(cols)])
    w = np.asarray(weights).astype(object)[pop_r[:, None] + pop_c[None, :]]
    total = int((w * to_ints(n)).sum())
    return total, bool(total >> min(width, 128))
