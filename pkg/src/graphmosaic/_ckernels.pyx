# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled u128 kernels.

Matrices of counts are ``uint64[rows, cols, 2]`` arrays holding (lo, hi)
words, i.e. little-endian ``unsigned __int128`` per entry. Every product and
sum is overflow-checked; kernels report overflow instead of wrapping.
"""
from cython.parallel cimport prange
from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #include <stdint.h>
    typedef unsigned __int128 gm_u128;

    static inline gm_u128 gm_limit(int width) {
        if (width >= 128) return ~(gm_u128)0;
        return (((gm_u128)1) << width) - 1;
    }

    static inline int gm_mul_u64(gm_u128 a, uint64_t b, gm_u128 *r) {
        gm_u128 lo = (gm_u128)(uint64_t)a * b;
        gm_u128 hi = (gm_u128)(uint64_t)(a >> 64) * b;
        if (hi >> 64) return 1;
        *r = lo + (hi << 64);
        return *r < lo;
    }

    /* out[q*s + j] = sum_t a[q*s + t] * b[t*s + j] for one row, every block q. */
    static int gm_bd_row(const gm_u128 *a, const uint64_t *b, gm_u128 *out,
                         Py_ssize_t s, Py_ssize_t copies, gm_u128 limit) {
        int ovf = 0;
        for (Py_ssize_t q = 0; q < copies; q++) {
            const gm_u128 *ab = a + q * s;
            gm_u128 *ob = out + q * s;
            for (Py_ssize_t j = 0; j < s; j++) ob[j] = 0;
            for (Py_ssize_t t = 0; t < s; t++) {
                gm_u128 av = ab[t];
                if (!av) continue;
                const uint64_t *brow = b + t * s;
                for (Py_ssize_t j = 0; j < s; j++) {
                    gm_u128 p, acc;
                    ovf |= gm_mul_u64(av, brow[j], &p);
                    acc = ob[j] + p;
                    ovf |= acc < p;
                    ob[j] = acc;
                }
            }
            for (Py_ssize_t j = 0; j < s; j++) ovf |= ob[j] > limit;
        }
        return ovf;
    }

    /* sum_{i,j} w[popcount(i) + popcount(j)] * n[i, j] over one row. */
    static int gm_weighted_row(const gm_u128 *row, Py_ssize_t d, size_t i,
                               const uint64_t *w, gm_u128 *total, gm_u128 limit) {
        int ovf = 0;
        int pi = __builtin_popcountll((unsigned long long)i);
        for (Py_ssize_t j = 0; j < d; j++) {
            gm_u128 v = row[j], p, acc;
            if (!v) continue;
            ovf |= gm_mul_u64(v, w[pi + __builtin_popcountll((unsigned long long)j)], &p);
            acc = *total + p;
            ovf |= acc < p;
            *total = acc;
        }
        return ovf | (*total > limit);
    }

    static inline gm_u128 gm_zero(void) { return 0; }
    static inline uint64_t gm_lo(gm_u128 v) { return (uint64_t)v; }
    static inline uint64_t gm_hi(gm_u128 v) { return (uint64_t)(v >> 64); }
    """
    ctypedef struct gm_u128:
        pass
    gm_u128 gm_limit(int width) nogil
    int gm_bd_row(const gm_u128 *a, const uint64_t *b, gm_u128 *out,
                  Py_ssize_t s, Py_ssize_t copies, gm_u128 limit) nogil
    int gm_weighted_row(const gm_u128 *row, Py_ssize_t d, size_t i,
                        const uint64_t *w, gm_u128 *total, gm_u128 limit) nogil
    gm_u128 gm_zero() nogil
    uint64_t gm_lo(gm_u128 v) nogil
    uint64_t gm_hi(gm_u128 v) nogil


def _check_rows(name, arr):
    if arr.strides[1] != 16 or arr.strides[2] != 8:
        raise ValueError(f"{name} rows must be contiguous u128 entries")


def bd_mul(a, const uint64_t[:, ::1] b, out, int width=128, int threads=1):
    """Write ``a @ (I (x) b)`` into ``out``; return True on overflow.

    ``a`` and ``out`` are u128 views of equal square shape ``d = copies * s``;
    ``out`` may be a quadrant slice of a larger array.
    """
    _check_rows("a", a)
    _check_rows("out", out)
    cdef const uint64_t[:, :, :] av = a
    cdef uint64_t[:, :, :] ov = out
    cdef Py_ssize_t d = av.shape[0]
    cdef Py_ssize_t s = b.shape[0]
    if b.shape[1] != s or av.shape[1] != d or d % s:
        raise ValueError(f"dimension mismatch: a is {d}x{av.shape[1]}, block is {s}x{b.shape[1]}")
    if ov.shape[0] != d or ov.shape[1] != d:
        raise ValueError("output shape does not match a")
    cdef Py_ssize_t copies = d // s
    cdef gm_u128 limit = gm_limit(width)
    cdef Py_ssize_t i
    cdef int nthreads = max(threads, 1)
    cdef int ovf = 0
    for i in prange(d, nogil=True, num_threads=nthreads, schedule="static"):
        ovf += gm_bd_row(<const gm_u128 *> &av[i, 0, 0], &b[0, 0],
                         <gm_u128 *> &ov[i, 0, 0], s, copies, limit)
    return ovf != 0


def weighted_sum(n, const uint64_t[::1] weights, int width=128):
    """Return ``(value, overflowed)`` for the popcount-weighted entry sum of ``n``."""
    _check_rows("n", n)
    cdef const uint64_t[:, :, :] nv = n
    cdef Py_ssize_t d = nv.shape[0]
    cdef Py_ssize_t i
    cdef int bits = 0
    while (<Py_ssize_t> 1 << bits) < max(d, nv.shape[1]):
        bits += 1
    if weights.shape[0] < 2 * bits + 1:
        raise ValueError(f"need {2 * bits + 1} weights, got {weights.shape[0]}")
    cdef gm_u128 total
    cdef gm_u128 limit = gm_limit(width)
    cdef int ovf = 0
    total = gm_zero()
    with nogil:
        for i in range(d):
            ovf |= gm_weighted_row(<const gm_u128 *> &nv[i, 0, 0], nv.shape[1], i,
                                   &weights[0], &total, limit)
    return (int(gm_hi(total)) << 64) | int(gm_lo(total)), ovf != 0
