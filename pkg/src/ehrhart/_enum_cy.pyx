# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-point enumeration kernel.

Same contract as ``_enum_py.count_box`` but on C int64 arithmetic: the
caller is responsible for checking (with exact integer arithmetic) that
every partial sum a row can reach stays below 2**62 before dispatching
here. Structure mirrors the pure kernel: depth-first walk over the outer
coordinates with running partial sums, best-case pruning, and interval
clipping on the last coordinate.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

KERNEL_NAME = "compiled"


cdef int64_t walk(
    int j,
    int n,
    int m,
    int64_t* lo,
    int64_t* hi,
    int64_t* normals,   # row-major m x n
    int64_t* offsets,
    int64_t* minrest,   # row-major m x (n+1)
    int64_t* partials,  # scratch, one row of m sums per level
) noexcept nogil:
    cdef int64_t total = 0
    cdef int64_t x, x_lo, x_hi, a, rem, q
    cdef int i
    cdef bint ok
    cdef int64_t* cur = partials + j * m
    cdef int64_t* nxt = partials + (j + 1) * m

    if j == n - 1:
        x_lo = lo[j]
        x_hi = hi[j]
        for i in range(m):
            a = normals[i * n + j]
            rem = offsets[i] - cur[i]
            if a > 0:
                # x <= floor(rem / a); C division truncates toward zero
                q = rem / a
                if rem % a != 0 and rem < 0:
                    q -= 1
                if q < x_hi:
                    x_hi = q
            elif a < 0:
                # x >= ceil(rem / a)
                q = rem / a
                if rem % a != 0 and rem < 0:
                    q += 1
                if q > x_lo:
                    x_lo = q
            else:
                if rem < 0:
                    return 0
        if x_hi < x_lo:
            return 0
        return x_hi - x_lo + 1

    for x in range(lo[j], hi[j] + 1):
        ok = True
        for i in range(m):
            nxt[i] = cur[i] + normals[i * n + j] * x
            if nxt[i] + minrest[i * (n + 1) + j + 1] > offsets[i]:
                ok = False
        if ok:
            total += walk(j + 1, n, m, lo, hi, normals, offsets, minrest, partials)
    return total


def count_box(lo, hi, normals, offsets):
    """Number of integer x with lo <= x <= hi and normals @ x <= offsets."""
    cdef int n = len(lo)
    cdef int m = len(normals)
    cdef int i, j
    cdef int64_t result, a, via_lo, via_hi
    cdef int64_t* c_lo = NULL
    cdef int64_t* c_hi = NULL
    cdef int64_t* c_nor = NULL
    cdef int64_t* c_off = NULL
    cdef int64_t* c_min = NULL
    cdef int64_t* c_par = NULL

    for j in range(n):
        if lo[j] > hi[j]:
            return 0
    if n == 0:
        return 1 if all(c >= 0 for c in offsets) else 0

    c_lo = <int64_t*> malloc(n * sizeof(int64_t))
    c_hi = <int64_t*> malloc(n * sizeof(int64_t))
    c_nor = <int64_t*> malloc((m * n if m else 1) * sizeof(int64_t))
    c_off = <int64_t*> malloc((m if m else 1) * sizeof(int64_t))
    c_min = <int64_t*> malloc((m * (n + 1) if m else 1) * sizeof(int64_t))
    c_par = <int64_t*> malloc(((n + 1) * m if m else 1) * sizeof(int64_t))
    if c_lo == NULL or c_hi == NULL or c_nor == NULL or c_off == NULL or c_min == NULL or c_par == NULL:
        if c_lo != NULL:
            free(c_lo)
        if c_hi != NULL:
            free(c_hi)
        if c_nor != NULL:
            free(c_nor)
        if c_off != NULL:
            free(c_off)
        if c_min != NULL:
            free(c_min)
        if c_par != NULL:
            free(c_par)
        raise MemoryError()

    try:
        for j in range(n):
            c_lo[j] = lo[j]
            c_hi[j] = hi[j]
        for i in range(m):
            c_off[i] = offsets[i]
            row = normals[i]
            for j in range(n):
                c_nor[i * n + j] = row[j]
        for i in range(m):
            c_min[i * (n + 1) + n] = 0
            for j in range(n - 1, -1, -1):
                a = c_nor[i * n + j]
                via_lo = a * c_lo[j]
                via_hi = a * c_hi[j]
                c_min[i * (n + 1) + j] = c_min[i * (n + 1) + j + 1] + (
                    via_lo if via_lo < via_hi else via_hi
                )
            c_par[i] = 0
        with nogil:
            result = walk(0, n, m, c_lo, c_hi, c_nor, c_off, c_min, c_par)
        return result
    finally:
        free(c_lo)
        free(c_hi)
        free(c_nor)
        free(c_off)
        free(c_min)
        free(c_par)
