# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled subset rank scan. Same contract as ``lincode._kernels_py``.

The scan runs without the GIL so chunks can be spread over threads.
"""

from array import array

from libc.stdint cimport uint32_t, uint64_t, int64_t
from libc.stdlib cimport malloc, realloc, free

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil

cdef enum:
    MAXP = 64

MAX_PACKED_ROWS = 64


cdef inline uint64_t _inv_mod(uint64_t a, uint64_t q) noexcept nogil:
    cdef int64_t t0 = 0, t1 = 1, r0 = <int64_t>q, r1 = <int64_t>a, quot, tmp
    while r1 != 0:
        quot = r0 // r1
        tmp = r0 - quot * r1
        r0 = r1
        r1 = tmp
        tmp = t0 - quot * t1
        t0 = t1
        t1 = tmp
    if t0 < 0:
        t0 += <int64_t>q
    return <uint64_t>t0


cdef bint _packed_full_rank(const uint64_t* masks, const unsigned char* dropped, int n,
                            int target, uint64_t* basis) noexcept nogil:
    cdef int c, h, r = 0
    cdef uint64_t v
    for h in range(MAXP):
        basis[h] = 0
    for c in range(n):
        if dropped[c]:
            continue
        v = masks[c]
        while v:
            h = 63 - __builtin_clzll(v)
            if basis[h] == 0:
                basis[h] = v
                r += 1
                if r == target:
                    return True
                break
            v ^= basis[h]
    return False


cdef bint _dense_full_rank(const uint32_t* cols, const unsigned char* dropped, int n,
                           int target, uint64_t q, uint64_t* piv, char* have,
                           uint64_t* row) noexcept nogil:
    # piv: target x target pivot rows, have[c] marks column c owning a pivot
    cdef int c, t, i, r = 0
    cdef uint64_t a, inv
    for i in range(target):
        have[i] = 0
    for c in range(n):
        if dropped[c]:
            continue
        for t in range(target):
            row[t] = cols[c * target + t]
        for i in range(target):
            a = row[i]
            if a == 0:
                continue
            if not have[i]:
                inv = _inv_mod(a, q)
                for t in range(i, target):
                    piv[i * target + t] = row[t] * inv % q
                have[i] = 1
                r += 1
                break
            for t in range(i, target):
                row[t] = (row[t] + (q - a) * piv[i * target + t]) % q
        if r == target:
            return True
    return False


def deficient_subsets(columns, int q, int rows, int j, int lo=0, hi=None,
                      bint first_only=False, bint packed=True):
    """Scan the ``j``-subsets whose first index lies in ``[lo, hi)``.

    Returns ``(subsets examined, hits)``; a hit is a subset whose deletion
    leaves columns spanning fewer than ``rows`` dimensions.
    """
    cdef int n = len(columns)
    if j < 1 or j > n:
        raise ValueError(f"subset size {j} outside [1, {n}]")
    cdef int top = n if hi is None else min(<int>hi, n)
    top = min(top, n - j + 1)
    cdef bint use_packed = packed and q == 2 and rows <= MAX_PACKED_ROWS

    mask_arr = array("Q", [0] * max(n, 1))
    col_arr = array("I", [0] * max(n * rows, 1))
    cdef uint64_t[:] masks = mask_arr
    cdef uint32_t[:] cols = col_arr
    cdef int c, t
    for c in range(n):
        col = columns[c]
        if len(col) != rows:
            raise ValueError("column length does not match rows")
        for t in range(rows):
            cols[c * rows + t] = <uint32_t>(col[t] % q)
            if use_packed and (col[t] & 1):
                masks[c] |= (<uint64_t>1) << t

    cdef int* idx = <int*>malloc(j * sizeof(int))
    cdef unsigned char* dropped = <unsigned char*>malloc(n + 1)
    cdef uint64_t* basis = <uint64_t*>malloc(MAXP * sizeof(uint64_t))
    cdef uint64_t* piv = <uint64_t*>malloc((rows * rows + 1) * sizeof(uint64_t))
    cdef char* have = <char*>malloc(rows + 1)
    cdef uint64_t* row = <uint64_t*>malloc((rows + 1) * sizeof(uint64_t))
    cdef int cap = 64, nhits = 0
    cdef int* hits = <int*>malloc(cap * j * sizeof(int))
    cdef int* grown
    cdef long long examined = 0
    cdef bint full, oom = False
    cdef int i
    cdef uint64_t qq = <uint64_t>q
    cdef const uint64_t* mp = &masks[0]
    cdef const uint32_t* cp = &cols[0]

    if not (idx and dropped and basis and piv and have and row and hits):
        free(idx); free(dropped); free(basis); free(piv); free(have); free(row); free(hits)
        raise MemoryError()

    try:
        with nogil:
            if lo < top:
                for i in range(n):
                    dropped[i] = 0
                for i in range(j):
                    idx[i] = lo + i
                    dropped[lo + i] = 1
                while True:
                    examined += 1
                    if use_packed:
                        full = _packed_full_rank(mp, dropped, n, rows, basis)
                    else:
                        full = _dense_full_rank(cp, dropped, n, rows, qq, piv, have, row)
                    if not full:
                        if nhits == cap:
                            cap *= 2
                            grown = <int*>realloc(hits, cap * j * sizeof(int))
                            if grown == NULL:
                                oom = True
                                break
                            hits = grown
                        for i in range(j):
                            hits[nhits * j + i] = idx[i]
                        nhits += 1
                        if first_only:
                            break
                    # next combination in lexicographic order
                    i = j - 1
                    while i >= 0 and idx[i] == n - j + i:
                        i -= 1
                    if i < 0:
                        break
                    dropped[idx[i]] = 0
                    idx[i] += 1
                    dropped[idx[i]] = 1
                    i += 1
                    while i < j:
                        dropped[idx[i]] = 0
                        idx[i] = idx[i - 1] + 1
                        dropped[idx[i]] = 1
                        i += 1
                    if idx[0] >= top:
                        break
        if oom:
            raise MemoryError()
        out = [tuple(hits[h * j + i] for i in range(j)) for h in range(nhits)]
    finally:
        free(idx); free(dropped); free(basis); free(piv); free(have); free(row); free(hits)
    return examined, out
