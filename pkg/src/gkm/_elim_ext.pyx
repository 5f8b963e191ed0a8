# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fraction-free Gauss-Jordan elimination.

Same contract as :func:`gkm._elim_py.rref`. The fast path runs on a flat
``int64`` buffer with checked arithmetic. Each row update is staged in a
scratch row and committed only when it completes, so if an intermediate
value overflows the matrix is still a valid mid-elimination state; the
remaining work then continues on Python integers from that exact point.
"""
from libc.limits cimport LLONG_MIN
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cdef extern from *:
    """
    static inline int gkm_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int gkm_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int gkm_mul_ovf(long long a, long long b, long long *r) nogil
    int gkm_sub_ovf(long long a, long long b, long long *r) nogil

cdef object LIMIT = 2 ** 62


cdef struct State:
    Py_ssize_t j      # current column
    Py_ssize_t k      # rank so far / row holding the current pivot
    Py_ssize_t i      # next row to update in column j
    long long prev    # previous pivot


cdef int _update_row(long long *row, long long *rowk, long long *scratch, Py_ssize_t start,
                     Py_ssize_t n, long long piv, long long c, long long prev) noexcept nogil:
    """Stage ``(piv*row - c*rowk) / prev`` in ``scratch``; 1 on overflow."""
    cdef Py_ssize_t x
    cdef long long t1, t2
    for x in range(start, n):
        if c == 0:
            if gkm_mul_ovf(piv, row[x], &t1):
                return 1
        else:
            if gkm_mul_ovf(piv, row[x], &t1) or gkm_mul_ovf(c, rowk[x], &t2) or gkm_sub_ovf(t1, t2, &t1):
                return 1
        if t1 == LLONG_MIN:
            return 1
        # exact: every intermediate entry is a minor of the input
        scratch[x] = t1 / prev
    return 0


cdef int _rref_i64(long long *a, long long *scratch, Py_ssize_t m, Py_ssize_t n,
                   Py_ssize_t *piv_cols, State *st) noexcept nogil:
    """Eliminate in place; on overflow return 1 with ``st`` at the failed row."""
    cdef Py_ssize_t i, j, k = 0, p, x, start
    cdef long long prev = 1, piv, c, tmp
    cdef long long *rowk
    cdef long long *row
    for j in range(n):
        if k == m:
            break
        p = k
        while p < m and a[p * n + j] == 0:
            p += 1
        if p == m:
            continue
        if p != k:
            for x in range(n):
                tmp = a[k * n + x]
                a[k * n + x] = a[p * n + x]
                a[p * n + x] = tmp
        rowk = a + k * n
        piv = rowk[j]
        for i in range(m):
            if i == k:
                continue
            row = a + i * n
            c = row[j]
            if c == 0 and piv == prev:
                continue
            start = 0 if i < k else j
            if _update_row(row, rowk, scratch, start, n, piv, c, prev):
                st.j, st.k, st.i, st.prev = j, k, i, prev
                return 1
            memcpy(row + start, scratch + start, (n - start) * sizeof(long long))
        prev = piv
        piv_cols[k] = j
        k += 1
    st.k = k
    return 0


cdef void _step_obj(list a, Py_ssize_t ncols, Py_ssize_t j, Py_ssize_t k, Py_ssize_t first, object prev):
    """Clear column ``j`` against pivot row ``k`` for rows ``first..``."""
    cdef Py_ssize_t m = len(a), i, x, start
    cdef list rowk = <list>a[k], row
    cdef object piv = rowk[j], c
    for i in range(first, m):
        if i == k:
            continue
        row = <list>a[i]
        c = row[j]
        if c == 0 and piv == prev:
            continue
        start = 0 if i < k else j
        for x in range(start, ncols):
            row[x] = (piv * row[x] - c * rowk[x]) // prev


cdef tuple _rref_obj(list a, Py_ssize_t ncols, Py_ssize_t j0=0, Py_ssize_t k=0, object prev=1,
                     list pivots=None):
    cdef Py_ssize_t m = len(a), j, p
    if pivots is None:
        pivots = []
    for j in range(j0, ncols):
        if k == m:
            break
        p = k
        while p < m and (<list>a[p])[j] == 0:
            p += 1
        if p == m:
            continue
        if p != k:
            a[k], a[p] = a[p], a[k]
        _step_obj(a, ncols, j, k, 0, prev)
        prev = (<list>a[k])[j]
        pivots.append(j)
        k += 1
    return a[:k], pivots


def rref(matrix, Py_ssize_t ncols):
    """Fraction-free reduced row echelon form; see :func:`gkm._elim_py.rref`."""
    cdef list rows = [list(r) for r in matrix if any(r)]
    cdef Py_ssize_t m = len(rows), i, x
    cdef long long *buf
    cdef long long *scratch
    cdef Py_ssize_t *piv
    cdef State st
    cdef int overflow
    cdef object v
    cdef list pivots, a
    if m == 0 or ncols == 0:
        return [], []
    for r in rows:
        for v in r:
            if v >= LIMIT or v <= -LIMIT:
                return _rref_obj(rows, ncols)
    buf = <long long *> malloc(m * ncols * sizeof(long long))
    scratch = <long long *> malloc(ncols * sizeof(long long))
    piv = <Py_ssize_t *> malloc(ncols * sizeof(Py_ssize_t))
    if buf == NULL or scratch == NULL or piv == NULL:
        free(buf)
        free(scratch)
        free(piv)
        raise MemoryError()
    try:
        for i in range(m):
            for x in range(ncols):
                buf[i * ncols + x] = rows[i][x]
        with nogil:
            overflow = _rref_i64(buf, scratch, m, ncols, piv, &st)
        if not overflow:
            out = [[buf[i * ncols + x] for x in range(ncols)] for i in range(st.k)]
            return out, [piv[i] for i in range(st.k)]
        # resume on Python integers: finish column st.j from row st.i, then carry on
        a = [[buf[i * ncols + x] for x in range(ncols)] for i in range(m)]
        pivots = [piv[i] for i in range(st.k)]
        _step_obj(a, ncols, st.j, st.k, st.i, st.prev)
        pivots.append(st.j)
        return _rref_obj(a, ncols, st.j + 1, st.k + 1, a[st.k][st.j], pivots)
    finally:
        free(buf)
        free(scratch)
        free(piv)
