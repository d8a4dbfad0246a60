# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels; same contract as ``_kernel_py``."""
from libc.stdlib cimport malloc, free
from math import gcd


cdef list _primitive(list row):
    cdef object g = 0
    cdef object x
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


cdef list _combine(list row, list prow, object m1, object m2):
    # m1 * row - m2 * prow, skipping zero entries of prow
    cdef Py_ssize_t j, n = len(row)
    cdef list out = list(row)
    cdef object y
    for j in range(n):
        y = prow[j]
        if y:
            out[j] = m1 * row[j] - m2 * y
        elif m1 != 1:
            out[j] = m1 * row[j]
    return _primitive(out)


def rref_int(rows, Py_ssize_t ncols):
    cdef list work = [list(row) for row in rows if any(row)]
    cdef Py_ssize_t m = len(work)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, k, best
    cdef object v, bval, pc, a, g
    cdef list prow
    for c in range(ncols):
        if r == m:
            break
        best = -1
        bval = 0
        for i in range(r, m):
            v = (<list>work[i])[c]
            if v and (best < 0 or abs(v) < bval):
                best = i
                bval = abs(v)
                if bval == 1:
                    break
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        prow = <list>work[r]
        pc = prow[c]
        for i in range(r + 1, m):
            a = (<list>work[i])[c]
            if a:
                g = gcd(a, pc)
                work[i] = _combine(<list>work[i], prow, pc // g, a // g)
        pivots.append(c)
        r += 1
    work = work[:r]
    for k in range(r - 1, -1, -1):
        c = pivots[k]
        prow = <list>work[k]
        if prow[c] < 0:
            prow = [-v for v in prow]
        prow = _primitive(prow)
        work[k] = prow
        pc = prow[c]
        for i in range(k):
            a = (<list>work[i])[c]
            if a:
                g = gcd(a, pc)
                work[i] = _combine(<list>work[i], prow, pc // g, a // g)
    for k in range(r):
        if (<list>work[k])[pivots[k]] < 0:
            work[k] = [-v for v in work[k]]
    return work, pivots


def rref_mod(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t m = 0, i, j, c, r = 0, best
    cdef list nz = []
    for row in rows:
        if any(x % p for x in row):
            nz.append(row)
    m = len(nz)
    if m == 0 or ncols == 0:
        return [], []
    cdef long long *a = <long long *> malloc(m * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef long long inv, f, t
    cdef list pivots = []
    try:
        for i in range(m):
            row = nz[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j] % p
        for c in range(ncols):
            if r == m:
                break
            best = -1
            for i in range(r, m):
                if a[i * ncols + c] != 0:
                    best = i
                    break
            if best < 0:
                continue
            if best != r:
                for j in range(ncols):
                    t = a[r * ncols + j]
                    a[r * ncols + j] = a[best * ncols + j]
                    a[best * ncols + j] = t
            inv = pow(a[r * ncols + c], -1, p)
            for j in range(ncols):
                a[r * ncols + j] = (a[r * ncols + j] * inv) % p
            for i in range(m):
                if i != r:
                    f = a[i * ncols + c]
                    if f != 0:
                        for j in range(ncols):
                            t = (a[i * ncols + j] - f * a[r * ncols + j]) % p
                            if t < 0:
                                t += p
                            a[i * ncols + j] = t
            pivots.append(c)
            r += 1
        out = [[a[i * ncols + j] for j in range(ncols)] for i in range(r)]
    finally:
        free(a)
    return out, pivots
