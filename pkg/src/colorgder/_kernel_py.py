"""Pure-Python elimination kernels.

Both kernels take a list of integer rows and return ``(rows, pivots)`` where
``rows`` are the nonzero rows of a reduced echelon form, sorted by pivot
column.  ``rref_int`` works fraction-free over the integers: every returned
row is primitive with a positive pivot, and each pivot column is zero in all
other rows.  Dividing each row by its pivot gives the rational RREF.
``rref_mod`` returns the genuine RREF over GF(p) with residues in ``[0, p)``.

The compiled extension ``_kernel`` exposes the same two functions.
"""
from __future__ import annotations

from math import gcd


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        row = [x // g for x in row]
    return row


def rref_int(rows, ncols):
    work = [list(r) for r in rows if any(r)]
    m = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        best = -1
        bval = 0
        for i in range(r, m):
            v = work[i][c]
            if v and (best < 0 or abs(v) < bval):
                best = i
                bval = abs(v)
                if bval == 1:
                    break
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        prow = work[r]
        pc = prow[c]
        for i in range(r + 1, m):
            a = work[i][c]
            if a:
                g = gcd(a, pc)
                m1 = pc // g
                m2 = a // g
                row = work[i]
                work[i] = _primitive([m1 * x - m2 * y for x, y in zip(row, prow)])
        pivots.append(c)
        r += 1
    work = work[:r]
    # back substitution among pivot rows
    for k in range(r - 1, -1, -1):
        c = pivots[k]
        prow = work[k]
        if prow[c] < 0:
            prow = [-x for x in prow]
        prow = _primitive(prow)
        work[k] = prow
        pc = prow[c]
        for i in range(k):
            a = work[i][c]
            if a:
                g = gcd(a, pc)
                m1 = pc // g
                m2 = a // g
                work[i] = _primitive([m1 * x - m2 * y for x, y in zip(work[i], prow)])
    for k in range(r):
        if work[k][pivots[k]] < 0:
            work[k] = [-x for x in work[k]]
    return work, pivots


def rref_mod(rows, ncols, p):
    work = [[x % p for x in r] for r in rows]
    work = [r for r in work if any(r)]
    m = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        best = -1
        for i in range(r, m):
            if work[i][c]:
                best = i
                break
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        inv = pow(work[r][c], -1, p)
        prow = [(x * inv) % p for x in work[r]]
        work[r] = prow
        for i in range(m):
            if i != r:
                a = work[i][c]
                if a:
                    work[i] = [(x - a * y) % p for x, y in zip(work[i], prow)]
        pivots.append(c)
        r += 1
    return work[:r], pivots
