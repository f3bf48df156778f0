# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: 64-bit Faddeev-LeVerrier and the LR tableau counter.

`char_poly` guards against 64-bit overflow at every step and raises
OverflowError when the intermediate matrices could leave the safe range;
the dispatcher then falls back to the arbitrary-precision pure-Python
kernel. `lr_count` needs no such guard: its counter only grows by
enumeration, so it cannot overflow within any feasible runtime.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport int64_t

BACKEND = "compiled"

cdef int64_t INT64_MAX = <int64_t>0x7FFFFFFFFFFFFFFF


def char_poly(rows):
    """Coefficients of det(xI - A), descending, for an integer matrix A.

    Raises OverflowError if the computation cannot be completed exactly
    in signed 64-bit arithmetic.
    """
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return [1]
    cdef Py_ssize_t i, j, t, k
    cdef int64_t *a = <int64_t *> malloc(n * n * sizeof(int64_t))
    cdef int64_t *work = <int64_t *> malloc(n * n * sizeof(int64_t))
    cdef int64_t *prod = <int64_t *> malloc(n * n * sizeof(int64_t))
    if a == NULL or work == NULL or prod == NULL:
        free(a); free(work); free(prod)
        raise MemoryError()
    cdef int64_t rowsum, maxrow, acc, trace, c, guard, maxwork, v
    cdef list coeffs
    try:
        maxrow = 1
        for i in range(n):
            row = rows[i]
            if len(row) != n:
                raise ValueError("matrix must be square")
            rowsum = 0
            for j in range(n):
                v = row[j]  # OverflowError here if an entry exceeds int64
                a[i * n + j] = v
                rowsum += v if v >= 0 else -v
            if rowsum > maxrow:
                maxrow = rowsum
        # every intermediate of one step is bounded by (n+1)*maxrow*max|work|,
        # so cap max|work| at INT64_MAX // ((n+2)*maxrow)
        if maxrow > INT64_MAX // (n + 2):
            raise OverflowError("row sums too large for 64-bit kernel")
        guard = INT64_MAX // ((n + 2) * maxrow)

        for i in range(n):
            for j in range(n):
                work[i * n + j] = 1 if i == j else 0

        coeffs = [1]
        for k in range(1, n + 1):
            maxwork = 0
            for i in range(n * n):
                v = work[i]
                if v < 0:
                    v = -v
                if v > maxwork:
                    maxwork = v
            if maxwork > guard:
                raise OverflowError("intermediate growth exceeds 64-bit range")
            for i in range(n):
                for j in range(n):
                    acc = 0
                    for t in range(n):
                        if a[i * n + t] != 0:
                            acc += a[i * n + t] * work[t * n + j]
                    prod[i * n + j] = acc
            trace = 0
            for i in range(n):
                trace += prod[i * n + i]
            if trace % k != 0:
                raise ArithmeticError("Faddeev-LeVerrier division was not exact")
            c = -(trace // k)
            coeffs.append(c)
            for i in range(n):
                prod[i * n + i] += c
            for i in range(n * n):
                work[i] = prod[i]
        return coeffs
    finally:
        free(a)
        free(work)
        free(prod)


cdef bint _fill(Py_ssize_t t, Py_ssize_t ncells, int nvals,
                Py_ssize_t *above, Py_ssize_t *right, int *content,
                int *counts, int *values, long long *found,
                long long limit):
    if t == ncells:
        found[0] += 1
        return limit != 0 and found[0] >= limit
    cdef int lo = 1, hi = nvals, v
    if above[t] >= 0:
        lo = values[above[t]] + 1
    if right[t] >= 0:
        hi = values[right[t]]
    for v in range(lo, hi + 1):
        if counts[v] >= content[v - 1]:
            continue
        if v >= 2 and counts[v] >= counts[v - 1]:
            continue
        counts[v] += 1
        values[t] = v
        if _fill(t + 1, ncells, nvals, above, right, content,
                 counts, values, found, limit):
            counts[v] -= 1
            return True
        counts[v] -= 1
    return False


def lr_count(gamma, inner, content, limit=0):
    """Count LR skew tableaux of shape gamma/inner with the given content.

    Same contract as the pure kernel: inputs pre-validated, `inner`
    padded to len(gamma), cell count equal to sum(content).
    """
    cdef int nvals = len(content)
    cells = []
    cdef Py_ssize_t r
    cdef long long g, c
    for r in range(len(gamma)):
        g = gamma[r]
        c = g - 1
        while c >= inner[r]:
            cells.append((r, c))
            c -= 1
    cdef Py_ssize_t ncells = len(cells)
    if ncells == 0:
        return 1
    if nvals == 0:
        return 0

    index = {cell: t for t, cell in enumerate(cells)}
    cdef Py_ssize_t *above = <Py_ssize_t *> malloc(ncells * sizeof(Py_ssize_t))
    cdef Py_ssize_t *right = <Py_ssize_t *> malloc(ncells * sizeof(Py_ssize_t))
    cdef int *ccontent = <int *> malloc(nvals * sizeof(int))
    cdef int *counts = <int *> malloc((nvals + 1) * sizeof(int))
    cdef int *values = <int *> malloc(ncells * sizeof(int))
    if above == NULL or right == NULL or ccontent == NULL or counts == NULL or values == NULL:
        free(above); free(right); free(ccontent); free(counts); free(values)
        raise MemoryError()
    cdef long long found = 0
    cdef Py_ssize_t t
    cdef int i
    try:
        for t in range(ncells):
            rr, cc = cells[t]
            above[t] = index.get((rr - 1, cc), -1)
            right[t] = index.get((rr, cc + 1), -1)
        for i in range(nvals):
            ccontent[i] = content[i]
        for i in range(nvals + 1):
            counts[i] = 0
        _fill(0, ncells, nvals, above, right, ccontent, counts, values,
              &found, limit)
        return found
    finally:
        free(above)
        free(right)
        free(ccontent)
        free(counts)
        free(values)
