# Compiled twin of _purekernels.py.  Keep the two in lockstep.
from libc.stdlib cimport malloc, realloc, free
from cpython.bytes cimport PyBytes_FromStringAndSize


def first_nonassociative(flat, int n):
    cdef int cells = n * n
    cdef int *t = <int *> malloc(cells * sizeof(int))
    cdef int a, b, c, ra, rab, rb
    if t == NULL:
        raise MemoryError()
    try:
        for a in range(cells):
            t[a] = flat[a]
        for a in range(n):
            ra = a * n
            for b in range(n):
                rab = t[ra + b] * n
                rb = b * n
                for c in range(n):
                    if t[rab + c] != t[ra + t[rb + c]]:
                        return (a, b, c)
        return None
    finally:
        free(t)


cdef bint _consistent(int *t, int n, int a, int b) nogil:
    cdef int v = t[a * n + b]
    cdef int ra = a * n
    cdef int rv = v * n
    cdef int rb = b * n
    cdef int x, y, z, rx, vz, bz, abz, xa, lhs, rhs, yb, ax
    for z in range(n):
        vz = t[rv + z]
        bz = t[rb + z]
        if vz < 0 or bz < 0:
            continue
        abz = t[ra + bz]
        if abz >= 0 and abz != vz:
            return False
    for x in range(n):
        rx = x * n
        xa = t[rx + a]
        if xa >= 0:
            lhs = t[xa * n + b]
            rhs = t[rx + v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        for y in range(n):
            if t[rx + y] == a:
                yb = t[y * n + b]
                if yb >= 0:
                    rhs = t[rx + yb]
                    if rhs >= 0 and rhs != v:
                        return False
            if t[rx + y] == b:
                ax = t[ra + x]
                if ax >= 0:
                    lhs = t[ax * n + y]
                    if lhs >= 0 and lhs != v:
                        return False
    return True


def enumerate_tables(int n, prefix=()):
    cdef int cells = n * n
    cdef int start = len(prefix)
    cdef int i, v, a, b, k
    cdef int last = cells - 1
    cdef Py_ssize_t cap = 1 << 16
    cdef Py_ssize_t used = 0
    cdef int *t = <int *> malloc(cells * sizeof(int))
    cdef char *out = <char *> malloc(cap)
    cdef char *grown
    if t == NULL or out == NULL:
        free(t)
        free(out)
        raise MemoryError()
    try:
        for i in range(cells):
            t[i] = -1
        for i in range(start):
            t[i] = prefix[i]
            if not _consistent(t, n, i // n, i % n):
                return b""
        if start == cells:
            for k in range(cells):
                out[k] = <char> t[k]
            return PyBytes_FromStringAndSize(out, cells)
        i = start
        while i >= start:
            v = t[i] + 1
            a = i // n
            b = i % n
            while v < n:
                t[i] = v
                if _consistent(t, n, a, b):
                    break
                v += 1
            if v == n:
                t[i] = -1
                i -= 1
            elif i == last:
                if used + cells > cap:
                    cap *= 2
                    grown = <char *> realloc(out, cap)
                    if grown == NULL:
                        raise MemoryError()
                    out = grown
                for k in range(cells):
                    out[used + k] = <char> t[k]
                used += cells
            else:
                i += 1
        return PyBytes_FromStringAndSize(out, used)
    finally:
        free(t)
        free(out)
