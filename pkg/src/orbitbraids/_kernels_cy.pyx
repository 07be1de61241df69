# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled word kernels; signatures match _kernels_py exactly."""

from libc.stdlib cimport free, malloc


def reduce_letters(codes):
    cdef Py_ssize_t m = len(codes)
    if m == 0:
        return ()
    cdef long long *buf = <long long *> malloc(m * sizeof(long long))
    if buf == NULL:
        raise MemoryError
    cdef Py_ssize_t top = 0
    cdef long long c
    try:
        for obj in codes:
            c = obj
            if top > 0 and buf[top - 1] == -c:
                top -= 1
            else:
                buf[top] = c
                top += 1
        return tuple([buf[i] for i in range(top)])
    finally:
        free(buf)


def substitute(codes, flat_obj, offsets_obj, Py_ssize_t size):
    cdef long long[::1] flat = flat_obj
    cdef long long[::1] offsets = offsets_obj
    cdef Py_ssize_t cap = 0
    cdef long long c
    cdef Py_ssize_t k
    for obj in codes:
        c = obj
        k = c - 1 if c > 0 else size - c - 1
        cap += offsets[k + 1] - offsets[k]
    if cap == 0:
        return ()
    cdef long long *buf = <long long *> malloc(cap * sizeof(long long))
    if buf == NULL:
        raise MemoryError
    cdef Py_ssize_t top = 0, idx, a, b
    cdef long long t
    try:
        for obj in codes:
            c = obj
            k = c - 1 if c > 0 else size - c - 1
            a = offsets[k]
            b = offsets[k + 1]
            for idx in range(a, b):
                t = flat[idx]
                if top > 0 and buf[top - 1] == -t:
                    top -= 1
                else:
                    buf[top] = t
                    top += 1
        return tuple([buf[i] for i in range(top)])
    finally:
        free(buf)
