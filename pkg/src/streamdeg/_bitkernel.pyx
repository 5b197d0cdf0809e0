# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled transducer stepping kernel (optional fast path).

Mirrors _bitkernel_py: prepare() packs tables into flat arrays, run()
walks the input twice, first sizing the output and then filling it, so
no reallocation happens inside the hot loop.
"""
from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING
from libc.string cimport memcpy

import array

BACKEND = "compiled"


def prepare(delta, outs):
    cdef object d = array.array("q", delta)
    offs = array.array("q", [0] * (len(outs) + 1))
    cdef long long acc = 0
    cdef Py_ssize_t i
    for i in range(len(outs)):
        acc += len(outs[i])
        offs[i + 1] = acc
    blob = b"".join(outs)
    return (d, offs, blob)


def run(handle, bytes inp, long long start=0, long long out_limit=-1):
    cdef const long long[::1] delta = handle[0]
    cdef const long long[::1] off = handle[1]
    cdef bytes blob_b = handle[2]
    cdef const unsigned char* blob = <const unsigned char*> PyBytes_AS_STRING(blob_b)
    cdef const unsigned char* ip = <const unsigned char*> PyBytes_AS_STRING(inp)
    cdef Py_ssize_t n = len(inp)
    cdef long long q = start
    cdef long long total = 0
    cdef Py_ssize_t k, stop
    cdef long long i, w

    # pass 1: output size (and where to stop if a limit applies)
    stop = n
    for k in range(n):
        if out_limit >= 0 and total >= out_limit:
            stop = k
            break
        i = 2 * q + (ip[k] - 48)
        total += off[i + 1] - off[i]
        q = delta[i]
    if out_limit >= 0 and total > out_limit:
        total = out_limit

    out_b = PyBytes_FromStringAndSize(NULL, total)
    cdef unsigned char* op = <unsigned char*> PyBytes_AS_STRING(out_b)

    # pass 2: fill
    q = start
    cdef long long pos = 0
    for k in range(stop):
        i = 2 * q + (ip[k] - 48)
        w = off[i + 1] - off[i]
        if w > total - pos:
            w = total - pos
        if w > 0:
            memcpy(op + pos, blob + off[i], w)
            pos += w
        q = delta[i]
    return out_b, q
