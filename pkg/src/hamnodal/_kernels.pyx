# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops over dense vertex arrays of H(n, q).

Vertices are little-endian base-q indices. Every routine here works on
int64 values or uint8 membership masks; exact rational inputs are handled
by the callers in pure Python.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef void _strides(Py_ssize_t n, Py_ssize_t q, Py_ssize_t* out) noexcept nogil:
    cdef Py_ssize_t t
    out[0] = 1
    for t in range(1, n):
        out[t] = out[t - 1] * q


def laplacian(const cnp.int64_t[::1] values, Py_ssize_t n, Py_ssize_t q):
    """(L f)(x) = sum over neighbours y of f(x) - f(y).

    Along each coordinate the neighbours of x and x itself form a line of q
    vertices, so (L f)(x) = n q f(x) - sum over coordinates of the line sums.
    """
    cdef Py_ssize_t size = values.shape[0]
    cdef Py_ssize_t stride, block, outer, inner, a, start, t
    cdef cnp.int64_t line
    out = np.empty(size, dtype=np.int64)
    cdef cnp.int64_t[::1] res = out
    with nogil:
        for start in range(size):
            res[start] = n * q * values[start]
        stride = 1
        for t in range(n):
            block = stride * q
            outer = 0
            while outer < size:
                for inner in range(stride):
                    start = outer + inner
                    line = 0
                    for a in range(q):
                        line += values[start + a * stride]
                    for a in range(q):
                        res[start + a * stride] -= line
                outer += block
            stride = block
    return out


cdef Py_ssize_t _label(const cnp.uint8_t[::1] mask, Py_ssize_t n, Py_ssize_t q,
                       cnp.int32_t[::1] labels, cnp.int32_t[::1] queue) noexcept nogil:
    cdef Py_ssize_t size = mask.shape[0]
    cdef Py_ssize_t strides[64]
    cdef Py_ssize_t s, v, w, t, a, d, base, head, tail
    cdef cnp.int32_t count = 0
    _strides(n, q, strides)
    for s in range(size):
        labels[s] = -1
    for s in range(size):
        if not mask[s] or labels[s] >= 0:
            continue
        labels[s] = count
        queue[0] = <cnp.int32_t>s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for t in range(n):
                d = (v // strides[t]) % q
                base = v - d * strides[t]
                for a in range(q):
                    if a == d:
                        continue
                    w = base + a * strides[t]
                    if mask[w] and labels[w] < 0:
                        labels[w] = count
                        queue[tail] = <cnp.int32_t>w
                        tail += 1
        count += 1
    return count


def label_components(const cnp.uint8_t[::1] mask, Py_ssize_t n, Py_ssize_t q):
    """Label the connected components of the subgraph induced by ``mask``.

    Returns ``(labels, count)``; vertices outside the mask get label -1 and
    components are numbered in order of their smallest vertex index.
    """
    cdef Py_ssize_t size = mask.shape[0]
    labels = np.empty(size, dtype=np.int32)
    queue = np.empty(max(size, 1), dtype=np.int32)
    cdef cnp.int32_t[::1] lab = labels
    cdef cnp.int32_t[::1] que = queue
    cdef Py_ssize_t count
    with nogil:
        count = _label(mask, n, q, lab, que)
    return labels, count


def sign_component_counts(const cnp.int64_t[::1] values, Py_ssize_t n, Py_ssize_t q):
    """Number of connected components of {f > 0} and of {f < 0}."""
    cdef Py_ssize_t size = values.shape[0]
    cdef Py_ssize_t v, npos, nneg
    pos = np.empty(size, dtype=np.uint8)
    neg = np.empty(size, dtype=np.uint8)
    labels = np.empty(size, dtype=np.int32)
    queue = np.empty(max(size, 1), dtype=np.int32)
    cdef cnp.uint8_t[::1] p = pos
    cdef cnp.uint8_t[::1] m = neg
    cdef cnp.int32_t[::1] lab = labels
    cdef cnp.int32_t[::1] que = queue
    with nogil:
        for v in range(size):
            p[v] = values[v] > 0
            m[v] = values[v] < 0
        npos = _label(p, n, q, lab, que)
        nneg = _label(m, n, q, lab, que)
    return npos, nneg
