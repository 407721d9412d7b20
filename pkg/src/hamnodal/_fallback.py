"""Pure-Python implementations of the kernels in ``_kernels.pyx``.

Same signatures and results; used when the extension is not compiled or
when ``HAMNODAL_PURE=1`` is set.
"""
from collections import deque

import numpy as np


def _strides(n, q):
    return [q**t for t in range(n)]


def laplacian(values, n, q):
    f = np.asarray(values, dtype=np.int64)
    cube = f.reshape((q,) * n, order="F")
    out = (n * q) * cube
    for axis in range(n):
        out = out - cube.sum(axis=axis, keepdims=True)
    return np.ascontiguousarray(out.reshape(-1, order="F"))


def _label(mask, n, q, labels):
    strides = _strides(n, q)
    size = len(mask)
    count = 0
    for s in range(size):
        if not mask[s] or labels[s] >= 0:
            continue
        labels[s] = count
        todo = deque([s])
        while todo:
            v = todo.popleft()
            for st in strides:
                d = (v // st) % q
                base = v - d * st
                for a in range(q):
                    if a == d:
                        continue
                    w = base + a * st
                    if mask[w] and labels[w] < 0:
                        labels[w] = count
                        todo.append(w)
        count += 1
    return count


def label_components(mask, n, q):
    mask = [bool(b) for b in mask]
    labels = [-1] * len(mask)
    count = _label(mask, n, q, labels)
    return np.asarray(labels, dtype=np.int32), count


def sign_component_counts(values, n, q):
    vals = [int(v) for v in values]
    size = len(vals)
    npos = _label([v > 0 for v in vals], n, q, [-1] * size)
    nneg = _label([v < 0 for v in vals], n, q, [-1] * size)
    return npos, nneg
