"""The compiled kernels and the pure-Python fallback must agree exactly."""
import numpy as np
import pytest

import oracles
from hamnodal import _fallback, kernels

try:
    from hamnodal import _kernels
except ImportError:
    _kernels = None

BACKENDS = [pytest.param(_fallback, id="python")]
if _kernels is not None:
    BACKENDS.append(pytest.param(_kernels, id="compiled"))

CASES = [(1, 2), (3, 2), (6, 2), (1, 5), (2, 3), (3, 3), (4, 3), (2, 4), (3, 5)]


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize("n, q", CASES)
def test_laplacian_backend(impl, n, q):
    rng = np.random.default_rng(n * 100 + q)
    f = rng.integers(-50, 50, size=q**n).astype(np.int64)
    got = np.asarray(impl.laplacian(f, n, q)).tolist()
    if q**n <= 81:
        assert got == oracles.laplacian(f.tolist(), n, q)
    else:
        assert got == np.asarray(_fallback.laplacian(f, n, q)).tolist()


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize("n, q", CASES)
def test_components_backend(impl, n, q):
    rng = np.random.default_rng(n * 7 + q)
    for density in (0.2, 0.5, 0.8):
        mask = (rng.random(q**n) < density).astype(np.uint8)
        labels, count = impl.label_components(mask, n, q)
        labels = np.asarray(labels)
        groups = [np.flatnonzero(labels == c).tolist() for c in range(count)]
        if q**n <= 81:
            assert groups == oracles.components(np.flatnonzero(mask).tolist(), n, q)
        ref_labels, ref_count = _fallback.label_components(mask, n, q)
        assert count == ref_count
        assert labels.tolist() == np.asarray(ref_labels).tolist()


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize("n, q", CASES)
def test_sign_counts_backend(impl, n, q):
    rng = np.random.default_rng(n + 31 * q)
    f = rng.integers(-2, 3, size=q**n).astype(np.int64)
    npos, nneg = impl.sign_component_counts(f, n, q)
    if q**n <= 81:
        pos, neg = oracles.sign_components(f.tolist(), n, q)
        assert (npos, nneg) == (len(pos), len(neg))
    assert (npos, nneg) == _fallback.sign_component_counts(f, n, q)


def test_empty_mask():
    for impl in [p.values[0] for p in BACKENDS]:
        labels, count = impl.label_components(np.zeros(8, dtype=np.uint8), 3, 2)
        assert count == 0 and (np.asarray(labels) == -1).all()


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "python")


def test_pure_switch_selects_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, HAMNODAL_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import hamnodal; print(hamnodal.BACKEND)"],
                         capture_output=True, text=True, env=env)
    assert out.stdout.strip() == "python"
