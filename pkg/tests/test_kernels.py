"""Compiled and pure-Python elimination kernels must agree exactly."""
import os
import random
import subprocess
import sys

import pytest

from colorgder import _backend, _kernel_py

try:
    from colorgder import _kernel
except ImportError:  # pragma: no cover - depends on the build
    _kernel = None

needs_compiled = pytest.mark.skipif(_kernel is None, reason="compiled kernel not built")


def _rows(rng):
    m, n = rng.randint(0, 7), rng.randint(0, 8)
    vals = [0, 0, 0, 1, -1, 2, -3, 7, 10**25 + 3]
    return [[rng.choice(vals) for _ in range(n)] for _ in range(m)], n


@needs_compiled
def test_int_kernel_parity():
    rng = random.Random(5)
    for _ in range(1500):
        rows, n = _rows(rng)
        assert _kernel.rref_int(rows, n) == _kernel_py.rref_int(rows, n)


@needs_compiled
@pytest.mark.parametrize("p", [2, 3, 101, 2147483647])
def test_mod_kernel_parity(p):
    rng = random.Random(p)
    for _ in range(500):
        rows, n = _rows(rng)
        assert _kernel.rref_mod(rows, n, p) == _kernel_py.rref_mod(rows, n, p)


def test_int_kernel_contract():
    rows, piv = _kernel_py.rref_int([[2, 4, 6], [1, 1, 1], [3, 5, 7]], 3)
    assert piv == [0, 1]
    assert rows == [[1, 0, -1], [0, 1, 2]]


def test_pure_override_selects_fallback():
    env = dict(os.environ, COLORGDER_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import colorgder; print(colorgder.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_backend_reports_available_kernel():
    expected = "compiled" if _kernel is not None and not os.environ.get("COLORGDER_PURE") \
        else "python"
    assert _backend.BACKEND == expected
