import subprocess
import sys

import numpy as np

from poegraphs import _kernels
from poegraphs.groups import GroupSpec
from poegraphs.primes import prime_flags


def test_backend_reports_numba_by_default():
    assert _kernels.ACTIVE_BACKEND in ("numba", "numpy")


def test_env_flag_forces_numpy_backend():
    code = (
        "from poegraphs import _kernels; "
        "print(_kernels.ACTIVE_BACKEND)"
    )
    proc = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"POE_PURE_NUMPY": "1", "PATH": "/usr/bin:/bin"},
    )
    assert proc.stdout.strip() == "numpy"


def test_kernel_paths_bit_identical():
    for factors in ([45], [2, 8], [3, 3, 3], [97]):
        g = GroupSpec(factors)
        coords = g.coordinate_array()
        fs = np.array(g.factors, dtype=np.int64)
        mask = prime_flags(g.exponent)
        a = _kernels.build_adjacency(coords, fs, mask, backend="numpy")
        if _kernels._HAVE_NUMBA:
            b = _kernels.build_adjacency(coords, fs, mask, backend="numba")
            assert (a == b).all()
    rng = np.random.default_rng(1)
    m = rng.integers(-3, 4, size=(50, 50))
    for p in (33_554_393, 999_983):
        r_np = _kernels.charpoly_mod(m, p, backend="numpy")
        if _kernels._HAVE_NUMBA:
            r_nb = _kernels.charpoly_mod(m, p, backend="numba")
            assert (r_np == r_nb).all()


def test_charpoly_mod_reduces_known_case():
    # x^2 - 1 for the single-edge graph, mod a small prime
    out = _kernels.charpoly_mod(np.array([[0, 1], [1, 0]]), 97)
    assert out.tolist() == [96, 0, 1]
