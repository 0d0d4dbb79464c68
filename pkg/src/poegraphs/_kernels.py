"""Hot numeric kernels with numba and pure-numpy implementations.

The numba path is the default; set ``POE_PURE_NUMPY=1`` to force the numpy
fallback (also used automatically when numba is unavailable).  Both paths
produce bit-identical results; ``benchmarks/bench_kernels.py`` compares
their speed.
"""

from __future__ import annotations

import math
import os

import numpy as np

_FORCE_NUMPY = os.environ.get("POE_PURE_NUMPY", "").strip().lower() not in (
    "",
    "0",
    "false",
)

if not _FORCE_NUMPY:
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _HAVE_NUMBA = False
else:
    _HAVE_NUMBA = False

ACTIVE_BACKEND = "numba" if _HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# pairwise composed-order adjacency
# ---------------------------------------------------------------------------


def _adjacency_numpy(coords, factors, prime_mask):
    n = coords.shape[0]
    adj = np.zeros((n, n), dtype=bool)
    # row blocks keep the intermediate int64 tables bounded in memory
    block = max(1, (1 << 22) // max(n, 1))
    tables = [nf // np.gcd(np.arange(nf, dtype=np.int64), nf) for nf in factors]
    for start in range(0, n, block):
        stop = min(n, start + block)
        orders = np.ones((stop - start, n), dtype=np.int64)
        for t, nf in enumerate(factors):
            s = (coords[start:stop, t, None] + coords[None, :, t]) % nf
            o_t = tables[t][s]
            orders = orders // np.gcd(orders, o_t) * o_t
        adj[start:stop] = prime_mask[orders]
    np.fill_diagonal(adj, False)
    return adj


if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _adjacency_numba(coords, factors, prime_mask):  # pragma: no cover - jit
        n = coords.shape[0]
        k = coords.shape[1]
        adj = np.zeros((n, n), dtype=np.bool_)
        for i in range(n):
            for j in range(i + 1, n):
                o = 1
                for t in range(k):
                    nf = factors[t]
                    s = (coords[i, t] + coords[j, t]) % nf
                    ot = nf // math.gcd(nf, s)
                    o = o // math.gcd(o, ot) * ot
                if prime_mask[o]:
                    adj[i, j] = True
                    adj[j, i] = True
        return adj


def build_adjacency(coords, factors, prime_mask, backend=None):
    """Symmetric loop-free POE adjacency from element coordinates.

    coords: (N, k) int64; factors: (k,) int64; prime_mask: bool array
    indexed by composed order (length > group exponent).
    """
    coords = np.ascontiguousarray(coords, dtype=np.int64)
    factors = np.ascontiguousarray(factors, dtype=np.int64)
    mask = np.ascontiguousarray(prime_mask, dtype=bool)
    chosen = backend or ACTIVE_BACKEND
    if chosen == "numba" and _HAVE_NUMBA:
        return _adjacency_numba(coords, factors, mask)
    return _adjacency_numpy(coords, factors, mask)


# ---------------------------------------------------------------------------
# characteristic polynomial of an integer matrix modulo a word-size prime
# ---------------------------------------------------------------------------


def _charpoly_mod_numpy(a, p):
    h = a.astype(np.int64) % p
    n = h.shape[0]
    # similarity reduction to upper Hessenberg form over GF(p)
    for j in range(n - 2):
        col = h[j + 1 :, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[j + 1, piv], :] = h[[piv, j + 1], :]
            h[:, [j + 1, piv]] = h[:, [piv, j + 1]]
        inv = pow(int(h[j + 1, j]), -1, p)
        mult = (h[j + 2 :, j] * inv) % p
        h[j + 2 :, :] = (h[j + 2 :, :] - mult[:, None] * h[j + 1, :]) % p
        h[:, j + 1] = (h[:, j + 1] + h[:, j + 2 :] @ mult) % p
    # char polys of leading principal minors by last-column expansion
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        pk = np.zeros(n + 1, dtype=np.int64)
        pk[1 : k + 1] = polys[k - 1, :k]
        pk = (pk - h[k - 1, k - 1] * polys[k - 1]) % p
        if k >= 2:
            weights = np.zeros(k - 1, dtype=np.int64)
            prod = 1
            for m in range(k - 1, 0, -1):
                prod = prod * int(h[m, m - 1]) % p
                weights[m - 1] = h[m - 1, k - 1] * prod % p
            pk = (pk - weights @ polys[: k - 1]) % p
        polys[k] = pk
    return polys[n] % p


if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _charpoly_mod_numba(a, p):  # pragma: no cover - jit
        n = a.shape[0]
        h = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                h[i, j] = a[i, j] % p
        for j in range(n - 2):
            piv = -1
            for i in range(j + 1, n):
                if h[i, j] != 0:
                    piv = i
                    break
            if piv == -1:
                continue
            if piv != j + 1:
                for c in range(n):
                    tmp = h[j + 1, c]
                    h[j + 1, c] = h[piv, c]
                    h[piv, c] = tmp
                for r in range(n):
                    tmp = h[r, j + 1]
                    h[r, j + 1] = h[r, piv]
                    h[r, piv] = tmp
            # modular inverse of the pivot by Fermat (p prime)
            inv = 1
            base = h[j + 1, j] % p
            e = p - 2
            while e:
                if e & 1:
                    inv = inv * base % p
                base = base * base % p
                e >>= 1
            for i in range(j + 2, n):
                if h[i, j] != 0:
                    f = h[i, j] * inv % p
                    for c in range(n):
                        h[i, c] = (h[i, c] - f * h[j + 1, c]) % p
                    for r in range(n):
                        h[r, j + 1] = (h[r, j + 1] + f * h[r, i]) % p
        polys = np.zeros((n + 1, n + 1), dtype=np.int64)
        polys[0, 0] = 1
        for k in range(1, n + 1):
            for c in range(k):
                polys[k, c + 1] = polys[k - 1, c]
            d = h[k - 1, k - 1] % p
            for c in range(k):
                polys[k, c] = (polys[k, c] - d * polys[k - 1, c]) % p
            prod = 1
            for m in range(k - 1, 0, -1):
                prod = prod * h[m, m - 1] % p
                w = h[m - 1, k - 1] * prod % p
                if w:
                    for c in range(m):
                        polys[k, c] = (polys[k, c] - w * polys[m - 1, c]) % p
        out = np.empty(n + 1, dtype=np.int64)
        for c in range(n + 1):
            out[c] = polys[n, c] % p
        return out


def charpoly_mod(a, p, backend=None):
    """Coefficients of det(xI - a) over GF(p), ascending, length n + 1."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    chosen = backend or ACTIVE_BACKEND
    if chosen == "numba" and _HAVE_NUMBA:
        return _charpoly_mod_numba(a, np.int64(p))
    return _charpoly_mod_numpy(a, int(p))


def warm_up():
    """Trigger JIT compilation of the numba kernels on tiny inputs."""
    coords = np.array([[0], [1], [2]], dtype=np.int64)
    factors = np.array([3], dtype=np.int64)
    mask = np.array([False, False, True, True], dtype=bool)
    build_adjacency(coords, factors, mask)
    charpoly_mod(np.array([[0, 1], [1, 0]], dtype=np.int64), 97)
