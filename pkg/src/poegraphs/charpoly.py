"""Exact integer characteristic polynomials of integer matrices.

Coefficients are reconstructed from char polys computed modulo a set of
25-bit primes whose product provably exceeds twice the largest possible
coefficient (binomial times Hadamard bound on principal minors), so the
result is an exact integer identity, with no floating point and no
rational blowup.  Sign convention: det(A - lambda*I).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import intpoly
from ._kernels import charpoly_mod
from .errors import InputError, ResourceLimitError
from .primes import is_prime

DEFAULT_DIMENSION_CAP = 512

_PRIME_POOL: list[int] = []
_PRIME_BITS = 25


def _crt_primes(count: int) -> list[int]:
    while len(_PRIME_POOL) < count:
        candidate = (_PRIME_POOL[-1] if _PRIME_POOL else (1 << _PRIME_BITS)) - 1
        while not is_prime(candidate):
            candidate -= 1
        _PRIME_POOL.append(candidate)
    return _PRIME_POOL[:count]


def _coefficient_bits(n: int, amax: int) -> float:
    """log2 bound on |coefficients| of det(xI - A) for |entries| <= amax."""
    if n == 0:
        return 1.0
    a = max(amax, 1)
    best = 1.0
    for j in range(1, n + 1):
        bits = (
            math.log2(math.comb(n, j))
            + j * (0.5 * math.log2(j) + math.log2(a))
        )
        best = max(best, bits)
    return best


@dataclass(frozen=True)
class CharPolyExact:
    """det(A - lambda*I) as ascending integer coefficients.

    ``root_bound`` is a bound on |roots| inherited from the source matrix
    (Gershgorin row sums); it keeps integer-root candidate sets small.
    """

    coefficients: tuple[int, ...]
    root_bound: int | None = field(default=None, compare=False)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def monic(self) -> list[int]:
        """Ascending coefficients of det(lambda*I - A), which is monic."""
        coeffs = list(self.coefficients)
        if self.degree % 2 == 1:
            coeffs = [-c for c in coeffs]
        return coeffs

    def evaluate(self, x: int) -> int:
        return intpoly.evaluate(list(self.coefficients), x)

    def constant_term(self) -> int:
        """Value at 0, i.e. det(A)."""
        return self.coefficients[0]


def char_poly(matrix, dimension_cap: int = DEFAULT_DIMENSION_CAP, backend=None) -> CharPolyExact:
    """Exact characteristic polynomial det(A - lambda*I) of a square integer matrix."""
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"matrix must be square, got shape {a.shape}")
    if not np.issubdtype(a.dtype, np.integer) and not np.issubdtype(a.dtype, np.bool_):
        raise InputError("matrix entries must be integers")
    n = int(a.shape[0])
    if n > dimension_cap:
        raise ResourceLimitError(
            f"dimension {n} exceeds the characteristic-polynomial cap {dimension_cap}"
        )
    a = a.astype(np.int64)
    if n == 0:
        return CharPolyExact((1,))
    amax = int(np.abs(a).max())
    bits = _coefficient_bits(n, amax) + 2
    primes = _crt_primes(max(1, math.ceil(bits / (_PRIME_BITS - 1))))
    residues = [charpoly_mod(a, p, backend=backend) for p in primes]

    coeffs = []
    for idx in range(n + 1):
        x = 0
        modulus = 1
        for res, p in zip(residues, primes):
            r = int(res[idx])
            t = (r - x) % p * pow(modulus % p, -1, p) % p
            x += modulus * t
            modulus *= p
        if x > modulus // 2:
            x -= modulus
        coeffs.append(x)
    # modular kernel returns det(xI - A); flip sign for odd dimension
    if n % 2 == 1:
        coeffs = [-c for c in coeffs]
    bound = int(np.abs(a).sum(axis=1).max()) if n else 0
    return CharPolyExact(tuple(coeffs), root_bound=bound)
