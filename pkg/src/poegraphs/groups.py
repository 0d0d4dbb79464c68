"""Finite Abelian groups as direct products of cyclic groups.

Elements are reduced residue tuples, one coordinate per cyclic factor.
All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import reduce
from itertools import product

import numpy as np

from .errors import InputError, ResourceLimitError
from .primes import factorize, is_prime

DEFAULT_MAX_ORDER = 100_000

Element = tuple[int, ...]


def configured_max_order() -> int:
    """Desk-scale order cap; the POE_MAX_ORDER env var overrides the default."""
    raw = os.environ.get("POE_MAX_ORDER", "")
    if raw.strip():
        try:
            value = int(raw)
        except ValueError as exc:
            raise InputError(f"POE_MAX_ORDER is not an integer: {raw!r}") from exc
        if value < 2:
            raise InputError(f"POE_MAX_ORDER must be >= 2, got {value}")
        return value
    return DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class PrimePowerDecomposition:
    """CRT decomposition of a group: (prime, exponent, source factor index) parts."""

    parts: tuple[tuple[int, int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({p for p, _, _ in self.parts}))

    def exponent_of(self, prime: int) -> int:
        return max((e for p, e, _ in self.parts if p == prime), default=0)

    def total_order(self) -> int:
        n = 1
        for p, e, _ in self.parts:
            n *= p**e
        return n


@dataclass(frozen=True)
class GroupSpec:
    """An ordered direct product of cyclic groups Z(n_1) x ... x Z(n_k)."""

    factors: tuple[int, ...]
    max_order: int = field(default=-1, compare=False)

    def __init__(self, factors, max_order: int | None = None):
        factors = tuple(int(n) for n in factors)
        if not factors:
            raise InputError("a group needs at least one cyclic factor")
        for n in factors:
            if n < 2:
                raise InputError(f"cyclic factor must be >= 2, got {n}")
        cap = configured_max_order() if max_order is None else int(max_order)
        total = math.prod(factors)
        if total > cap:
            raise ResourceLimitError(
                f"group order {total} exceeds the configured cap {cap}"
            )
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "max_order", cap)

    # -- basic structure ------------------------------------------------

    @property
    def total_order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.factors)

    def __str__(self) -> str:
        from .cli import render_group_spec  # cyclic import kept local

        return render_group_spec(self)

    # -- element arithmetic ---------------------------------------------

    def identity(self) -> Element:
        return (0,) * self.rank

    def check_element(self, x: Element) -> None:
        if len(x) != self.rank:
            raise InputError(
                f"element has {len(x)} coordinates, group has {self.rank} factors"
            )
        for xi, n in zip(x, self.factors):
            if not 0 <= xi < n:
                raise InputError(f"coordinate {xi} not reduced modulo {n}")

    def compose(self, x: Element, y: Element) -> Element:
        if len(x) != self.rank or len(y) != self.rank:
            raise InputError("element arity does not match the group")
        return tuple((a + b) % n for a, b, n in zip(x, y, self.factors))

    def inverse(self, x: Element) -> Element:
        return tuple((-a) % n for a, n in zip(x, self.factors))

    def scalar_multiple(self, m: int, x: Element) -> Element:
        return tuple((m * a) % n for a, n in zip(x, self.factors))

    def element_order(self, x: Element) -> int:
        o = 1
        for a, n in zip(x, self.factors):
            o = math.lcm(o, n // math.gcd(n, a))
        return o

    # -- enumeration ------------------------------------------------------

    def enumerate_elements(self) -> list[Element]:
        """All elements in mixed-radix order (first coordinate slowest)."""
        return list(product(*(range(n) for n in self.factors)))

    def element_index(self, x: Element) -> int:
        """Position of x in enumerate_elements order."""
        idx = 0
        for a, n in zip(x, self.factors):
            idx = idx * n + a
        return idx

    def element_at(self, idx: int) -> Element:
        coords = []
        for n in reversed(self.factors):
            idx, r = divmod(idx, n)
            coords.append(r)
        return tuple(reversed(coords))

    def coordinate_array(self) -> np.ndarray:
        """(N, k) int64 array of all elements in enumeration order."""
        n = self.total_order
        cols = []
        inner = 1
        for nf in reversed(self.factors):
            cols.append((np.arange(n, dtype=np.int64) // inner) % nf)
            inner *= nf
        return np.stack(list(reversed(cols)), axis=1)

    def order_array(self) -> np.ndarray:
        """Element order per enumeration index, vectorized."""
        coords = self.coordinate_array()
        orders = np.ones(self.total_order, dtype=np.int64)
        for t, n in enumerate(self.factors):
            table = n // np.gcd(np.arange(n, dtype=np.int64), n)
            o_t = table[coords[:, t]]
            orders = orders // np.gcd(orders, o_t) * o_t
        return orders

    def inverse_paired_ordering(self) -> list[Element]:
        """Identity first, then self-inverse elements, then nested inverse pairs.

        Non-self-inverse elements occupy a contiguous zone laid out as
        x_1, ..., x_m, x_m^-1, ..., x_1^-1 so that mirrored positions hold
        mutual inverses.
        """
        firsts: list[Element] = []
        self_inverse: list[Element] = []
        seen: set[Element] = set()
        e = self.identity()
        for x in self.enumerate_elements():
            if x == e or x in seen:
                continue
            inv = self.inverse(x)
            if inv == x:
                self_inverse.append(x)
            else:
                firsts.append(x)
                seen.add(inv)
        return [e] + self_inverse + firsts + [self.inverse(x) for x in reversed(firsts)]

    def count_elements_of_order(self, m: int) -> int:
        """Exact count of elements of order m, by brute force."""
        if m < 1:
            raise InputError(f"order must be positive, got {m}")
        return int(np.count_nonzero(self.order_array() == m))

    # -- CRT ---------------------------------------------------------------

    def primary_decomposition(self) -> PrimePowerDecomposition:
        parts = []
        for idx, n in enumerate(self.factors):
            for p, e in factorize(n):
                parts.append((p, e, idx))
        return PrimePowerDecomposition(tuple(parts))

    def decomposed(self) -> "GroupSpec":
        """Isomorphic group with one prime-power cyclic factor per part."""
        parts = self.primary_decomposition().parts
        return GroupSpec(tuple(p**e for p, e, _ in parts), max_order=self.max_order)

    def crt_map(self, x: Element) -> Element:
        """Isomorphism onto decomposed(): residues of each coordinate."""
        self.check_element(x)
        out = []
        for xi, n in zip(x, self.factors):
            for p, e in factorize(n):
                out.append(xi % p**e)
        return tuple(out)

    def crt_inverse(self, y: Element) -> Element:
        """Inverse of crt_map, by Chinese remaindering per source factor."""
        parts = self.primary_decomposition().parts
        if len(y) != len(parts):
            raise InputError("element arity does not match the decomposition")
        coords = []
        pos = 0
        for idx, n in enumerate(self.factors):
            residues = []
            moduli = []
            while pos < len(parts) and parts[pos][2] == idx:
                p, e, _ = parts[pos]
                moduli.append(p**e)
                residues.append(y[pos])
                pos += 1
            x = 0
            for r, m in zip(residues, moduli):
                rest = n // m
                x = (x + r * rest * pow(rest, -1, m)) % n
            coords.append(x)
        return tuple(coords)


def is_prime_order(m: int) -> bool:
    """Predicate underlying every POE edge: is the composed order prime?"""
    return is_prime(m)


def lcm_order_rule_applies(order_x: int, order_y: int) -> bool:
    """Sufficient condition for o(xy) = lcm(o(x), o(y)) in an Abelian group.

    Holds whenever every prime appears with different multiplicity in the
    two orders; with equal multiplicities the composed order may drop.
    """
    # primes dividing only one of the orders always have differing
    # multiplicities, so only common primes need the check
    for p, e in factorize(order_x):
        f = 0
        m = order_y
        while m % p == 0:
            m //= p
            f += 1
        if f == e:
            return False
    return True
