"""Classify a group into the structural families with known POE theorems."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import GroupSpec

ELEMENTARY = "Zp_elementary"
ODD_PRIME_POWER = "Zpn"
TWO_POWER = "Z2n"
TWO_GROUP_PRODUCT = "Z2products"
EVEN_MIXED = "Z2OddPrimes"
ODD_MIXED = "OddPrimePowers"
UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class FamilyInfo:
    tag: str
    # prime -> exponent, one entry per part of the primary decomposition,
    # in decomposition order (may repeat primes for non-cyclic groups)
    parts: tuple[tuple[int, int], ...]

    @property
    def is_cyclic(self) -> bool:
        primes = [p for p, _ in self.parts]
        return len(primes) == len(set(primes))

    @property
    def prime(self) -> int:
        """The unique prime of a p-group family."""
        (p,) = {p for p, _ in self.parts}
        return p

    @property
    def exponent_sum(self) -> int:
        return sum(e for _, e in self.parts)

    def two_exponent(self) -> int:
        return next((e for p, e in self.parts if p == 2), 0)

    def odd_parts(self) -> list[tuple[int, int]]:
        return sorted((p, e) for p, e in self.parts if p != 2)

    def odd_primes(self) -> list[int]:
        return [p for p, _ in self.odd_parts()]


def classify(g: GroupSpec) -> FamilyInfo:
    parts = tuple((p, e) for p, e, _ in g.primary_decomposition().parts)
    primes = [p for p, _ in parts]
    distinct = sorted(set(primes))

    if len(distinct) == 1:
        p = distinct[0]
        if p == 2:
            if len(parts) == 1:
                n = parts[0][1]
                return FamilyInfo(TWO_POWER if n >= 2 else TWO_GROUP_PRODUCT, parts)
            return FamilyInfo(TWO_GROUP_PRODUCT, parts)
        if all(e == 1 for _, e in parts):
            return FamilyInfo(ELEMENTARY, parts)
        if len(parts) == 1:
            return FamilyInfo(ODD_PRIME_POWER, parts)
        return FamilyInfo(UNSUPPORTED, parts)

    if len(primes) != len(distinct):
        return FamilyInfo(UNSUPPORTED, parts)

    # cyclic group with at least two prime divisors
    if 2 in distinct:
        n1 = next(e for p, e in parts if p == 2)
        odd = [(p, e) for p, e in parts if p != 2]
        if n1 >= 2 or all(e == 1 for _, e in odd):
            return FamilyInfo(EVEN_MIXED, parts)
        return FamilyInfo(UNSUPPORTED, parts)
    return FamilyInfo(ODD_MIXED, parts)
