"""Exact integer polynomial arithmetic.

A polynomial is a list of Python ints in ascending order of degree, e.g.
``[-1, 0, 1]`` is ``x**2 - 1``.  The zero polynomial is ``[]`` after
normalization.  All arithmetic is exact over arbitrary-precision ints.
"""

from __future__ import annotations

from .errors import InputError


def normalize(p: list[int]) -> list[int]:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def degree(p: list[int]) -> int:
    """Degree of a nonzero polynomial; -1 for the zero polynomial."""
    return len(normalize(p)) - 1


def add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def neg(a: list[int]) -> list[int]:
    return [-c for c in a]


def sub(a: list[int], b: list[int]) -> list[int]:
    return add(a, neg(b))


def mul(a: list[int], b: list[int]) -> list[int]:
    a = normalize(a)
    b = normalize(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def scale(a: list[int], k: int) -> list[int]:
    return normalize([c * k for c in a])


def pow_(a: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = mul(out, a)
    return out


def evaluate(p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_exact(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Polynomial division of a by b over the integers.

    Requires the leading coefficient of b to be +-1 so every quotient
    coefficient stays integral.  Returns (quotient, remainder).
    """
    a = normalize(a)
    b = normalize(b)
    if not b:
        raise InputError("division by the zero polynomial")
    lead = b[-1]
    if lead not in (1, -1):
        raise InputError("divisor must have leading coefficient +-1")
    if degree(b) < 1:
        raise InputError("divisor must have degree >= 1")
    rem = list(a)
    if len(rem) < len(b):
        return [], normalize(rem)
    q = [0] * (len(rem) - len(b) + 1)
    for shift in range(len(rem) - len(b), -1, -1):
        coeff = rem[shift + len(b) - 1] * lead  # lead is +-1, so this divides
        if coeff:
            q[shift] = coeff
            for i, c in enumerate(b):
                rem[shift + i] -= coeff * c
    return normalize(q), normalize(rem)


def divides_exactly(a: list[int], b: list[int]) -> bool:
    """True iff b divides a with zero remainder."""
    _, rem = divmod_exact(a, b)
    return not rem


def multiplicity(a: list[int], factor: list[int]) -> int:
    """Largest e with factor**e dividing a exactly.

    The factor must be a non-unit polynomial with leading coefficient +-1;
    constants are rejected since every power of a unit divides everything.
    """
    factor = normalize(factor)
    if degree(factor) < 1:
        raise InputError("factor must have degree >= 1")
    a = normalize(a)
    if not a:
        raise InputError("multiplicity in the zero polynomial is undefined")
    e = 0
    while True:
        q, rem = divmod_exact(a, factor)
        if rem or not q:
            return e
        e += 1
        a = q


def deflate_root(p: list[int], r: int) -> list[int] | None:
    """Divide p by (x - r) if r is a root; None otherwise (synthetic division)."""
    p = normalize(p)
    if not p:
        return None
    out = [0] * (len(p) - 1)
    acc = 0
    for i in range(len(p) - 1, 0, -1):
        acc = acc * r + p[i]
        out[i - 1] = acc
    if acc * r + p[0] != 0:
        return None
    return normalize(out)


def monic(p: list[int]) -> list[int]:
    """Normalize sign so the leading coefficient is +1 (requires it to be +-1)."""
    p = normalize(p)
    if not p:
        return p
    if p[-1] == 1:
        return p
    if p[-1] == -1:
        return neg(p)
    raise InputError("polynomial is not monic up to sign")


def format_poly(p: list[int], var: str = "x") -> str:
    p = normalize(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)
