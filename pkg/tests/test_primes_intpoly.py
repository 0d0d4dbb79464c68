import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poegraphs import intpoly
from poegraphs.errors import InputError
from poegraphs.primes import (
    divisors,
    factorize,
    is_prime,
    perfect_power,
    prime_flags,
    small_divisors,
)


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(91)  # 7 * 13
    assert [m for m in range(2, 30) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_prime_flags_agrees_with_is_prime():
    flags = prime_flags(500)
    for m in range(501):
        assert bool(flags[m]) == is_prime(m)


def test_factorize():
    assert factorize(45) == [(3, 2), (5, 1)]
    assert factorize(64) == [(2, 6)]
    assert factorize(97) == [(97, 1)]
    with pytest.raises(ValueError):
        factorize(0)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert small_divisors(12, 4) == [1, 2, 3, 4]
    assert small_divisors(10**40, 10) == [1, 2, 4, 5, 8, 10]


def test_perfect_power():
    assert perfect_power(8) == (2, 3)
    assert perfect_power(9) == (3, 2)
    assert perfect_power(6) == (6, 1)
    assert perfect_power(64) == (2, 6)
    assert perfect_power(36) == (6, 2)


def test_poly_basic():
    # (x - 1)(x + 1) = x^2 - 1
    assert intpoly.mul([-1, 1], [1, 1]) == [-1, 0, 1]
    assert intpoly.evaluate([-1, 0, 1], 3) == 8
    assert intpoly.degree([0, 0, 0]) == -1


def test_poly_division_exact():
    q, r = intpoly.divmod_exact([-1, 0, 1], [1, 1])
    assert q == [-1, 1] and r == []
    q, r = intpoly.divmod_exact([1, 0, 1], [1, 1])
    assert r != []


def test_multiplicity():
    p = intpoly.mul(intpoly.mul([-1, 1], [-1, 1]), [5, 1])
    assert intpoly.multiplicity(p, [-1, 1]) == 2
    assert intpoly.multiplicity(p, [5, 1]) == 1
    assert intpoly.multiplicity(p, [7, 1]) == 0
    with pytest.raises(InputError):
        intpoly.multiplicity(p, [1])  # unit factor rejected


def test_deflate_root():
    assert intpoly.deflate_root([-2, 1, 1], 1) == [2, 1]
    assert intpoly.deflate_root([-2, 1, 1], 3) is None


def test_monic_normalization():
    assert intpoly.monic([2, 0, -1]) == [-2, 0, 1]
    with pytest.raises(InputError):
        intpoly.monic([1, 2])


def test_format_poly():
    assert intpoly.format_poly([-4, -2, 1]) == "x^2 - 2*x - 4"
    assert intpoly.format_poly([]) == "0"


@st.composite
def polys(draw, max_degree=6):
    coeffs = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=max_degree + 1))
    return intpoly.normalize(coeffs)


@given(polys(), polys())
@settings(max_examples=100, deadline=None)
def test_product_division_roundtrip(a, b):
    if not a or len(b) < 2:
        return
    # force b monic so exact division applies
    b = b[:-1] + [1]
    prod = intpoly.mul(a, b)
    q, r = intpoly.divmod_exact(prod, b)
    assert r == []
    assert q == intpoly.normalize(a)
