import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poegraphs import intpoly
from poegraphs.charpoly import char_poly
from poegraphs.errors import InputError, ResourceLimitError
from poegraphs.graph import build_poe_graph
from poegraphs.groups import GroupSpec

from .oracles import cofactor_charpoly


def test_k2():
    cp = char_poly(np.array([[0, 1], [1, 0]]))
    assert list(cp.coefficients) == [-1, 0, 1]  # x^2 - 1


def test_path3_matches_cofactor_oracle():
    m = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    cp = char_poly(np.array(m))
    assert list(cp.coefficients) == cofactor_charpoly(m)
    assert list(cp.coefficients) == [0, 2, 0, -1]  # -x^3 + 2x


def test_z5_factorization():
    graph = build_poe_graph(GroupSpec([5]))
    cp = char_poly(graph.adjacency_matrix())
    # -x^2 (x + 2)(x^2 - 2x - 4)
    expected = intpoly.mul(intpoly.mul([0, 0, 1], [2, 1]), [-4, -2, 1])
    expected = [-c for c in expected]
    assert list(cp.coefficients) == expected


def test_monic_and_constant_term():
    m = np.array([[1, 2], [3, 4]])
    cp = char_poly(m)
    assert cp.monic()[-1] == 1
    assert cp.constant_term() == 1 * 4 - 2 * 3  # det(A)
    assert cp.evaluate(0) == cp.constant_term()


def test_rejects_bad_input():
    with pytest.raises(InputError):
        char_poly(np.zeros((2, 3)))
    with pytest.raises(InputError):
        char_poly(np.array([[0.5]]))
    with pytest.raises(ResourceLimitError):
        char_poly(np.zeros((600, 600), dtype=np.int64))


def test_backends_agree_on_random_matrix():
    rng = np.random.default_rng(3)
    a = rng.integers(-4, 5, size=(40, 40))
    assert char_poly(a, backend="numba").coefficients == char_poly(a, backend="numpy").coefficients


@given(st.integers(1, 6), st.data())
@settings(max_examples=80, deadline=None)
def test_matches_cofactor_oracle(n, data):
    rows = data.draw(
        st.lists(
            st.lists(st.integers(-5, 5), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    cp = char_poly(np.array(rows, dtype=np.int64))
    assert list(cp.coefficients) == cofactor_charpoly(rows)


def test_large_symmetric_matches_numeric():
    rng = np.random.default_rng(11)
    a = rng.integers(0, 2, size=(60, 60), dtype=np.int64)
    a = np.triu(a, 1)
    a = a + a.T
    cp = char_poly(a)
    eigs = np.linalg.eigvalsh(a.astype(float))
    mono = cp.monic()
    # evaluate the exact monic polynomial near each numeric eigenvalue
    for lam in eigs:
        val = 0.0
        dval = 0.0
        for c in reversed(mono):
            dval = dval * lam + val
            val = val * lam + c
        # |p(lam)| should be tiny relative to p'(lam) for simple roots and
        # bounded by float residue scale in general
        scale = sum(abs(c) * max(1.0, abs(lam)) ** i for i, c in enumerate(mono))
        assert abs(val) <= 1e-8 * scale


def test_trailing_coefficient_is_determinant():
    rng = np.random.default_rng(5)
    for n in (3, 5, 8):
        a = rng.integers(-3, 4, size=(n, n))
        cp = char_poly(a)
        assert cp.constant_term() == round(float(np.linalg.det(a.astype(float))))
