import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poegraphs.errors import InputError, ResourceLimitError
from poegraphs.groups import GroupSpec, lcm_order_rule_applies

from .oracles import naive_order


def test_identity_examples():
    assert GroupSpec([9]).identity() == (0,)
    assert GroupSpec([2, 8]).identity() == (0, 0)
    assert GroupSpec([3, 3]).identity() == (0, 0)


def test_compose_examples():
    assert GroupSpec([9]).compose((4,), (8,)) == (3,)
    assert GroupSpec([2, 8]).compose((1, 7), (1, 1)) == (0, 0)
    assert GroupSpec([5]).compose((1,), (2,)) == (3,)


def test_compose_dimension_mismatch():
    with pytest.raises(InputError):
        GroupSpec([2, 8]).compose((1,), (1, 1))


def test_inverse_examples():
    g = GroupSpec([9])
    assert g.inverse((1,)) == (8,)
    assert GroupSpec([2, 8]).inverse((1, 3)) == (1, 5)
    g2 = GroupSpec([4, 6])
    assert g2.inverse(g2.identity()) == g2.identity()


def test_element_order_examples():
    assert GroupSpec([9]).element_order((3,)) == 3
    assert GroupSpec([2, 8]).element_order((1, 2)) == 4
    assert GroupSpec([25]).element_order((10,)) == 5


def test_enumerate_elements():
    assert GroupSpec([4]).enumerate_elements() == [(0,), (1,), (2,), (3,)]
    assert GroupSpec([2, 2]).enumerate_elements() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(GroupSpec([3, 3]).enumerate_elements()) == 9


def test_group_construction_errors():
    with pytest.raises(InputError):
        GroupSpec([1, 4])
    with pytest.raises(ResourceLimitError):
        GroupSpec([100_001])
    GroupSpec([100_001], max_order=200_000)  # override allows it


def _pairing_predicate_holds(g):
    """Identity first, self-inverses next, then a zone of mirrored inverse pairs."""
    ordering = g.inverse_paired_ordering()
    assert sorted(ordering) == sorted(g.enumerate_elements())
    assert ordering[0] == g.identity()
    self_inv = [x for x in ordering if x == g.inverse(x) and x != g.identity()]
    z0 = 1 + len(self_inv)
    assert ordering[1:z0] == self_inv
    zone = ordering[z0:]
    m = len(zone)
    for i, x in enumerate(zone):
        assert zone[m - 1 - i] == g.inverse(x)
    return True


def test_inverse_paired_ordering_examples():
    assert GroupSpec([5]).inverse_paired_ordering() == [(0,), (1,), (2,), (3,), (4,)]
    assert GroupSpec([3]).inverse_paired_ordering() == [(0,), (1,), (2,)]
    assert GroupSpec([4]).inverse_paired_ordering() == [(0,), (2,), (1,), (3,)]


@pytest.mark.parametrize("factors", [[5], [3], [4], [9], [2, 8], [3, 3], [12], [2, 2, 2]])
def test_inverse_paired_ordering_predicate(factors):
    assert _pairing_predicate_holds(GroupSpec(factors))


def test_count_elements_of_order():
    assert GroupSpec([2, 4, 4]).count_elements_of_order(4) == 24  # 2^5 - 2^3
    assert GroupSpec([9]).count_elements_of_order(3) == 2
    assert GroupSpec([2, 8]).count_elements_of_order(8) == 8  # 2^4 - 2^3


def test_count_sums_to_order():
    for factors in ([12], [2, 8], [3, 3], [45]):
        g = GroupSpec(factors)
        total = sum(
            g.count_elements_of_order(d)
            for d in range(1, g.total_order + 1)
            if g.total_order % d == 0
        )
        assert total == g.total_order


def test_order_array_matches_naive():
    for factors in ([12], [2, 8], [3, 3]):
        g = GroupSpec(factors)
        orders = g.order_array()
        for i, x in enumerate(g.enumerate_elements()):
            assert orders[i] == naive_order(g, x)


def test_lagrange():
    for factors in ([45], [2, 4, 4], [7]):
        g = GroupSpec(factors)
        for o in g.order_array():
            assert g.total_order % int(o) == 0


def test_primary_decomposition_examples():
    assert GroupSpec([45]).decomposed().factors == (9, 5)
    assert GroupSpec([7]).decomposed().factors == (7,)
    parts = GroupSpec([45]).primary_decomposition().parts
    assert parts == ((3, 2, 0), (5, 1, 0))


def test_crt_map_is_isomorphism():
    for factors in ([6], [45], [12, 5]):
        g = GroupSpec(factors)
        d = g.decomposed()
        elems = g.enumerate_elements()
        images = {g.crt_map(x) for x in elems}
        assert len(images) == g.total_order  # bijection
        for x in elems:
            assert g.crt_inverse(g.crt_map(x)) == x
            assert g.element_order(x) == d.element_order(g.crt_map(x))
        for x in elems[:20]:
            for y in elems[:20]:
                assert g.crt_map(g.compose(x, y)) == d.compose(g.crt_map(x), g.crt_map(y))


def test_crt_map_z6_example():
    g = GroupSpec([6])
    assert g.crt_map((5,)) == (1, 2)
    assert g.element_order((5,)) == 6


def test_lcm_order_rule_exhaustive():
    # the composed order equals the lcm whenever every prime divides the two
    # orders with different multiplicities
    specs = [[n] for n in range(2, 80)] + [[2, 8], [3, 3], [4, 6], [2, 2, 3], [9, 5], [8, 9]]
    for factors in specs:
        g = GroupSpec(factors)
        elems = g.enumerate_elements()
        orders = {x: g.element_order(x) for x in elems}
        for x in elems:
            for y in elems:
                ox, oy = orders[x], orders[y]
                if lcm_order_rule_applies(ox, oy):
                    assert g.element_order(g.compose(x, y)) == math.lcm(ox, oy)


@st.composite
def small_groups(draw):
    k = draw(st.integers(1, 3))
    factors = [draw(st.integers(2, 12)) for _ in range(k)]
    return GroupSpec(factors)


@given(small_groups(), st.data())
@settings(max_examples=60, deadline=None)
def test_compose_properties(g, data):
    elems = g.enumerate_elements()
    x = data.draw(st.sampled_from(elems))
    y = data.draw(st.sampled_from(elems))
    z = data.draw(st.sampled_from(elems))
    assert g.compose(x, y) == g.compose(y, x)
    assert g.compose(g.compose(x, y), z) == g.compose(x, g.compose(y, z))
    assert g.compose(x, g.identity()) == x
    assert g.compose(x, g.inverse(x)) == g.identity()
    assert g.element_order(x) == naive_order(g, x)


def test_element_order_counts_match_euler_phi():
    g = GroupSpec([49])
    counts = Counter(int(o) for o in g.order_array())
    assert counts == {1: 1, 7: 6, 49: 42}
