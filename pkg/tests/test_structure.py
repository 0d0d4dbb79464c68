import pytest

from poegraphs.graph import build_poe_graph
from poegraphs.groups import GroupSpec
from poegraphs.structure import connected_components, distance

from .oracles import naive_adjacent


@pytest.fixture(scope="module")
def z25():
    return build_poe_graph(GroupSpec([25]))


def test_components_z25(z25):
    comps = connected_components(z25)
    assert sorted(c.size for c in comps) == [5, 10, 10]


def test_components_z8():
    comps = connected_components(build_poe_graph(GroupSpec([8])))
    assert len(comps) == 5
    assert sorted(c.size for c in comps) == [1, 1, 2, 2, 2]


def test_components_z7_connected():
    comps = connected_components(build_poe_graph(GroupSpec([7])))
    assert len(comps) == 1


def test_component_order_determinism(z25):
    comps = connected_components(z25)
    starts = [int(c.vertices[0]) for c in comps]
    assert starts == sorted(starts)


def test_bipartite_component_of_z9():
    comps = connected_components(build_poe_graph(GroupSpec([9])))
    six = next(c for c in comps if c.size == 6)
    assert six.is_bipartite
    part = six.bipartition
    assert len(part[0]) == 3 and len(part[1]) == 3


def test_z5_not_bipartite_has_triangle():
    g = GroupSpec([5])
    # independent confirmation that {0, 1, 2} is a triangle
    assert naive_adjacent(g, (0,), (1,))
    assert naive_adjacent(g, (0,), (2,))
    assert naive_adjacent(g, (1,), (2,))
    (comp,) = connected_components(build_poe_graph(g))
    assert comp.has_triangle
    assert comp.bipartition is None


def test_k2_bipartite():
    comps = connected_components(build_poe_graph(GroupSpec([4])))
    k2 = next(c for c in comps if c.size == 2)
    assert k2.is_bipartite
    isolated = [c for c in comps if c.size == 1]
    assert all(not c.has_triangle for c in isolated)


def test_triangle_free_components_z27():
    comps = connected_components(build_poe_graph(GroupSpec([27])))
    for comp in comps:
        if not comp.contains_identity():
            assert not comp.has_triangle


def test_distances_z25(z25):
    assert distance(z25, 5, 20) == 2  # order-5 element to its inverse via identity
    assert distance(z25, 2, 23) == 3
    assert distance(z25, 7, 7) == 0
    assert distance(z25, 0, 1) is None  # different components


def test_component_regularity_and_profile(z25):
    comps = connected_components(z25)
    for comp in comps:
        if comp.contains_identity():
            assert comp.regularity is None  # degrees 4 and 3 mix
        else:
            assert comp.regularity == 4
            assert set(comp.order_profile) == {25}
            assert comp.order_profile[25] == 10


def test_degrees_and_edges_consistent(z25):
    comps = connected_components(z25)
    assert sum(c.n_edges for c in comps) == z25.n_edges()
