import pytest

from poegraphs import intpoly
from poegraphs.errors import InputError
from poegraphs.graph import build_poe_graph
from poegraphs.groups import GroupSpec
from poegraphs.partitions import (
    Partition,
    coarsest_equitable_partition,
    quotient_divides,
    verify_equitable,
)
from poegraphs.spectral import equitable_quotient_table, four_cell_partition
from poegraphs.structure import connected_components


def test_regular_component_single_cell():
    graph = build_poe_graph(GroupSpec([25]))
    comp = next(c for c in connected_components(graph) if not c.contains_identity())
    part = coarsest_equitable_partition(comp.induced_adjacency)
    assert part.n_cells == 1


def test_coarsest_z4():
    part = coarsest_equitable_partition(build_poe_graph(GroupSpec([4])))
    assert part.cells == ((0, 2), (1, 3))


def test_coarsest_z6_refines_degree_classes():
    graph = build_poe_graph(GroupSpec([6]))
    assert graph.degrees().tolist() == [3, 2, 2, 3, 2, 2]  # brute-force oracle values
    part = coarsest_equitable_partition(graph)
    cell_of = part.cell_of
    # vertices 0 and 3 (degree 3) never share a cell with the degree-2 ones
    assert cell_of[0] != cell_of[1]
    assert {cell_of[1], cell_of[2], cell_of[4], cell_of[5]} != {cell_of[0], cell_of[3]}


def test_coarsest_is_equitable_everywhere():
    for factors in ([6], [9], [12], [2, 8], [45]):
        graph = build_poe_graph(GroupSpec(factors))
        part = coarsest_equitable_partition(graph)
        assert verify_equitable(graph, part).is_equitable


def test_theorem_partition_quotients():
    for p2 in (3, 5, 7, 11, 13):
        g = GroupSpec([2 * p2])
        graph = build_poe_graph(g)
        part = four_cell_partition(g, graph)
        check = verify_equitable(graph, part)
        assert check.is_equitable
        assert (check.quotient == equitable_quotient_table(p2)).all()


def test_discrete_partition_equitable():
    graph = build_poe_graph(GroupSpec([6]))
    part = Partition.discrete(6)
    check = verify_equitable(graph, part)
    assert check.is_equitable
    assert (check.quotient == graph.adjacency_matrix()).all()


def test_non_equitable_witness():
    graph = build_poe_graph(GroupSpec([6]))
    part = Partition.from_cells([[0, 1], [2, 3, 4, 5]], 6)
    check = verify_equitable(graph, part)
    assert not check.is_equitable
    vertex, cell = check.witness
    assert vertex in (0, 1) and cell in (0, 1)


def test_partition_validation():
    with pytest.raises(InputError):
        Partition.from_cells([[0, 1], [1, 2]], 3)
    with pytest.raises(InputError):
        Partition.from_cells([[0]], 2)
    with pytest.raises(InputError):
        Partition.from_cells([[0], []], 1)


def test_quotient_divides_z6_theorem_partition():
    g = GroupSpec([6])
    graph = build_poe_graph(g)
    part = four_cell_partition(g, graph)
    ok, graph_poly, quot_poly = quotient_divides(graph, part)
    assert ok
    expected = intpoly.mul([-1, -2, 1], [-1, 2, 1])  # (x^2-2x-1)(x^2+2x-1)
    assert quot_poly == intpoly.normalize(expected)


def test_quotient_divides_z10():
    g = GroupSpec([10])
    graph = build_poe_graph(g)
    part = four_cell_partition(g, graph)
    ok, _, quot_poly = quotient_divides(graph, part)
    assert ok
    expected = intpoly.mul([-1, -4, 1], [-5, 0, 1])  # (x^2-4x-1)(x^2-5)
    assert quot_poly == intpoly.normalize(expected)


def test_quotient_divides_discrete_partition():
    graph = build_poe_graph(GroupSpec([4]))
    ok, graph_poly, quot_poly = quotient_divides(graph, Partition.discrete(4))
    assert ok and graph_poly == quot_poly


def test_quotient_divides_rejects_non_equitable():
    graph = build_poe_graph(GroupSpec([6]))
    with pytest.raises(InputError):
        quotient_divides(graph, Partition.from_cells([[0, 1], [2, 3, 4, 5]], 6))


def test_quotient_divides_on_coarsest_everywhere():
    for factors in ([6], [10], [9], [2, 8], [45], [3, 3]):
        graph = build_poe_graph(GroupSpec(factors))
        part = coarsest_equitable_partition(graph)
        ok, _, _ = quotient_divides(graph, part)
        assert ok
