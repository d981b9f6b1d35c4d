import pytest

from starurd.blowup import (
    WeightedCycle,
    WeightedOneFactor,
    cycle_edge,
    cycle_edges,
    difference_edges,
    edge_difference,
    j_edges,
    nonaligned_edges,
    one_factor_edges,
)
from starurd.model import Edge, Vertex


def test_cycle_edge_basic():
    c = WeightedCycle((0, 1, 2), 4)
    assert cycle_edge(c, 0, 0, 1) == Edge(Vertex(0, 0), Vertex(1, 1))


def test_cycle_edge_arbitrary_base_order_with_wrap():
    c = WeightedCycle((0, 2, 4, 1, 3), 4)
    # level wraps: (3 + 2) mod 4 = 1
    assert cycle_edge(c, 1, 3, 2) == Edge(Vertex(2, 3), Vertex(4, 1))


def test_cycle_edge_position_wrap():
    c = WeightedCycle((0, 1, 2), 4)
    assert cycle_edge(c, 2, 1, 1) == Edge(Vertex(2, 1), Vertex(0, 2))


def test_cycle_edge_rejects_out_of_range():
    c = WeightedCycle((0, 1, 2), 4)
    with pytest.raises(ValueError):
        cycle_edge(c, 3, 0, 0)
    with pytest.raises(ValueError):
        cycle_edge(c, 0, 4, 0)
    with pytest.raises(ValueError):
        cycle_edge(c, 0, 0, 4)


def test_j_edges_cycle():
    c = WeightedCycle((0, 1, 2), 4)
    js = j_edges(c)
    assert len(js) == 12
    assert js == {
        Edge(Vertex(c.base[p], i), Vertex(c.base[(p + 1) % 3], i))
        for p in range(3)
        for i in range(4)
    }


def test_j_edges_weighted_one_factor():
    w = WeightedOneFactor(((0, 1), (2, 3)), 4)
    js = j_edges(w)
    assert len(js) == 8
    assert js == {
        Edge(Vertex(x, i), Vertex(y, i)) for x, y in ((0, 1), (2, 3)) for i in range(4)
    }


def test_j_edges_weight_two():
    c = WeightedCycle((0, 1, 2), 2)
    assert len(j_edges(c)) == 6


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7])
@pytest.mark.parametrize("w", [4, 6, 8])
def test_difference_classes_partition(m, w):
    c = WeightedCycle(tuple(range(m)), w)
    every = cycle_edges(c)
    assert len(every) == m * w * w
    seen = set()
    for d in range(w):
        part = difference_edges(c, d)
        assert len(part) == m * w
        assert seen.isdisjoint(part)
        seen |= part
    assert seen == every
    assert j_edges(c) == difference_edges(c, 0)
    assert nonaligned_edges(c) == every - difference_edges(c, 0)


@pytest.mark.parametrize("base", [(0, 1, 2, 3, 4), (0, 2, 4, 1, 3), (4, 0, 1, 3, 2)])
def test_edge_difference_round_trip(base):
    c = WeightedCycle(base, 4)
    for p in range(c.m):
        for i in range(4):
            for d in range(4):
                assert edge_difference(c, cycle_edge(c, p, i, d)) == d


def test_edge_difference_rejects_non_cycle_edge():
    c = WeightedCycle((0, 1, 2, 3), 4)
    with pytest.raises(ValueError):
        edge_difference(c, Edge(Vertex(0, 0), Vertex(2, 0)))  # chord, not cycle edge
    with pytest.raises(ValueError):
        edge_difference(c, Edge(Vertex(0, 0), Vertex(7, 0)))


def test_weighted_one_factor_edges_and_host():
    w = WeightedOneFactor(((0, 1), (2, 3)), 4)
    assert len(one_factor_edges(w)) == 2 * 16
    assert len(nonaligned_edges(w)) == 2 * 16 - 8


def test_weighted_one_factor_rejects_overlap():
    with pytest.raises(ValueError):
        WeightedOneFactor(((0, 1), (1, 2)), 4)


def test_cycle_validation():
    with pytest.raises(ValueError):
        WeightedCycle((0, 1), 4)
    with pytest.raises(ValueError):
        WeightedCycle((0, 1, 1), 4)
    with pytest.raises(ValueError):
        WeightedCycle((0, 1, 2), 1)
