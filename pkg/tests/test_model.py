import pytest

from starurd.model import (
    Decomposition,
    Edge,
    FactorClass,
    K2Block,
    ONE_FACTOR,
    Params,
    STAR_FACTOR,
    StarBlock,
    Vertex,
    all_vertices,
    block_vertices,
    edges_of_block,
    vertex_from_flat,
)


def test_edge_canonical_order():
    a, b = Vertex(1, 2), Vertex(0, 3)
    e = Edge(a, b)
    assert e.u == b and e.v == a
    assert Edge(a, b) == Edge(b, a)


def test_edge_loop_rejected():
    with pytest.raises(ValueError):
        Edge(Vertex(0, 0), Vertex(0, 0))


def test_vertex_flat_roundtrip():
    for base in range(5):
        for level in range(4):
            u = Vertex(base, level)
            assert vertex_from_flat(u.flat(4), 4) == u


def test_edges_of_k2_block():
    b = K2Block(Edge(Vertex(0, 0), Vertex(1, 1)))
    assert edges_of_block(b) == {Edge(Vertex(0, 0), Vertex(1, 1))}


def test_edges_of_star_block():
    # 3-star centered at (0,0) with leaves on the next base
    star = StarBlock(Vertex(0, 0), (Vertex(1, 1), Vertex(1, 2), Vertex(1, 3)))
    assert edges_of_block(star) == {
        Edge(Vertex(0, 0), Vertex(1, 1)),
        Edge(Vertex(0, 0), Vertex(1, 2)),
        Edge(Vertex(0, 0), Vertex(1, 3)),
    }


def test_star_duplicate_leaves_rejected():
    with pytest.raises(ValueError):
        StarBlock(Vertex(0, 0), (Vertex(1, 1), Vertex(1, 1), Vertex(1, 2)))


def test_star_center_among_leaves_rejected():
    with pytest.raises(ValueError):
        StarBlock(Vertex(0, 0), (Vertex(0, 0), Vertex(1, 1), Vertex(1, 2)))


def test_star_leaves_stored_sorted():
    star = StarBlock(Vertex(0, 0), (Vertex(1, 3), Vertex(1, 1), Vertex(1, 2)))
    assert star.leaves == (Vertex(1, 1), Vertex(1, 2), Vertex(1, 3))


def test_block_vertices():
    star = StarBlock(Vertex(0, 0), (Vertex(1, 1), Vertex(1, 2), Vertex(1, 3)))
    assert set(block_vertices(star)) == {
        Vertex(0, 0),
        Vertex(1, 1),
        Vertex(1, 2),
        Vertex(1, 3),
    }
    k2 = K2Block(Edge(Vertex(0, 0), Vertex(1, 1)))
    assert set(block_vertices(k2)) == {Vertex(0, 0), Vertex(1, 1)}


def test_params_validation():
    p = Params.for_order(12, 3)
    assert (p.v, p.n, p.m, p.weight) == (12, 3, 3, 4)
    with pytest.raises(ValueError):
        Params.for_order(13, 3)
    with pytest.raises(ValueError):
        Params.for_order(12, 4)
    with pytest.raises(ValueError):
        Params.for_order(12, 1)
    with pytest.raises(ValueError):
        Params(12, 3, 4)


def test_all_vertices_order():
    p = Params.for_order(8, 3)
    vs = all_vertices(p)
    assert len(vs) == 8
    assert vs == sorted(vs)
    assert vs[0] == Vertex(0, 0) and vs[-1] == Vertex(1, 3)


def test_factor_class_kind_checked():
    with pytest.raises(ValueError):
        FactorClass("matching", ())


def test_decomposition_from_classes_counts():
    p = Params.for_order(12, 3)
    one = FactorClass(ONE_FACTOR, ())
    star = FactorClass(STAR_FACTOR, ())
    d = Decomposition.from_classes(p, [one, star, star])
    assert (d.r, d.s) == (1, 2)
