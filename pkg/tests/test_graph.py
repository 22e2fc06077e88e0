import math

import pytest
from hypothesis import given

from indhilbert.generators import complete_graph, cycle_graph, path_graph, star_graph
from indhilbert.graph import INF, Graph, GraphError, disjoint_union, zykov_sum
from strategies import graphs


def test_build():
    g = Graph.build(3, [(0, 1), (1, 2)])
    assert g.edge_count == 2 and g.edges() == [(0, 1), (1, 2)]
    assert Graph.build(1, []).edge_count == 0
    assert Graph.build(3, [(0, 1), (1, 0), (1, 2)]).edge_count == 2


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_build_rejects(edges):
    with pytest.raises(GraphError):
        Graph.build(3, edges)


def test_asymmetric_adjacency_rejected():
    with pytest.raises(GraphError):
        Graph(2, [[1], []])


def test_induced_delete():
    h, keep = path_graph(3).induced_delete([1])
    assert h.n == 2 and h.edge_count == 0 and keep == (0, 2)
    c4 = cycle_graph(4)
    assert c4.induced_delete([])[0] == c4
    h, keep = star_graph(3).induced_delete([0])
    assert h == Graph.edgeless(3) and keep == (1, 2, 3)


def test_delete_edge():
    assert cycle_graph(3).delete_edge(0, 2) == Graph.build(3, [(0, 1), (1, 2)])
    assert path_graph(2).delete_edge(0, 1) == Graph.edgeless(2)
    assert complete_graph(4).delete_edge(1, 3).edge_count == 5
    with pytest.raises(GraphError):
        path_graph(3).delete_edge(0, 2)


def test_neighborhoods():
    assert path_graph(3).closed_neighborhood(1) == {0, 1, 2}
    assert Graph.edgeless(2).closed_neighborhood(1) == {1}
    assert cycle_graph(5).open_neighborhood(0) == {1, 4}


def test_distance():
    g = path_graph(4)
    assert g.distance(0, 3) == 3
    assert g.distance(2, 2) == 0
    assert disjoint_union(path_graph(2), path_graph(2)).distance(0, 3) == INF


def test_leaves_and_isolated():
    assert star_graph(4).leaves() == {1, 2, 3, 4}
    assert cycle_graph(6).leaves() == frozenset()
    assert Graph.edgeless(1).isolated_vertices() == {0}


def test_components():
    sizes = sorted(len(c) for c in disjoint_union(path_graph(2), path_graph(3)).connected_components())
    assert sizes == [2, 3]
    assert len(cycle_graph(5).connected_components()) == 1
    assert len(Graph.edgeless(4).connected_components()) == 4


def test_is_star():
    assert star_graph(5).is_star()
    assert not path_graph(4).is_star()
    assert not Graph.edgeless(1).is_star()
    assert path_graph(2).is_star()


def test_zykov_and_union():
    assert zykov_sum(Graph.edgeless(1), Graph.edgeless(1)) == path_graph(2)
    k23 = zykov_sum(Graph.edgeless(2), Graph.edgeless(3))
    assert k23.edge_count == 6
    assert all(k23.has_edge(u, v) for u in (0, 1) for v in (2, 3, 4))
    assert not k23.has_edge(0, 1) and not k23.has_edge(2, 3)
    assert disjoint_union(path_graph(2), path_graph(2)).edge_count == 2


@given(graphs())
def test_adjacency_invariants(g):
    for v in g.vertices():
        assert v not in g.adjacency[v]
        assert all(v in g.adjacency[u] for u in g.adjacency[v])
    assert g.edge_count * 2 == sum(g.degrees())


@given(graphs(max_n=8))
def test_distance_is_a_metric_on_components(g):
    d = [g.bfs_distances([v]) for v in g.vertices()]
    for u in g.vertices():
        for v in g.vertices():
            assert d[u][v] == d[v][u]
            for w in g.vertices():
                if d[u][w] != INF and d[w][v] != INF:
                    assert d[u][v] <= d[u][w] + d[w][v]


@given(graphs())
def test_induced_delete_labels(g):
    remove = set(range(0, g.n, 2))
    h, keep = g.induced_delete(remove)
    assert keep == tuple(v for v in g.vertices() if v not in remove)
    for i, a in enumerate(keep):
        for j, b in enumerate(keep):
            assert h.has_edge(i, j) == (i != j and g.has_edge(a, b))


@given(graphs())
def test_complement_involution(g):
    c = g.complement()
    assert c.complement() == g
    assert c.edge_count + g.edge_count == math.comb(g.n, 2)
