import pytest

from coxric.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    path_graph,
)


def test_construction_dedups_and_orders_edges():
    g = Graph(3, [(2, 1), (1, 2), (0, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.num_edges == 2


def test_construction_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])


def test_degrees_and_neighbors():
    g = path_graph(4)
    assert g.degrees() == (1, 2, 2, 1)
    assert g.neighbor_set(1) == frozenset({0, 2})
    assert not g.has_isolated_vertices()
    assert Graph(3, [(0, 1)]).has_isolated_vertices()


def test_distances_and_balls():
    g = cycle_graph(6)
    assert g.distances_from(0) == [0, 1, 2, 3, 2, 1]
    assert g.ball(0, 1) == (1, 5)
    assert g.ball(0, 2) == (2, 4)
    b1, b2 = g.two_ball(0)
    assert b1 == (1, 5) and b2 == (2, 4)


def test_two_ball_subgraph_puts_center_first():
    g = cycle_graph(8)
    sub = g.two_ball_subgraph(3)
    assert sub.n == 5
    assert sub.labels[0] == 3
    assert sorted(sub.labels) == [1, 2, 3, 4, 5]
    # center has the same degree as in the original graph
    assert sub.degree(0) == g.degree(3)


def test_triangle_stats():
    per_edge, t_max = complete_graph(4).triangle_stats()
    assert t_max == 2
    assert all(v == 2 for v in per_edge.values())
    assert cycle_graph(5).is_triangle_free()
    assert not complete_graph(3).is_triangle_free()


def test_builders():
    assert cycle_graph(5).num_edges == 5
    assert path_graph(5).num_edges == 4
    assert complete_graph(5).num_edges == 10
    assert complete_bipartite_graph(3, 3).num_edges == 9
    q3 = hypercube_graph(3)
    assert q3.n == 8 and q3.num_edges == 12
    assert set(q3.degrees()) == {3}


def test_edge_list_text_round_trip():
    g = cycle_graph(5)
    text = g.to_edge_list_text()
    assert Graph.from_edge_list_text(text).edges == g.edges
    commented = "# a cycle\n0 1\n\n1 2  # wraps\n2 0\n"
    h = Graph.from_edge_list_text(commented)
    assert h.edges == ((0, 1), (0, 2), (1, 2))
    with pytest.raises(ValueError):
        Graph.from_edge_list_text("0 1 2\n")


def test_json_round_trip():
    g = Graph(4, [(0, 1), (2, 3)], labels=("a", "b", "c", "d"))
    h = Graph.from_json_dict(g.to_json_dict())
    assert h.edges == g.edges and h.labels == g.labels


def test_dot_output():
    g = path_graph(3)
    dot = g.to_dot(ranks=[0, 1, 2])
    assert dot.startswith("graph G {")
    assert "0 -- 1;" in dot
    assert "rank=same" in dot


def test_connectivity():
    assert cycle_graph(4).is_connected()
    assert not Graph(4, [(0, 1), (2, 3)]).is_connected()
