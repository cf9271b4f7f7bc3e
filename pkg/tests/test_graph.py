
import pytest
from hypothesis import given
from hypothesis import strategies as st

from condcolor.families import gen_complete, gen_complete_kpartite, gen_cycle, gen_gear, gen_path
from condcolor.families import gen_windmill, line_graph, gen_friendship
from condcolor.graph import (
    Graph,
    InputError,
    bipartition,
    degree,
    distance2_neighborhood,
    is_connected,
    is_tree,
    max_degree,
    min_degree,
)

from conftest import connected_graphs


def test_rejects_self_loop_and_duplicates():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 2)])


def test_adjacency_invariants_checked():
    with pytest.raises(InputError):
        Graph(2, ((1,), ()))
    with pytest.raises(InputError):
        Graph(3, ((2, 1), (0,), (0,)))
    with pytest.raises(InputError):
        Graph(1, ((0,),))


def test_dedup_drops_with_warning(caplog):
    g = Graph.from_edges(3, [(0, 1), (1, 0), (2, 2), (1, 2)], dedup=True)
    assert g.edges() == [(0, 1), (1, 2)]
    assert "dropped 2" in caplog.text


@pytest.mark.parametrize(
    "g, v, expected",
    [(gen_cycle(4), 0, 2), (gen_windmill(3, 2), 0, 4), (gen_complete(5), 3, 4)],
)
def test_degree_examples(g, v, expected):
    assert degree(g, v) == expected


def test_max_min_degree_examples():
    g = gen_gear(3)
    assert max_degree(g) == 3 and degree(g, 0) == 3
    p = gen_path(4)
    assert (max_degree(p), min_degree(p)) == (2, 1)
    assert max_degree(line_graph(gen_friendship(2))) == 4
    with pytest.raises(InputError):
        max_degree(Graph(0, ()))


def test_connectivity_examples():
    assert is_connected(gen_cycle(5))
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_connected(two_triangles)
    assert is_connected(gen_gear(4))


def test_distance2_examples():
    assert distance2_neighborhood(gen_path(5), 0) == [1, 2]
    assert distance2_neighborhood(gen_cycle(4), 0) == [1, 2, 3]
    star = gen_complete_kpartite([1, 3])
    assert distance2_neighborhood(star, 1) == [0, 2, 3]


def test_bipartition_and_tree():
    assert bipartition(gen_cycle(6)) == ([0, 2, 4], [1, 3, 5])
    assert bipartition(gen_cycle(5)) is None
    assert is_tree(gen_path(4)) and not is_tree(gen_cycle(4))


@given(connected_graphs(max_n=8))
def test_degree_sum_and_range(g):
    degs = [degree(g, v) for v in range(g.n)]
    assert all(0 <= d <= g.n - 1 for d in degs)
    assert sum(degs) == 2 * g.num_edges


@given(connected_graphs(max_n=8))
def test_distance2_is_union_of_neighborhoods(g):
    for v in range(g.n):
        d2 = set(distance2_neighborhood(g, v))
        expected = set(g.neighbors(v))
        for u in g.neighbors(v):
            expected |= set(g.neighbors(u))
        expected.discard(v)
        assert d2 == expected and set(g.neighbors(v)) <= d2


@given(connected_graphs(max_n=8), st.randoms(use_true_random=False), st.integers(0, 5))
def test_from_edges_ignores_order_and_duplicates(g, rnd, dups):
    edges = [e[::-1] if rnd.random() < 0.5 else e for e in g.edges()]
    edges += [rnd.choice(edges) for _ in range(dups)]
    rnd.shuffle(edges)
    assert Graph.from_edges(g.n, edges, dedup=True) == g


def test_metadata_not_part_of_equality():
    g = gen_path(3)
    assert g == Graph.from_edges(3, [(1, 2), (0, 1)])
    assert g.with_meta(labels=("a", "b", "c")).label(2) == "c"
