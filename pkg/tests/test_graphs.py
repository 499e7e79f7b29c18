import numpy as np
import pytest

from idcodes import (
    FamilySpec,
    FormatError,
    Graph,
    complement,
    complete,
    complete_bipartite,
    connected_cliques,
    cycle,
    degree_stats,
    disjoint_cliques,
    dist2_pairs,
    find_twins,
    generate,
    gnp,
    parse_edge_list,
    path,
    star,
    to_dot,
    write_edge_list,
)

from corpus import small_corpus
from oracles import oracle_complement_edges, oracle_dist2_pairs, oracle_twins


def test_graph_basics():
    g = Graph(4, [(0, 1), (2, 1), (2, 3)])
    assert g.n == 4 and g.m == 3
    assert g.edges() == ((0, 1), (1, 2), (2, 3))
    assert g.neighbors(1) == {0, 2}
    assert g.closed_neighborhood(1) == {0, 1, 2}
    assert g.degree(0) == 1 and g.degree(2) == 2
    assert g.has_edge(1, 0) and not g.has_edge(0, 3)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_graph_equality_and_hash():
    a = Graph(3, [(0, 1)])
    b = Graph(3, [(1, 0)])
    c = Graph(3, [(0, 2)])
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert a != Graph(4, [(0, 1)])


def test_delete_edges():
    g = cycle(4)
    h = g.delete_edges([(3, 0)])
    assert h.edges() == ((0, 1), (1, 2), (2, 3))
    assert g.m == 4, "delete_edges must not mutate the original"
    with pytest.raises(ValueError):
        g.delete_edges([(0, 2)])


def test_generators_exact_edge_sets():
    assert path(1).n == 1 and path(1).m == 0
    assert path(4).edges() == ((0, 1), (1, 2), (2, 3))
    assert cycle(3).edges() == ((0, 1), (0, 2), (1, 2))
    assert cycle(5).edges() == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    assert star(3).edges() == ((0, 1), (0, 2), (0, 3))
    assert complete(4).m == 6
    assert complete_bipartite(2, 3).edges() == (
        (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
    )
    g = disjoint_cliques(2, 2)
    assert g.n == 6 and g.edges() == ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5))
    h = connected_cliques(2, 2)
    assert h.m == g.m + 1 and h.has_edge(0, 3)


def test_components():
    g = disjoint_cliques(2, 2)
    assert g.components == ((0, 1, 2), (3, 4, 5))
    assert connected_cliques(2, 2).components == ((0, 1, 2, 3, 4, 5),)
    lone = Graph(3, [(1, 2)])
    assert lone.components == ((0,), (1, 2))


def test_complement_matches_oracle():
    for name, g in list(small_corpus())[::25]:
        gbar = complement(g)
        assert gbar.n == g.n
        assert list(gbar.edges()) == oracle_complement_edges(g.n, g.edges()), name
    assert complement(complete(5)).m == 0
    assert complement(path(4)).edges() == ((0, 2), (0, 3), (1, 3))


def test_find_twins_matches_oracle():
    assert find_twins(complete(4)) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert find_twins(cycle(4)) == []
    assert find_twins(path(3)) == []
    assert find_twins(Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])) == [(0, 1)]
    for name, g in list(small_corpus())[::7]:
        assert find_twins(g) == oracle_twins(g.n, g.edges()), name


def test_dist2_pairs_matches_oracle():
    assert list(dist2_pairs(path(4))) == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    assert list(dist2_pairs(disjoint_cliques(1, 2))) == [(0, 1), (2, 3)]
    for name, g in list(small_corpus())[::7]:
        assert list(dist2_pairs(g)) == oracle_dist2_pairs(g.n, g.edges()), name


def test_degree_stats():
    assert degree_stats(star(4)) == (1, 4)
    assert degree_stats(cycle(5)) == (2, 2)
    assert degree_stats(Graph(2)) == (0, 0)
    with pytest.raises(ValueError):
        degree_stats(Graph(0))


def test_packed_closed_popcounts():
    g = gnp(70, 0.3, 5)
    rows = g.packed_closed
    assert rows.shape == (70, 2) and rows.dtype == np.uint64
    pops = np.bitwise_count(rows).sum(axis=1)
    for v in range(g.n):
        assert pops[v] == g.degree(v) + 1
    with pytest.raises(ValueError):
        rows[0, 0] = 0


def test_closed_masks():
    g = path(3)
    assert g.closed_masks == (0b011, 0b111, 0b110)


def test_gnp_determinism_and_density():
    a = gnp(30, 0.2, 9)
    assert a == gnp(30, 0.2, 9)
    assert a != gnp(30, 0.2, 10)
    assert gnp(50, 0.0, 1).m == 0
    assert gnp(50, 1.0, 1).m == 50 * 49 // 2
    ms = [gnp(40, 0.25, s).m for s in range(30)]
    mean = sum(ms) / len(ms)
    assert abs(mean - 0.25 * 780) < 40


def test_generate_dispatch():
    assert generate(FamilySpec(kind="path", n=4)) == path(4)
    assert generate(FamilySpec(kind="gnp", n=10, p=0.5, seed=3)) == gnp(10, 0.5, 3)
    assert generate(FamilySpec(kind="disjoint_cliques", delta=2, k=2)) == disjoint_cliques(2, 2)
    with pytest.raises(ValueError):
        generate(FamilySpec(kind="nope", n=3))


def test_edge_list_round_trip():
    for name, g in list(small_corpus())[::11]:
        assert parse_edge_list(write_edge_list(g)) == g, name
    assert write_edge_list(path(3)) == "3 2\n0 1\n1 2\n"
    assert parse_edge_list("2 0\n") == Graph(2)


def test_parse_edge_list_errors():
    for text in (
        "",
        "3\n",
        "x 2\n",
        "3 1\n0 0\n",
        "3 1\n1 0\n",
        "3 1\n0 4\n",
        "3 2\n0 1\n",
        "3 1\n0 1\n1 2\n",
        "3 1\n0 1 7\n",
    ):
        with pytest.raises(FormatError):
            parse_edge_list(text)
    with pytest.raises(FormatError, match="line 2"):
        parse_edge_list("3 1\n0 9\n")


def test_to_dot():
    text = to_dot(path(3))
    assert text.startswith("graph")
    assert "0 -- 1;" in text and "1 -- 2;" in text
    assert "2;" in to_dot(Graph(3, [(0, 1)])), "isolated vertices must appear"
