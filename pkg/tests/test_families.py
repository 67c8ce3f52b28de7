import pytest

from oracles import iso_classes_by_permutation, labeled_graphs, prufer_tree_class_count
from reconkit import (
    Graph,
    GraphError,
    canonical_form,
    caterpillar_graph,
    centroid,
    complete,
    complete_bipartite,
    components,
    cycle,
    disjoint_union,
    enumerate_graphs,
    enumerate_trees,
    graph_union,
    is_isomorphic,
    parse_family_spec,
    path,
    resolve_graph_input,
    seq_of,
    spider,
    star,
    write_graph6,
)


def test_named_constructors():
    assert sorted(star(3).degrees()) == [1, 1, 1, 3]
    kpq = complete_bipartite(2, 3)
    assert kpq.m == 6 and sorted(kpq.degrees()) == [2, 2, 2, 3, 3]
    assert path(2).m == 1 and path(2).n == 2
    assert cycle(4).degrees() == (2, 2, 2, 2)
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        path(0)


def test_disjoint_union():
    g = disjoint_union(2, complete(3))
    assert (g.n, g.m, len(components(g))) == (6, 6, 2)
    g = disjoint_union(3, path(3))
    assert (g.n, g.m) == (9, 6)
    assert disjoint_union(1, path(4)) == path(4)
    with pytest.raises(GraphError):
        disjoint_union(9, complete(4))  # 36 vertices


def test_caterpillar_graph():
    g = caterpillar_graph([2, 0, 2])
    assert g.n == 7
    assert sorted(g.degrees(), reverse=True)[:3] == [3, 3, 2]  # spine degrees
    assert is_isomorphic(caterpillar_graph([1, 0, 0, 1]), path(6))
    assert centroid(caterpillar_graph([2, 2])).kind == "bicentroidal"
    assert caterpillar_graph([2, 2]).n == 6


def test_caterpillar_properties():
    import itertools
    for n in range(1, 5):
        for tup in itertools.product(range(4), repeat=n):
            if n >= 2 and (tup[0] < 1 or tup[-1] < 1):
                continue
            if n == 1 and tup[0] < 1:
                continue
            g = caterpillar_graph(tup)
            assert g.m == g.n - 1 and len(components(g)) == 1
            assert seq_of(g) is not None  # leaves removed is a path
            assert is_isomorphic(g, caterpillar_graph(tup[::-1]))


def test_spider():
    assert spider([1, 1, 2]).n == 5
    assert spider([2, 2, 2]).n == 7
    assert is_isomorphic(spider([1, 1, 1]), star(3))
    with pytest.raises(GraphError):
        spider([3, 4])  # that is a path, not a spider
    with pytest.raises(GraphError):
        spider([1, 1, 0])


def test_tree_counts_against_prufer_oracle():
    for n in range(1, 8):
        assert len(list(enumerate_trees(n))) == prufer_tree_class_count(n)


def test_tree_counts_frozen():
    # larger values computed once with the same Prufer oracle and frozen
    assert len(list(enumerate_trees(8))) == 23
    assert len(list(enumerate_trees(9))) == 47
    assert len(list(enumerate_trees(10))) == 106


def test_trees_are_deduplicated_trees():
    for n in (6, 8):
        trees = list(enumerate_trees(n))
        assert len({canonical_form(t) for t in trees}) == len(trees)
        graph_certs = {canonical_form(g) for g in enumerate_graphs(min(n, 8), n - 1)}
        for t in trees:
            assert t.m == t.n - 1 and len(components(t)) == 1
            if n <= 8:
                assert canonical_form(t) in graph_certs


def test_graph_counts():
    assert len(list(enumerate_graphs(3))) == 4
    graphs4 = list(enumerate_graphs(4))
    assert len(graphs4) == 11
    assert iso_classes_by_permutation(labeled_graphs(4)) == 11
    assert len(list(enumerate_graphs(5, 4))) == 6
    with pytest.raises(GraphError):
        list(enumerate_graphs(9))
    with pytest.raises(GraphError):
        list(enumerate_trees(13))


def test_family_grammar():
    g = parse_family_spec("U:2*S:3")
    assert (g.n, g.m, len(components(g))) == (8, 6, 2)
    assert is_isomorphic(parse_family_spec("cat:2,0,2"), caterpillar_graph([2, 0, 2]))
    assert is_isomorphic(parse_family_spec("spider:1,1,2"), spider([1, 1, 2]))
    assert is_isomorphic(parse_family_spec("Kpq:2,3"), complete_bipartite(2, 3))
    mixed = parse_family_spec("U:2*K:3+K:1")
    assert (mixed.n, mixed.m) == (7, 6)
    with pytest.raises(GraphError):
        parse_family_spec("X:3")
    with pytest.raises(GraphError):
        parse_family_spec("P4")


def test_resolve_graph_input():
    assert resolve_graph_input("P:3").n == 3
    g = complete(3)
    assert resolve_graph_input(write_graph6(g)) == g
