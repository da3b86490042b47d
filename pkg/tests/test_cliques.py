import itertools
import random

import pytest

from rsat.cliques import (
    RainbowCliqueQuery,
    clique_number,
    contains_rainbow_clique,
    contains_subgraph,
    contains_subgraph_using_edge,
    list_rainbow_cliques,
    rainbow_clique_number,
)
from rsat.errors import ParameterError, ResourceLimitError
from rsat.graphs import (
    EdgeColoredGraph,
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    monochromatic,
    path_graph,
    petersen_graph,
    rainbow,
    star_graph,
)


def naive_rainbow_cliques(ecg, k, forbidden_vertex=None, forbidden_color=None):
    out = []
    for subset in itertools.combinations(range(ecg.n), k):
        if forbidden_vertex is not None and forbidden_vertex in subset:
            continue
        pairs = list(itertools.combinations(subset, 2))
        if not all(ecg.graph.has_edge(*e) for e in pairs):
            continue
        cs = [ecg.color_of(*e) for e in pairs]
        if len(set(cs)) != len(cs) or forbidden_color in cs:
            continue
        out.append(subset)
    return out


def random_ecg(rng, n, p, colors):
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    return EdgeColoredGraph(g, {e: rng.randrange(colors) for e in g.edges})


class TestRainbowCliques:
    def test_matches_naive_enumeration(self):
        rng = random.Random(21)
        for _ in range(120):
            ecg = random_ecg(rng, rng.randint(1, 6), rng.random(), rng.randint(1, 6))
            for k in range(1, ecg.n + 1):
                naive = naive_rainbow_cliques(ecg, k)
                assert list_rainbow_cliques(ecg, k) == naive
                report = contains_rainbow_clique(ecg, RainbowCliqueQuery(k))
                assert bool(report) == bool(naive)
                if report:
                    assert tuple(sorted(report.witness)) in naive

    def test_forbidden_vertex_and_color(self):
        rng = random.Random(22)
        for _ in range(80):
            ecg = random_ecg(rng, rng.randint(2, 6), 0.6, 4)
            k = rng.randint(1, ecg.n)
            fv = rng.randrange(ecg.n)
            fc = rng.randrange(max(ecg.num_colors, 1))
            query = RainbowCliqueQuery(k, forbidden_vertex=fv, forbidden_color=fc)
            assert bool(contains_rainbow_clique(ecg, query)) == bool(
                naive_rainbow_cliques(ecg, k, fv, fc)
            )

    def test_monochromatic_has_no_rainbow_triangle(self):
        ecg = monochromatic(complete_graph(5))
        assert not contains_rainbow_clique(ecg, RainbowCliqueQuery(3))
        assert rainbow_clique_number(ecg) == 2

    def test_rainbow_complete(self):
        assert rainbow_clique_number(rainbow(complete_graph(5))) == 5

    def test_list_is_lexicographic(self):
        ecg = rainbow(complete_graph(4))
        assert list_rainbow_cliques(ecg, 3) == [
            (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)
        ]

    def test_query_validation(self):
        ecg = rainbow(complete_graph(3))
        with pytest.raises(ParameterError):
            contains_rainbow_clique(ecg, RainbowCliqueQuery(0))
        with pytest.raises(ParameterError):
            contains_rainbow_clique(ecg, RainbowCliqueQuery(2, forbidden_vertex=5))


class TestCliqueNumber:
    def test_known_values(self):
        assert clique_number(Graph(0)) == 0
        assert clique_number(Graph(4)) == 1
        assert clique_number(complete_graph(6)) == 6
        assert clique_number(cycle_graph(5)) == 2
        assert clique_number(petersen_graph()) == 2
        assert clique_number(complete_bipartite(3, 3)) == 2

    def test_matches_naive(self):
        rng = random.Random(23)
        for _ in range(60):
            n = rng.randint(1, 7)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.5])
            naive = max(
                (len(s) for size in range(1, n + 1)
                 for s in itertools.combinations(range(n), size)
                 if all(g.has_edge(*e) for e in itertools.combinations(s, 2))),
                default=0,
            )
            assert clique_number(g) == naive


class TestSubgraph:
    def test_basic_patterns(self):
        g = petersen_graph()
        assert contains_subgraph(g, cycle_graph(5))
        assert not contains_subgraph(g, complete_graph(3))
        assert contains_subgraph(complete_graph(4), cycle_graph(4))
        assert not contains_subgraph(star_graph(3), path_graph(4))

    def test_witness_is_an_embedding(self):
        g = complete_bipartite(3, 3)
        report = contains_subgraph(g, cycle_graph(6))
        assert report
        image = report.witness
        h = cycle_graph(6)
        assert all(g.has_edge(image[a], image[b]) for a, b in h.edges)

    def test_using_edge(self):
        g = cycle_graph(5).add_edge(0, 2)
        assert contains_subgraph_using_edge(g, complete_graph(3), (0, 2))
        assert not contains_subgraph_using_edge(g, complete_graph(3), (3, 4))

    def test_pattern_size_limit(self):
        with pytest.raises(ResourceLimitError):
            contains_subgraph(complete_graph(5), complete_graph(13))
