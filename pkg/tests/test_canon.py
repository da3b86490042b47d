import itertools
import random

import pytest

from rsat.canon import (
    automorphism_generators,
    canonical_code,
    canonical_labeling,
    edge_automorphism_group,
    graph_code,
)
from rsat.errors import ResourceLimitError
from rsat.graphs import (
    EdgeColoredGraph,
    Graph,
    complete_graph,
    cycle_graph,
    monochromatic,
    path_graph,
    petersen_graph,
    rainbow,
)


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    if (a.n, a.m) != (b.n, b.m):
        return False
    for perm in itertools.permutations(range(a.n)):
        if all(b.has_edge(perm[u], perm[v]) for u, v in a.edges):
            return True
    return False


def brute_color_isomorphic(a: EdgeColoredGraph, b: EdgeColoredGraph) -> bool:
    if (a.n, a.m, a.num_colors) != (b.n, b.m, b.num_colors):
        return False
    for perm in itertools.permutations(range(a.n)):
        if not all(b.graph.has_edge(perm[u], perm[v]) for u, v in a.graph.edges):
            continue
        mapping = {}
        good = True
        for (u, v), c in a.color.items():
            d = b.color_of(perm[u], perm[v])
            if mapping.setdefault(c, d) != d:
                good = False
                break
        if good and len(set(mapping.values())) == len(mapping):
            return True
    return False


def random_graph(rng, n):
    return Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    )


class TestGraphCodes:
    def test_relabeling_invariance(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(0, 7)
            g = random_graph(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges])
            assert canonical_code(g) == canonical_code(h)

    def test_agrees_with_brute_force(self):
        rng = random.Random(12)
        for _ in range(150):
            n = rng.randint(1, 5)
            a, b = random_graph(rng, n), random_graph(rng, n)
            assert (canonical_code(a) == canonical_code(b)) == brute_isomorphic(a, b)

    def test_distinguishes_same_degree_sequence(self):
        # C_6 and 2K_3 are both 2-regular on six vertices.
        two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert canonical_code(cycle_graph(6)) != canonical_code(two_triangles)

    def test_vertex_bound(self):
        with pytest.raises(ResourceLimitError):
            canonical_code(Graph(13))
        assert graph_code(Graph(13)) is not None


class TestColoredCodes:
    def test_color_renaming_invariance(self):
        g = path_graph(4)
        a = EdgeColoredGraph(g, {(0, 1): 5, (1, 2): 5, (2, 3): 9})
        b = EdgeColoredGraph(g, {(0, 1): 1, (1, 2): 1, (2, 3): 0})
        assert canonical_code(a) == canonical_code(b)

    def test_agrees_with_brute_force(self):
        rng = random.Random(13)
        for _ in range(120):
            n = rng.randint(2, 5)
            ga, gb = random_graph(rng, n), random_graph(rng, n)
            a = EdgeColoredGraph(ga, {e: rng.randrange(3) for e in ga.edges})
            b = EdgeColoredGraph(gb, {e: rng.randrange(3) for e in gb.edges})
            assert (canonical_code(a) == canonical_code(b)) == brute_color_isomorphic(a, b)

    def test_coloring_matters(self):
        g = complete_graph(3)
        assert canonical_code(rainbow(g)) != canonical_code(monochromatic(g))


class TestAutomorphisms:
    def test_generators_are_automorphisms(self):
        g = petersen_graph()
        for aut in automorphism_generators(g):
            for u, v in g.edges:
                assert g.has_edge(aut[u], aut[v])

    def test_edge_group_sizes(self):
        assert len(edge_automorphism_group(complete_graph(4))) == 24
        assert len(edge_automorphism_group(cycle_graph(5))) == 10
        assert len(edge_automorphism_group(path_graph(3))) == 2

    def test_isolated_vertices_do_not_blow_up_edge_group(self):
        g = Graph(8, [(0, 1)])
        assert edge_automorphism_group(g) == [(0,)]

    def test_labeling_returns_consistent_code(self):
        g = cycle_graph(6)
        lab, code, _ = canonical_labeling(g)
        assert sorted(lab) == list(range(6))
