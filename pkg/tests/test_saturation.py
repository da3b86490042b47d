import random

import pytest

from rsat.errors import ResourceLimitError
from rsat.graphs import (
    EdgeColoredGraph,
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    join,
    path_graph,
    rainbow,
    star_graph,
)
from rsat.saturation import (
    FRESH,
    candidate_colors,
    is_k_sat,
    is_k_semisat,
    is_rainbow_saturated,
    is_rainbow_semisaturated,
    is_rfree,
    is_sat,
    is_weakly_rainbow_saturated,
)


def random_ecg(rng, n, p, colors):
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    return EdgeColoredGraph(g, {e: rng.randrange(colors) for e in g.edges})


class TestCandidateColors:
    def test_examples(self):
        gamma = EdgeColoredGraph(path_graph(3), {(0, 1): 0, (1, 2): 1})
        assert candidate_colors(gamma) == {0, 1, 2}
        assert candidate_colors(EdgeColoredGraph(Graph(4), {})) == {0}


class TestRfree:
    def test_examples(self):
        assert is_rfree(rainbow(complete_bipartite(2, 4)), 3)
        report = is_rfree(rainbow(complete_graph(4)), 4)
        assert not report and len(report.witness) == 4


class TestRainbowSaturated:
    def test_rainbow_c4_is_saturated_for_k3(self):
        assert is_rainbow_saturated(rainbow(complete_bipartite(2, 2)), 3)

    def test_rainbow_star_is_not(self):
        assert not is_rainbow_saturated(rainbow(star_graph(3)), 3)

    def test_witness_replays(self):
        gamma = rainbow(star_graph(3))
        report = is_rainbow_saturated(gamma, 3)
        assert not report
        (u, v), c = report.witness
        concrete = gamma.num_colors + 7 if c == FRESH else c
        augmented = gamma.with_edge(u, v, concrete)
        # The replayed addition must not contain a rainbow triangle
        # through (u, v): every triangle through the new edge repeats a color.
        from rsat.cliques import list_rainbow_cliques

        assert all(
            not {u, v} <= set(t) for t in list_rainbow_cliques(augmented, 3)
        )

    def test_not_free_is_not_saturated(self):
        report = is_rainbow_saturated(rainbow(complete_graph(3)), 3)
        assert not report


class TestRainbowSemisaturated:
    def test_paper_examples(self):
        assert is_rainbow_semisaturated(rainbow(join(complete_graph(3), Graph(5))), 4)
        assert is_rainbow_semisaturated(rainbow(join(Graph(2), Graph(6))), 3)
        assert not is_rainbow_semisaturated(EdgeColoredGraph(Graph(5), {}), 3)

    def test_saturated_implies_semisaturated(self):
        rng = random.Random(41)
        for _ in range(100):
            gamma = random_ecg(rng, rng.randint(2, 6), rng.random(), 4)
            if is_rainbow_saturated(gamma, 3):
                assert is_rainbow_semisaturated(gamma, 3)


class TestWeaklySaturated:
    def test_semisaturated_fast_path(self):
        gamma = rainbow(join(complete_graph(3), Graph(5)))  # 10 non-edges
        assert is_weakly_rainbow_saturated(gamma, 4)

    def test_complete_graph_vacuous(self):
        assert is_weakly_rainbow_saturated(rainbow(complete_graph(5)), 3)

    def test_edgeless_fails(self):
        assert not is_weakly_rainbow_saturated(EdgeColoredGraph(Graph(4), {}), 3)

    def test_resource_bound(self):
        with pytest.raises(ResourceLimitError):
            is_weakly_rainbow_saturated(EdgeColoredGraph(Graph(6), {}), 3)

    def test_full_check_exercised_beyond_fast_path(self):
        # A path with two colors: not semisaturated for r=3, and no
        # ordering can make the very first addition close a triangle.
        gamma = rainbow(path_graph(4))
        assert not is_rainbow_semisaturated(gamma, 3)
        assert not is_weakly_rainbow_saturated(gamma, 3)

    def test_semisaturated_implies_weak_on_small(self):
        rng = random.Random(42)
        for _ in range(60):
            gamma = random_ecg(rng, rng.randint(2, 5), 0.6, 4)
            if len(gamma.graph.non_edges()) > 7:
                continue
            if is_rainbow_semisaturated(gamma, 3):
                assert is_weakly_rainbow_saturated(gamma, 3)


class TestPlainSaturation:
    def test_examples(self):
        assert is_sat(star_graph(4), complete_graph(3))
        assert is_sat(cycle_graph(5), complete_graph(3))
        assert not is_sat(complete_graph(4), complete_graph(3))

    def test_non_clique_pattern(self):
        # P_4-saturated: K_3 contains no P_4 and every addition creates one.
        g = disjoint_union(complete_graph(3), complete_graph(3))
        assert is_sat(g, path_graph(4))


class TestKSaturation:
    def test_examples(self):
        gp = join(complement(disjoint_union(complete_graph(2), complete_graph(2))), Graph(5))
        assert is_k_sat(gp, complete_graph(4), 1)
        assert is_k_sat(complete_bipartite(3, 6), complete_graph(3), 2)
        assert not is_k_sat(star_graph(5), complete_graph(3), 1)

    def test_k0_equals_plain_on_free_graphs(self):
        rng = random.Random(43)
        h = complete_graph(3)
        for _ in range(40):
            n = rng.randint(2, 6)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.4])
            k0 = bool(is_k_sat(g, h, 0))
            # (H,0)-saturated: H-free and adding any pair creates a copy.
            plain = bool(is_sat(g, h))
            assert k0 == plain

    def test_empty_graph_not_one_saturated(self):
        assert not is_k_sat(Graph(6), complete_graph(3), 1)

    def test_semisat_examples(self):
        assert is_k_semisat(join(complete_graph(3), Graph(6)), complete_graph(4), 1)
        assert is_k_semisat(complete_bipartite(2, 7), complete_graph(3), 1)
        assert not is_k_semisat(path_graph(4), complete_graph(3), 0)

    def test_one_sat_implies_one_semisat(self):
        rng = random.Random(44)
        h = complete_graph(3)
        for _ in range(30):
            n = rng.randint(3, 6)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.4])
            if is_k_sat(g, h, 1):
                assert is_k_semisat(g, h, 1)
