import itertools

import pytest

from rsat.canon import canonical_code
from rsat.constructions import lambda2, lambda3, lambda3_alt
from rsat.errors import ParameterError
from rsat.families import (
    has_perfect_matching,
    in_family_F_doubleprime,
    in_family_Fhat,
    lemma2_conclusion,
    lemma2_hypothesis,
    max_matching_size,
    robust_clique_check,
)
from rsat.graphs import (
    EdgeColoredGraph,
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    rainbow,
)


class TestFamilyMembership:
    def test_lambda2_is_member(self):
        assert in_family_Fhat(lambda2(), 2)

    def test_rainbow_triangle_violates_p1(self):
        report = in_family_Fhat(rainbow(complete_graph(3)), 2)
        assert not report and report.witness[0] == "P1"

    def test_lambda3_alt_is_member(self):
        assert in_family_Fhat(lambda3_alt(), 3)

    def test_p2_violation_names_vertex(self):
        # A rainbow K_2 plus an isolated vertex: deleting an edge endpoint
        # kills every rainbow 2-clique.
        gamma = rainbow(Graph(3, [(0, 1)]))
        report = in_family_Fhat(gamma, 2)
        assert not report and report.witness[0] == "P2"

    def test_p3_violation_names_color(self):
        # One triangle with a pendant sharing no second triangle: the
        # pendant colors are avoidable, but make every triangle use color 0.
        g = complete_graph(3)
        gamma = EdgeColoredGraph(g, {(0, 1): 0, (0, 2): 1, (1, 2): 2})
        report = in_family_Fhat(gamma, 3)
        # P2 fails first here (deleting vertex 0 leaves no triangle).
        assert not report and report.witness[0] == "P2"

    def test_membership_size_lower_bounds(self):
        # Any member needs at least k+1 vertices; k+2 when k >= 3.
        for gamma, k in [(lambda2(), 2), (lambda3(), 3), (lambda3_alt(), 3)]:
            assert gamma.n >= k + 1
            if k >= 3:
                assert gamma.n >= k + 2

    def test_membership_invariant_under_relabeling(self):
        gamma = lambda3_alt()
        perm = [4, 2, 0, 1, 3]
        g = Graph(5, [(perm[u], perm[v]) for u, v in gamma.graph.edges])
        color = {}
        for (u, v), c in gamma.color.items():
            a, b = perm[u], perm[v]
            color[(a, b) if a < b else (b, a)] = 17 - c
        other = EdgeColoredGraph(g, color)
        assert canonical_code(other) == canonical_code(gamma)
        assert in_family_Fhat(other, 3)

    def test_k_validation(self):
        with pytest.raises(ParameterError):
            in_family_Fhat(lambda2(), 0)


class TestMatching:
    def test_matches_naive(self):
        import random

        rng = random.Random(31)
        for _ in range(60):
            n = rng.randint(0, 7)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.4])
            naive = 0
            for size in range(len(g.edges), 0, -1):
                for combo in itertools.combinations(g.edges, size):
                    used = [x for e in combo for x in e]
                    if len(set(used)) == len(used):
                        naive = size
                        break
                if naive:
                    break
            assert max_matching_size(g) == naive

    def test_non_bipartite_blossom_case(self):
        # Two triangles joined by a path: greedy bipartite-style reasoning
        # fails here, the exact answer is 3.
        g = Graph(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
        assert max_matching_size(g) == 3

    def test_perfect_matching(self):
        assert has_perfect_matching(cycle_graph(6))
        assert not has_perfect_matching(cycle_graph(5))
        assert not has_perfect_matching(Graph(4, [(0, 1), (0, 2), (0, 3)]))


class TestDoublePrimeFamily:
    def test_c4_for_r4(self):
        c4 = complement(disjoint_union(complete_graph(2), complete_graph(2)))
        assert in_family_F_doubleprime(c4, 4)

    def test_negatives(self):
        assert not in_family_F_doubleprime(complete_graph(4), 4)
        assert not in_family_F_doubleprime(Graph(4), 4)
        assert not in_family_F_doubleprime(complete_graph(2), 3)
        assert in_family_F_doubleprime(Graph(2), 3)  # omega=1, complement=K_2


class TestLemma2:
    def test_two_triangles(self):
        g = disjoint_union(complete_graph(3), complete_graph(3))
        assert lemma2_hypothesis(g) and lemma2_conclusion(g)

    def test_single_triangle_fails_hypothesis(self):
        assert not lemma2_hypothesis(complete_graph(3))

    def test_petersen_complement(self):
        g = complement(petersen_graph())
        assert lemma2_hypothesis(g) and lemma2_conclusion(g)
        assert robust_clique_check(g, 2)

    def test_robust_clique_examples(self):
        assert not robust_clique_check(complete_graph(5), 1)
        k4x3 = disjoint_union(
            disjoint_union(complete_graph(4), complete_graph(4)), complete_graph(4)
        )
        assert robust_clique_check(k4x3, 2)
        with pytest.raises(ParameterError):
            robust_clique_check(complete_graph(3), -1)
