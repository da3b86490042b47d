import pytest
from hypothesis import given, strategies as st

from rsat.errors import ParameterError, ParseError
from rsat.graphs import (
    EdgeColoredGraph,
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    complete_join,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    join,
    monochromatic,
    parse,
    path_graph,
    petersen_graph,
    rainbow,
    serialize,
    star_graph,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


graphs = graphs()


class TestGraph:
    def test_basic(self):
        g = Graph(4, [(0, 1), (2, 1), (2, 3)])
        assert g.m == 3
        assert g.edges == ((0, 1), (1, 2), (2, 3))
        assert g.has_edge(1, 0) and not g.has_edge(0, 3)
        assert g.degree(1) == 2
        assert sorted(g.neighbors(2)) == [1, 3]
        assert g.non_edges() == [(0, 2), (0, 3), (1, 3)]

    def test_rejects_bad_edges(self):
        with pytest.raises(ParameterError):
            Graph(3, [(0, 0)])
        with pytest.raises(ParameterError):
            Graph(3, [(0, 3)])
        with pytest.raises(ParameterError):
            Graph(-1)

    def test_mutators_return_new(self):
        g = Graph(3, [(0, 1)])
        h = g.add_edge(1, 2)
        assert g.m == 1 and h.m == 2
        assert h.remove_edge(0, 1).edges == ((1, 2),)

    def test_delete_vertices_relabels(self):
        g = cycle_graph(5)
        h = g.delete_vertices([0])
        assert h.n == 4 and h.edges == ((0, 1), (1, 2), (2, 3))

    def test_induced(self):
        g = complete_graph(5)
        assert g.induced([1, 3, 4]).m == 3

    @given(graphs)
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g

    @given(graphs)
    def test_degree_sum(self, g):
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


class TestConstructors:
    def test_counts(self):
        assert complete_graph(5).m == 10
        assert cycle_graph(4).m == 4
        assert path_graph(4).m == 3
        assert star_graph(3).m == 3
        assert complete_bipartite(2, 3).m == 6
        assert complete_multipartite(2, 2, 2).m == 12
        assert petersen_graph().m == 15
        assert all(petersen_graph().degree(v) == 3 for v in range(10))

    def test_join(self):
        g = join(complete_graph(2), Graph(3))
        assert g.n == 5 and g.m == 1 + 6

    def test_disjoint_union(self):
        g = disjoint_union(complete_graph(3), path_graph(2))
        assert g.n == 5 and g.m == 4


class TestColoring:
    def test_normalization_is_first_occurrence(self):
        g = Graph(3, [(0, 1), (0, 2), (1, 2)])
        a = EdgeColoredGraph(g, {(0, 1): 7, (0, 2): 7, (1, 2): 3})
        b = EdgeColoredGraph(g, {(0, 1): 0, (0, 2): 0, (1, 2): 9})
        assert a == b and a.num_colors == 2
        assert a.class_sizes() == [2, 1]

    def test_requires_total_coloring(self):
        g = Graph(3, [(0, 1), (1, 2)])
        with pytest.raises(ParameterError):
            EdgeColoredGraph(g, {(0, 1): 0})
        with pytest.raises(ParameterError):
            EdgeColoredGraph(g, {(0, 1): 0, (1, 2): 1, (0, 2): 2})

    def test_rainbow_and_mono(self):
        g = complete_graph(4)
        assert rainbow(g).num_colors == 6
        assert monochromatic(g).num_colors == 1

    def test_with_edge(self):
        gamma = rainbow(path_graph(3))
        bigger = gamma.with_edge(0, 2, 5)
        assert bigger.m == 3 and bigger.num_colors == 3

    def test_complete_join_fresh_vs_shared(self):
        a, b = rainbow(complete_graph(2)), rainbow(complete_graph(2))
        fresh = complete_join(a, b)
        shared = complete_join(a, b, fresh=False)
        assert fresh.num_colors == 2 + 4
        assert shared.num_colors == 2 + 1


class TestSerialization:
    def test_round_trip_graph(self):
        g = petersen_graph()
        assert parse(serialize(g)) == g

    def test_round_trip_colored(self):
        gamma = rainbow(complete_bipartite(2, 3))
        assert parse(serialize(gamma)) == gamma

    def test_comments_and_blanks(self):
        text = "# a comment\n\ngraph 3 1\n0 1\n"
        assert parse(text) == Graph(3, [(0, 1)])

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "graph 3\n",
            "graph 3 2\n0 1\n",
            "graph 3 1\n0 3\n",
            "graph 3 1\n1 1\n",
            "graph 3 2\n0 1\n0 1\n",
            "ecg 3 1\n0 1\n",
            "ecg 3 1\n0 1 -2\n",
            "graph 3 1\n0 x\n",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_parse_error_carries_line(self):
        with pytest.raises(ParseError) as err:
            parse("graph 3 1\n0 9\n")
        assert err.value.line == 2
