"""Graph and edge-colored graph value types, constructors, and file I/O.

Graphs are simple and undirected, with vertices 0..n-1.  Adjacency is kept
as one bitmask per vertex so that neighborhood intersections are single
machine-word operations.  Both value types are immutable; "mutations"
return new objects.

Edge colorings are semantically partitions of the edge set: two colorings
are the same object if they induce the same partition of edges into color
classes.  Colors are therefore normalized on construction to dense ids
0..c-1, numbered by first occurrence in lexicographic edge order.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

from .errors import ParameterError, ParseError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for n={n}")
            seen.add(_norm_edge(u, v))
        self.n = n
        self.edges = tuple(sorted(seen))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def non_edges(self) -> list[Edge]:
        """All unordered non-adjacent pairs, lexicographically sorted."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + (_norm_edge(u, v),))

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = _norm_edge(u, v)
        return Graph(self.n, (f for f in self.edges if f != e))

    def delete_vertices(self, drop: Iterable[int]) -> "Graph":
        """Induced subgraph on the remaining vertices, relabeled densely."""
        drop = set(drop)
        keep = [v for v in range(self.n) if v not in drop]
        relabel = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            (
                (relabel[u], relabel[v])
                for u, v in self.edges
                if u not in drop and v not in drop
            ),
        )

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        return self.delete_vertices(v for v in range(self.n) if v not in keep)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complement(g: Graph) -> Graph:
    """Graph with edge {u,v} exactly when g lacks it."""
    return Graph(
        g.n,
        (
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ),
    )


class EdgeColoredGraph:
    """A Graph plus a total edge coloring, normalized to a dense partition."""

    __slots__ = ("graph", "color", "num_colors", "_hash")

    def __init__(self, graph: Graph, color: Mapping[Edge, int]):
        normal = {}
        for u, v in color:
            e = _norm_edge(u, v)
            if not graph.has_edge(*e):
                raise ParameterError(f"color assigned to non-edge {e}")
            normal[e] = color[(u, v)]
        missing = [e for e in graph.edges if e not in normal]
        if missing:
            raise ParameterError(f"edge {missing[0]} has no color")
        # Re-index color classes by first occurrence in lex edge order.
        remap: dict[int, int] = {}
        dense = {}
        for e in graph.edges:
            c = normal[e]
            if c not in remap:
                remap[c] = len(remap)
            dense[e] = remap[c]
        self.graph = graph
        self.color = dense
        self.num_colors = len(remap)
        self._hash = hash((graph, tuple(dense[e] for e in graph.edges)))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EdgeColoredGraph)
            and self.graph == other.graph
            and self.color == other.color
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self.n}, m={self.m}, colors={self.num_colors})"

    def color_of(self, u: int, v: int) -> int:
        return self.color[_norm_edge(u, v)]

    def colors(self) -> set[int]:
        return set(range(self.num_colors))

    def color_classes(self) -> list[list[Edge]]:
        classes: list[list[Edge]] = [[] for _ in range(self.num_colors)]
        for e in self.graph.edges:
            classes[self.color[e]].append(e)
        return classes

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.num_colors
        for e in self.graph.edges:
            sizes[self.color[e]] += 1
        return sizes

    def with_edge(self, u: int, v: int, c: int) -> "EdgeColoredGraph":
        color = dict(self.color)
        color[_norm_edge(u, v)] = c
        return EdgeColoredGraph(self.graph.add_edge(u, v), color)

    def delete_vertices(self, drop: Iterable[int]) -> "EdgeColoredGraph":
        drop = set(drop)
        keep = [v for v in range(self.n) if v not in drop]
        relabel = {v: i for i, v in enumerate(keep)}
        sub = self.graph.delete_vertices(drop)
        color = {
            (relabel[u], relabel[v]): c
            for (u, v), c in self.color.items()
            if u not in drop and v not in drop
        }
        return EdgeColoredGraph(sub, color)


def rainbow(g: Graph) -> EdgeColoredGraph:
    """All-distinct coloring of g."""
    return EdgeColoredGraph(g, {e: i for i, e in enumerate(g.edges)})


def monochromatic(g: Graph, c: int = 0) -> EdgeColoredGraph:
    return EdgeColoredGraph(g, {e: c for e in g.edges})


# ---------------------------------------------------------------------------
# Named constructors


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_multipartite(*parts: int) -> Graph:
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    n = offsets[-1]
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(offsets[i], offsets[i + 1]):
                for v in range(offsets[j], offsets[j + 1]):
                    edges.append((u, v))
    return Graph(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return Graph(
        a.n + b.n,
        list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges],
    )


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all cross edges."""
    g = disjoint_union(a, b)
    cross = [(u, a.n + v) for u in range(a.n) for v in range(b.n)]
    return Graph(g.n, list(g.edges) + cross)


def complete_join(
    a: EdgeColoredGraph, b: EdgeColoredGraph, fresh: bool = True
) -> EdgeColoredGraph:
    """Complete join of two edge-colored graphs.

    With fresh=True every cross edge receives a brand-new color class of
    its own; otherwise all cross edges share one new class.
    """
    g = join(a.graph, b.graph)
    color: dict[Edge, int] = dict(a.color)
    base = a.num_colors
    for (u, v), c in b.color.items():
        color[(u + a.n, v + a.n)] = base + c
    nxt = base + b.num_colors
    for u in range(a.n):
        for v in range(b.n):
            color[(u, a.n + v)] = nxt
            if fresh:
                nxt += 1
    return EdgeColoredGraph(g, color)


# ---------------------------------------------------------------------------
# Text format
#
#   graph <n> <m>          followed by m lines "u v"     (u < v)
#   ecg <n> <m>            followed by m lines "u v c"   (u < v, c >= 0)
#
# '#' starts a comment line; tokens are whitespace-separated.


def serialize(x: Graph | EdgeColoredGraph) -> str:
    if isinstance(x, EdgeColoredGraph):
        lines = [f"ecg {x.n} {x.m}"]
        lines += [f"{u} {v} {x.color[(u, v)]}" for u, v in x.graph.edges]
    else:
        lines = [f"graph {x.n} {x.m}"]
        lines += [f"{u} {v}" for u, v in x.edges]
    return "\n".join(lines) + "\n"


def parse(text: str) -> Graph | EdgeColoredGraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise ParseError("empty input")
    lineno, header = rows[0]
    if len(header) != 3 or header[0] not in ("graph", "ecg"):
        raise ParseError("expected header 'graph <n> <m>' or 'ecg <n> <m>'", lineno)
    kind = header[0]
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise ParseError("non-integer header fields", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative header fields", lineno)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}", lineno)
    want = 3 if kind == "ecg" else 2
    edges: list[Edge] = []
    color: dict[Edge, int] = {}
    seen: set[Edge] = set()
    for lineno, tokens in body:
        if len(tokens) != want:
            raise ParseError(f"expected {want} tokens on edge line", lineno)
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise ParseError("non-integer edge tokens", lineno) from None
        u, v = values[0], values[1]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in edge ({u},{v})", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        e = _norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge ({u},{v})", lineno)
        seen.add(e)
        edges.append(e)
        if kind == "ecg":
            if values[2] < 0:
                raise ParseError("negative color", lineno)
            color[e] = values[2]
    g = Graph(n, edges)
    if kind == "ecg":
        return EdgeColoredGraph(g, color)
    return g


def load(path) -> Graph | EdgeColoredGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save(x: Graph | EdgeColoredGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(x))
