"""Isomorphism-reduced enumeration of graphs and edge colorings.

Graphs are generated one vertex at a time: every n-vertex graph minus
its last vertex is an (n-1)-vertex graph, so extending each (n-1)-vertex
representative by one vertex with every possible neighborhood and
deduplicating by canonical code yields exactly one representative per
isomorphism class.

Colorings of a fixed graph are edge-set partitions, enumerated as
restricted-growth strings and kept only when lexicographically minimal
over the action of the graph's edge-automorphism group (colorings up to
color renaming and graph automorphism).
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from .canon import edge_automorphism_group, graph_code
from .errors import ResourceLimitError
from .graphs import EdgeColoredGraph, Graph

ENUM_MAX_VERTICES = 10
ENUM_MAX_EDGES = 12

_reps_cache: dict[int, list[Graph]] = {0: [Graph(0)]}

Filter = Callable[[Graph], bool]


def _unfiltered_reps(n: int) -> list[Graph]:
    if n not in _reps_cache:
        prev = _unfiltered_reps(n - 1)
        seen = set()
        out = []
        for g in prev:
            edges = list(g.edges)
            for mask in range(1 << (n - 1)):
                extra = [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
                cand = Graph(n, edges + extra)
                code = graph_code(cand)
                if code not in seen:
                    seen.add(code)
                    out.append(cand)
        out.sort(key=lambda g: (g.m, graph_code(g)))
        _reps_cache[n] = out
    return _reps_cache[n]


def enumerate_graphs(
    n: int,
    hereditary: Optional[Filter] = None,
    final: Optional[Filter] = None,
) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex graphs.

    `hereditary` must be closed under vertex deletion (e.g. clique-number
    bounds); it prunes intermediate levels.  `final` is an arbitrary
    predicate applied only to the full-size graphs (e.g. minimum degree).
    """
    if n > ENUM_MAX_VERTICES:
        raise ResourceLimitError(
            f"graph enumeration limited to {ENUM_MAX_VERTICES} vertices, got {n}"
        )
    if hereditary is None:
        reps = _unfiltered_reps(n)
    else:
        reps = [Graph(0)] if hereditary(Graph(0)) else []
        for size in range(1, n + 1):
            seen = set()
            nxt = []
            for g in reps:
                edges = list(g.edges)
                for mask in range(1 << (size - 1)):
                    extra = [(u, size - 1) for u in range(size - 1) if mask >> u & 1]
                    cand = Graph(size, edges + extra)
                    if not hereditary(cand):
                        continue
                    code = graph_code(cand)
                    if code not in seen:
                        seen.add(code)
                        nxt.append(cand)
            reps = nxt
        reps = sorted(reps, key=lambda g: (g.m, graph_code(g)))
    for g in reps:
        if final is None or final(g):
            yield g


def _rgs_iter(m: int) -> Iterator[tuple[int, ...]]:
    """All restricted-growth strings of length m (set partitions)."""
    if m == 0:
        yield ()
        return
    s = [0] * m

    def rec(i: int, mx: int):
        if i == m:
            yield tuple(s)
            return
        for v in range(mx + 2):
            s[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(1, 0)


def _normalize(values: tuple[int, ...]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for v in values:
        if v not in remap:
            remap[v] = len(remap)
        out.append(remap[v])
    return tuple(out)


def enumerate_colorings(g: Graph) -> Iterator[EdgeColoredGraph]:
    """One representative per orbit of edge colorings of g under color
    renaming and Aut(g), in lexicographic growth-string order."""
    if g.m > ENUM_MAX_EDGES:
        raise ResourceLimitError(
            f"coloring enumeration limited to {ENUM_MAX_EDGES} edges, got {g.m}"
        )
    group = [p for p in edge_automorphism_group(g) if p != tuple(range(g.m))]
    edges = g.edges
    for rgs in _rgs_iter(g.m):
        minimal = True
        for p in group:
            permuted = _normalize(tuple(rgs[p[i]] for i in range(g.m)))
            if permuted < rgs:
                minimal = False
                break
        if minimal:
            yield EdgeColoredGraph(g, dict(zip(edges, rgs)))
