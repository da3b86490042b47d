"""Explicit extremal constructions, colored and uncolored.

Uncolored: the classical K_r-saturation extremal graphs (clique joined
to an independent set and its variants for the one-edge-swap and k-swap
saturation numbers).

Colored: the small family members on 3 and 5 vertices, the subdivision
construction giving members on k + O(sqrt(k)) vertices, the complete
joins with independent sets realizing the rainbow saturation numbers,
and the assemblies showing every dense edge count is achievable.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, isqrt

from .cliques import RainbowCliqueQuery, contains_rainbow_clique
from .errors import InfeasibleError, ParameterError
from .families import in_family_Fhat
from .graphs import (
    EdgeColoredGraph,
    Graph,
    complete_graph,
    complete_join,
    complete_multipartite,
    join,
    rainbow,
)

RED = 0


def ehm_graph(n: int, r: int) -> Graph:
    """K_{r-2} joined to n-r+2 isolated vertices; the minimum
    K_r-saturated graph."""
    if not (r - 2 >= 1 and n >= r - 2):
        raise ParameterError("need n >= r-2 >= 1")
    return join(complete_graph(r - 2), Graph(n - r + 2))


def g_semisat(n: int, r: int) -> Graph:
    """Minimum (K_r,1)-semisaturated graph: K_{2,n-2} for r=3, otherwise
    K_{r-1} joined to an independent set."""
    if r < 3:
        raise ParameterError("r must be >= 3")
    if r == 3:
        if n < 3:
            raise ParameterError("need n >= 3")
        return complete_multipartite(2, n - 2)
    if n < r:
        raise ParameterError("need n >= r")
    return join(complete_graph(r - 1), Graph(n - r + 1))


def g_prime(n: int, r: int) -> Graph:
    """Minimum (K_r,1)-saturated graph: the complement of (r-2) disjoint
    edges, joined to an independent set."""
    if r < 3:
        raise ParameterError("r must be >= 3")
    if n < 2 * (r - 2):
        raise ParameterError("need n >= 2(r-2)")
    parts = [2] * (r - 2) + [n - 2 * (r - 2)]
    return complete_multipartite(*[p for p in parts if p > 0])


def g_prime_rainbow(n: int, r: int) -> EdgeColoredGraph:
    return rainbow(g_prime(n, r))


def satk_upper(n: int, r: int, k: int) -> Graph:
    """Upper-bound construction for the k-swap saturation number:
    an independent set joined to the complement of (r-2) disjoint
    (k+1)-cliques."""
    if r < 3 or k < 0:
        raise ParameterError("need r >= 3 and k >= 0")
    if n < (k + 1) * (r - 2):
        raise ParameterError("need n >= (k+1)(r-2)")
    parts = [n - (k + 1) * (r - 2)] + [k + 1] * (r - 2)
    return complete_multipartite(*[p for p in parts if p > 0])


# ---------------------------------------------------------------------------
# Small colored family members


def lambda2() -> EdgeColoredGraph:
    """Triangle with exactly two edges sharing a color."""
    return EdgeColoredGraph(complete_graph(3), {(0, 1): 0, (0, 2): 0, (1, 2): 1})


def lambda3() -> EdgeColoredGraph:
    """Minimum-vertex member for k=3 with 9 edges: lambda2 completely
    joined (fresh colors) to two non-adjacent vertices."""
    isolated = EdgeColoredGraph(Graph(2), {})
    return complete_join(lambda2(), isolated)


def lambda3_alt() -> EdgeColoredGraph:
    """8-edge member for k=3 on vertices x=0, v1=1, v2=2, u1=3, u2=4:
    non-edges {x,v1},{x,v2}; v1u1 and v2u2 share a color, the rest are
    distinct."""
    g = Graph(5, [(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    color = {(1, 3): 0, (2, 4): 0}
    nxt = 1
    for e in g.edges:
        if e not in color:
            color[e] = nxt
            nxt += 1
    return EdgeColoredGraph(g, color)


def subdivision_gamma(k: int) -> EdgeColoredGraph:
    """Member for k on k + ceil((-1+sqrt(4k-3))/2) vertices.

    Every edge of K_t is subdivided (m of them twice, the remaining l
    once, with 2m + l = k-1); the first and last edge of each subdivided
    path share a color unique to the path; the graph is then completed
    and every other edge gets a fresh color.
    """
    if k < 4:
        raise ParameterError("k must be >= 4")
    # t = ceil((1+sqrt(4k-3))/2): least t with (2t-1)^2 >= 4k-3.
    t = 1
    while (2 * t - 1) ** 2 < 4 * k - 3:
        t += 1
    ell = 2 * comb(t, 2) - (k - 1)
    if ell < 0 or (k - 1 - ell) % 2:
        raise ParameterError(f"internal arithmetic failure for k={k}")
    m = (k - 1 - ell) // 2
    base_edges = list(combinations(range(t), 2))
    assert m + ell == len(base_edges)

    n = t + 2 * m + ell
    color: dict[tuple[int, int], int] = {}
    nxt_vertex = t
    nxt_color = 0

    def paint(u, v, c):
        color[(u, v) if u < v else (v, u)] = c

    for i, (a, b) in enumerate(base_edges):
        if i < m:  # subdivide twice: a - x - y - b
            x, y = nxt_vertex, nxt_vertex + 1
            nxt_vertex += 2
            paint(a, x, nxt_color)
            paint(y, b, nxt_color)
        else:  # subdivide once: a - x - b
            x = nxt_vertex
            nxt_vertex += 1
            paint(a, x, nxt_color)
            paint(x, b, nxt_color)
        nxt_color += 1
    g = complete_graph(n)
    for e in g.edges:
        if e not in color:
            color[e] = nxt_color
            nxt_color += 1
    return EdgeColoredGraph(g, color)


def _saturate_core(core: EdgeColoredGraph, r: int) -> EdgeColoredGraph:
    """Greedily add non-edges in duplicated colors while no rainbow
    K_{r-1} appears, in lexicographic (edge, color) order; the result is
    rainbow-K_{r-1}-saturated."""
    changed = True
    while changed:
        changed = False
        for e in core.graph.non_edges():
            for c in range(core.num_colors + 1):
                cand = core.with_edge(*e, c)
                if not contains_rainbow_clique(cand, RainbowCliqueQuery(r - 1)):
                    core = cand
                    changed = True
                    break
            if changed:
                break
    return core


def gamma_rn(r: int, n: int, core: EdgeColoredGraph | None = None) -> EdgeColoredGraph:
    """Complete join (fresh cross colors) of a small saturated family
    member with an independent set, realizing the rainbow saturation
    number for small r."""
    if r < 3:
        raise ParameterError("r must be >= 3")
    if core is None:
        if r == 3:
            core = EdgeColoredGraph(Graph(2), {})
        elif r == 4:
            core = lambda2()
        elif r == 5:
            core = lambda3()
        else:
            core = subdivision_gamma(r - 2)
    else:
        core = _saturate_core(core, r)
    if not in_family_Fhat(core, r - 2):
        raise ParameterError(f"core is not a valid family member for r={r}")
    if n < core.n + 2:
        raise ParameterError(f"need n >= {core.n + 2}")
    independent = EdgeColoredGraph(Graph(n - core.n), {})
    return complete_join(core, independent)


def alt_k5(n: int) -> EdgeColoredGraph:
    """Alternative rainbow-K_5-saturated graph with 5n-16 edges, built
    around the 8-edge 5-vertex member instead of the complete join."""
    if n < 9:
        raise ParameterError("n must be >= 9")
    base = lambda3_alt()  # vertices: x=0, v1=1, v2=2, u1=3, u2=4
    color = dict(base.color)
    edges = list(base.graph.edges)
    nxt = base.num_colors

    def add(u, v, c=None):
        nonlocal nxt
        if c is None:
            c, nxt = nxt, nxt + 1
        edges.append((u, v))
        color[(u, v)] = c
        return c

    # z1=5, z2=6: complete to each other and the base; z1v1/z2v2 share a
    # color, z1u1/z2u2 share another.
    a = add(5, 1)
    b = add(5, 3)
    add(6, 2, a)
    add(6, 4, b)
    for z in (5, 6):
        for v in (0, 2 if z == 5 else 1, 4 if z == 5 else 3):
            add(z, v)
    add(5, 6)
    # Remaining vertices see exactly the base, all colors fresh.
    for w in range(7, n):
        for v in range(5):
            add(w, v)
    return EdgeColoredGraph(Graph(n, edges), color)


# ---------------------------------------------------------------------------
# Non-stability: saturated graphs with prescribed edge counts


def nonstab_lambda(r: int) -> EdgeColoredGraph:
    """Rainbow-K_r-saturated graph with exactly one non-edge.

    For r >= 4: rainbow coloring of two (r-2)-cliques joined to a
    non-adjacent pair, with all cross pairs between the cliques added in
    one shared color.  For r = 3: a bespoke 5-vertex graph with color
    classes of sizes 5, 2, 2.
    """
    if r < 3:
        raise ParameterError("r must be >= 3")
    if r == 3:
        g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
        red, blue, green = 0, 1, 2
        color = {
            (0, 3): red, (2, 3): red,
            (0, 4): blue, (1, 4): blue,
            (0, 1): green, (0, 2): green, (1, 2): green, (1, 3): green, (2, 4): green,
        }
        return EdgeColoredGraph(g, color)
    # H_r = (non-adjacent pair {0,1}) + two cliques A, B.
    A = list(range(2, r))
    B = list(range(r, 2 * r - 2))
    edges = []
    for part in (A, B):
        edges += list(combinations(part, 2))
        edges += [(x, y) for x in (0, 1) for y in part]
    color = {}
    nxt = RED + 1
    for u, v in Graph(2 * r - 2, edges).edges:
        color[(u, v)] = nxt
        nxt += 1
    for x in A:
        for y in B:
            edges.append((x, y))
            color[(x, y)] = RED
    return EdgeColoredGraph(Graph(2 * r - 2, edges), color)


def _red_assembly(r: int, n: int, copies: int) -> EdgeColoredGraph:
    """Disjoint copies of nonstab_lambda(r) plus dominant vertices, all
    cross edges in one shared color."""
    block = nonstab_lambda(r)
    nv = block.n
    edges = []
    color = {}
    nxt = 1
    for i in range(copies):
        off = i * nv
        for (u, v), c in block.color.items():
            edges.append((u + off, v + off))
        # Keep each copy's classes disjoint from the others.
        remap = {}
        for (u, v), c in sorted(block.color.items()):
            if c not in remap:
                remap[c] = nxt
                nxt += 1
            color[(u + off, v + off)] = remap[c]
    for u in range(n):
        for v in range(max(u + 1, copies * nv), n):
            edges.append((u, v))
            color[(u, v)] = RED
    for i in range(copies):
        for j in range(i + 1, copies):
            for u in range(i * nv, (i + 1) * nv):
                for v in range(j * nv, (j + 1) * nv):
                    edges.append((u, v))
                    color[(u, v)] = RED
    return EdgeColoredGraph(Graph(n, edges), color)


def nonstab_assemble(r: int, n: int, m: int) -> EdgeColoredGraph:
    """An n-vertex m-edge rainbow-K_r-saturated graph, or an explicit
    infeasibility error.  The output is re-verified before returning.

    Achievable counts at this scale: the minimum (the complete-join
    construction), and the dense range C(n,2) - M for M disjoint
    one-non-edge blocks fitting in n vertices (M = 0 is the all-one-color
    complete graph).
    """
    if r < 3:
        raise ParameterError("r must be >= 3")
    if m < 0 or m > comb(n, 2):
        raise ParameterError("edge count out of range")
    missing = comb(n, 2) - m
    nv = nonstab_lambda(r).n
    result = None
    if missing == 0:
        result = EdgeColoredGraph(complete_graph(n), {e: RED for e in complete_graph(n).edges})
    elif nv * missing <= n:
        result = _red_assembly(r, n, missing)
    else:
        try:
            low = gamma_rn(r, n)
        except ParameterError:
            low = None
        if low is not None and low.m == m:
            result = low
    if result is None:
        raise InfeasibleError(
            f"no known {n}-vertex {m}-edge construction for r={r} at this scale"
        )
    from .saturation import is_rainbow_saturated

    report = is_rainbow_saturated(result, r)
    if not report:
        raise InfeasibleError(
            f"construction for (r={r}, n={n}, m={m}) failed verification: {report.note}"
        )
    return result
