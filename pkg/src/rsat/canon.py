"""Canonical labeling for graphs and edge-colored graphs.

The canonical form is computed by equitable partition refinement plus
backtracking over vertex individualizations, pruned by automorphisms
discovered along the way.  For an edge-colored graph, the color partition
participates twice:

  * during refinement, edges are weighted by the size of their color
    class (a quantity invariant under color renaming), and
  * at each discrete leaf the coloring is read off as a restricted-growth
    string over the edges in position order; the canonical code is the
    lexicographically least (adjacency, growth-string) pair over all
    leaves.

Equal codes therefore mean isomorphic up to simultaneous vertex
relabeling and color renaming.  Codes of uncolored graphs ignore colors.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .graphs import EdgeColoredGraph, Graph

CANON_MAX_VERTICES = 12
_GROUP_CAP = 2_000_000


def _refine(adj, weights, cells, alpha):
    """Equitable refinement of `cells` (list of vertex lists) in place.

    `alpha` is a work list of splitter bitmasks.  `weights` is either None
    or a matrix weights[u][v] of invariant edge weights.
    """
    while alpha:
        splitter = alpha.pop()
        new_cells = []
        touched = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            if weights is None:
                keyed = [((adj[v] & splitter).bit_count(), v) for v in cell]
            else:
                keyed = []
                for v in cell:
                    mask = adj[v] & splitter
                    ws = []
                    m = mask
                    while m:
                        low = m & -m
                        ws.append(weights[v][low.bit_length() - 1])
                        m ^= low
                    ws.sort()
                    keyed.append(((len(ws), tuple(ws)), v))
            keys = {k for k, _ in keyed}
            if len(keys) == 1:
                new_cells.append(cell)
                continue
            touched = True
            for k in sorted(keys):
                part = [v for kk, v in keyed if kk == k]
                new_cells.append(part)
                mask = 0
                for v in part:
                    mask |= 1 << v
                alpha.append(mask)
        if touched:
            cells[:] = new_cells
    return cells


class _CanonSearch:
    def __init__(self, n, adj, weights=None, colors=None):
        self.n = n
        self.adj = adj
        self.weights = weights
        self.colors = colors
        self.best_code = None
        self.best_lab = None
        self.auts = []

    def run(self):
        cells = [list(range(self.n))]
        _refine(self.adj, self.weights, cells, [(1 << self.n) - 1])
        self._search(cells, [])
        return self.best_lab, self.best_code, self.auts

    def _encode(self, lab):
        adj = self.adj
        bits = 0
        for i in range(self.n):
            ai = adj[lab[i]]
            for j in range(i + 1, self.n):
                bits = bits << 1 | (ai >> lab[j] & 1)
        if self.colors is None:
            return (bits,)
        rgs = []
        remap = {}
        colors = self.colors
        for i in range(self.n):
            ai = adj[lab[i]]
            for j in range(i + 1, self.n):
                if ai >> lab[j] & 1:
                    u, v = lab[i], lab[j]
                    c = colors[(u, v) if u < v else (v, u)]
                    if c not in remap:
                        remap[c] = len(remap)
                    rgs.append(remap[c])
        return (bits, tuple(rgs))

    def _search(self, cells, path):
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            lab = tuple(cell[0] for cell in cells)
            code = self._encode(lab)
            if self.best_code is None or code < self.best_code:
                self.best_code = code
                self.best_lab = lab
            elif code == self.best_code and lab != self.best_lab:
                best = self.best_lab
                aut = [0] * self.n
                for i in range(self.n):
                    aut[best[i]] = lab[i]
                self.auts.append(tuple(aut))
            return
        cell = cells[target]
        tried = []
        for v in cell:
            if tried and self._pruned(v, tried, path):
                continue
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            _refine(self.adj, self.weights, child, [1 << v])
            self._search(child, path + [v])
            tried.append(v)

    def _pruned(self, v, tried, path):
        for aut in self.auts:
            fixes = True
            for p in path:
                if aut[p] != p:
                    fixes = False
                    break
            if not fixes:
                continue
            for w in tried:
                if aut[w] == v:
                    return True
        return False


def _weight_matrix(ecg: EdgeColoredGraph):
    sizes = ecg.class_sizes()
    w = [[0] * ecg.n for _ in range(ecg.n)]
    for (u, v), c in ecg.color.items():
        w[u][v] = w[v][u] = sizes[c]
    return w


def canonical_labeling(x: Graph | EdgeColoredGraph):
    """Return (lab, code, automorphism generators).

    lab[i] is the vertex placed at position i of the canonical form; the
    generators are (colored, when x is colored) automorphisms of x.
    """
    g = x.graph if isinstance(x, EdgeColoredGraph) else x
    m = len(g.edges)
    if m in (0, g.n * (g.n - 1) // 2) and (not isinstance(x, EdgeColoredGraph) or m == 0):
        # Empty or complete uncolored graphs: every labeling is canonical
        # and the automorphism group is all of S_n.  The generic search
        # degenerates badly on this fully symmetric case.
        lab = tuple(range(g.n))
        colors = x.color if isinstance(x, EdgeColoredGraph) else None
        code = _CanonSearch(g.n, g.adj, colors=colors)._encode(lab)
        gens = [
            tuple(range(i)) + (i + 1, i) + tuple(range(i + 2, g.n))
            for i in range(g.n - 1)
        ]
        return lab, code, gens
    if isinstance(x, EdgeColoredGraph):
        search = _CanonSearch(
            x.n, x.graph.adj, weights=_weight_matrix(x), colors=x.color
        )
    else:
        search = _CanonSearch(x.n, x.adj)
    return search.run()


def canonical_code(x: Graph | EdgeColoredGraph) -> bytes:
    """Total-order key, invariant under vertex relabeling and (for colored
    graphs) color renaming.  Bounded to n <= 12."""
    if x.n > CANON_MAX_VERTICES:
        raise ResourceLimitError(
            f"canonical code limited to {CANON_MAX_VERTICES} vertices, got {x.n}"
        )
    _, code, _ = canonical_labeling(x)
    nbits = x.n * (x.n - 1) // 2
    adj_bytes = code[0].to_bytes((nbits + 7) // 8 or 1, "big")
    if isinstance(x, EdgeColoredGraph):
        rgs = bytes(code[1]) if all(c < 256 for c in code[1]) else repr(code[1]).encode()
        return b"C%d:" % x.n + adj_bytes + b":" + rgs
    return b"G%d:" % x.n + adj_bytes


def graph_code(g: Graph) -> bytes:
    """Canonical code without the n <= 12 public bound (internal use)."""
    _, code, _ = canonical_labeling(g)
    nbits = g.n * (g.n - 1) // 2
    return b"G%d:" % g.n + code[0].to_bytes((nbits + 7) // 8 or 1, "big")


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    _, _, auts = canonical_labeling(g)
    return auts


def _close_group(generators, identity):
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for gen in generators:
                q = tuple(p[g] for g in gen)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
                    if len(group) > _GROUP_CAP:
                        raise ResourceLimitError("automorphism group too large")
        frontier = nxt
    return group


def edge_automorphism_group(g: Graph) -> list[tuple[int, ...]]:
    """All permutations of edge indices induced by Aut(g).

    Closing over edge permutations (rather than vertex permutations)
    keeps factors from isolated-vertex symmetries out of the group.
    """
    index = {e: i for i, e in enumerate(g.edges)}
    edge_gens = set()
    for aut in automorphism_generators(g):
        perm = [0] * g.m
        for i, (u, v) in enumerate(g.edges):
            a, b = aut[u], aut[v]
            perm[i] = index[(a, b) if a < b else (b, a)]
        edge_gens.add(tuple(perm))
    identity = tuple(range(g.m))
    return sorted(_close_group(edge_gens, identity))
