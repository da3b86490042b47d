"""Rainbow-clique and subgraph detection.

A rainbow k-clique is a set of k pairwise-adjacent vertices whose
k(k-1)/2 induced edges carry pairwise-distinct colors.  The search
extends a partial clique vertex by vertex, maintaining the set of used
colors; a vertex is rejected as soon as two of its edges into the clique
collide (or hit the forbidden color), and a branch is cut when the
candidate pool cannot fill the clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .errors import ParameterError, ResourceLimitError
from .graphs import EdgeColoredGraph, Graph, iter_bits
from .reports import VerificationReport, fail, ok

PATTERN_MAX_VERTICES = 12
_ENUM_THRESHOLD = 20000


@dataclass(frozen=True)
class RainbowCliqueQuery:
    k: int
    forbidden_vertex: Optional[int] = None
    forbidden_color: Optional[int] = None

    def validate(self, n: int) -> None:
        if self.k < 1:
            raise ParameterError("clique order must be >= 1")
        if self.forbidden_vertex is not None and not 0 <= self.forbidden_vertex < n:
            raise ParameterError("forbidden vertex out of range")


class _ColoredView:
    """Adjacency and color lookup for an ECG, optionally with one virtual
    extra edge (u, v, c) layered on top."""

    def __init__(self, ecg: EdgeColoredGraph, extra_edge=None):
        self.n = ecg.n
        self.adj = list(ecg.graph.adj)
        self.color = ecg.color
        self.extra = None
        if extra_edge is not None:
            u, v, c = extra_edge
            if ecg.graph.has_edge(u, v):
                raise ParameterError(f"({u},{v}) is already an edge")
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
            self.extra = ((u, v) if u < v else (v, u), c)

    def col(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        if self.extra is not None and e == self.extra[0]:
            return self.extra[1]
        return self.color[e]


def _degeneracy_order(view: _ColoredView, allowed_mask: int) -> list[int]:
    """Greedy color-degeneracy ordering: repeatedly remove the vertex with
    the fewest distinct colors toward the rest; returns removal order
    reversed (dense vertices first).  Deterministic via index tiebreak."""
    remaining = allowed_mask
    order = []
    while remaining:
        best_v, best_key = -1, None
        for v in iter_bits(remaining):
            ncolors = len({view.col(v, u) for u in iter_bits(view.adj[v] & remaining & ~(1 << v))})
            key = (ncolors, v)
            if best_key is None or key < best_key:
                best_key, best_v = key, v
        order.append(best_v)
        remaining &= ~(1 << best_v)
    order.reverse()
    return order


def _find_rainbow_clique(
    view: _ColoredView,
    k: int,
    forbidden_vertex: Optional[int] = None,
    forbidden_color: Optional[int] = None,
    required: tuple[int, ...] = (),
) -> Optional[tuple[int, ...]]:
    """One rainbow k-clique containing all of `required`, or None."""
    n = view.n
    allowed = (1 << n) - 1
    if forbidden_vertex is not None:
        allowed &= ~(1 << forbidden_vertex)

    clique = list(required)
    used: set[int] = set()
    cand = allowed
    for i, u in enumerate(clique):
        if not allowed >> u & 1:
            return None
        cand &= view.adj[u]
        for v in clique[i + 1 :]:
            if not view.adj[u] >> v & 1:
                return None
        for v in clique[i + 1 :]:
            c = view.col(u, v)
            if c in used or c == forbidden_color:
                return None
            used.add(c)
    for u in clique:
        cand &= ~(1 << u)
    need = k - len(clique)
    if need < 0:
        return None
    if need == 0:
        return tuple(sorted(clique))

    pool = list(iter_bits(cand))
    if comb(len(pool), need) <= _ENUM_THRESHOLD:
        # Small pool: scan k-subsets directly in lexicographic order.
        for extra in combinations(pool, need):
            if _is_rainbow_clique(view, clique, extra, used, forbidden_color):
                return tuple(sorted(clique + list(extra)))
        return None

    order = _degeneracy_order(view, cand)
    rank = {v: i for i, v in enumerate(order)}

    def extend(current, used_colors, cand_mask, min_rank):
        if len(current) == k:
            return tuple(sorted(current))
        if len(current) + cand_mask.bit_count() < k:
            return None
        for v in order[min_rank:]:
            if not cand_mask >> v & 1:
                continue
            new_colors = []
            bad = False
            for u in current:
                c = view.col(u, v)
                if c == forbidden_color or c in used_colors or c in new_colors:
                    bad = True
                    break
                new_colors.append(c)
            if bad:
                continue
            found = extend(
                current + [v],
                used_colors | set(new_colors),
                cand_mask & view.adj[v],
                rank[v] + 1,
            )
            if found is not None:
                return found
        return None

    return extend(clique, used, cand, 0)


def _is_rainbow_clique(view, base, extra, base_used, forbidden_color):
    verts = list(base) + list(extra)
    seen = set(base_used)
    for i, u in enumerate(verts):
        au = view.adj[u]
        for v in verts[i + 1 :]:
            if not au >> v & 1:
                return False
            if u in base and v in base:
                continue
            c = view.col(u, v)
            if c == forbidden_color or c in seen:
                return False
            seen.add(c)
    return True


def contains_rainbow_clique(
    ecg: EdgeColoredGraph, query: RainbowCliqueQuery
) -> VerificationReport:
    query.validate(ecg.n)
    view = _ColoredView(ecg)
    found = _find_rainbow_clique(
        view,
        query.k,
        forbidden_vertex=query.forbidden_vertex,
        forbidden_color=query.forbidden_color,
    )
    if found is None:
        return fail(note=f"no rainbow {query.k}-clique")
    return ok(witness=found)


def rainbow_clique_number(ecg: EdgeColoredGraph) -> int:
    """Order of a largest rainbow clique (0 only for the empty graph)."""
    view = _ColoredView(ecg)
    best = 0
    k = 1
    while k <= ecg.n:
        if _find_rainbow_clique(view, k) is None:
            break
        best = k
        k += 1
    return best


def list_rainbow_cliques(ecg: EdgeColoredGraph, k: int) -> list[tuple[int, ...]]:
    """All vertex sets inducing a rainbow k-clique, lexicographically."""
    if k < 1:
        raise ParameterError("clique order must be >= 1")
    view = _ColoredView(ecg)
    out = []

    def extend(current, used_colors, cand_mask):
        if len(current) == k:
            out.append(tuple(current))
            return
        if len(current) + cand_mask.bit_count() < k:
            return
        for v in iter_bits(cand_mask):
            new_colors = []
            bad = False
            for u in current:
                c = view.col(u, v)
                if c in used_colors or c in new_colors:
                    bad = True
                    break
                new_colors.append(c)
            if bad:
                continue
            higher = cand_mask & ~((2 << v) - 1)
            extend(current + [v], used_colors | set(new_colors), higher & view.adj[v])

    extend([], set(), (1 << ecg.n) - 1)
    return out


# ---------------------------------------------------------------------------
# Uncolored clique machinery


def _max_clique(adj, cand_mask, floor=0):
    """Exact maximum clique size within cand_mask via branch and bound."""
    best = floor

    def bb(size, cand):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            bb(size + 1, cand & adj[v])

    bb(0, cand_mask)
    return best


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return _max_clique(g.adj, (1 << g.n) - 1, floor=1 if g.n else 0)


def has_clique(adj, cand_mask: int, size: int) -> bool:
    """True iff cand_mask spans a clique of the given size."""
    if size <= 0:
        return True

    def bb(need, cand):
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if cand.bit_count() + 1 < need:
                return False
            if bb(need - 1, cand & adj[v]):
                return True
        return False

    return bb(size, cand_mask)


# ---------------------------------------------------------------------------
# Subgraph containment (not necessarily induced)


def _embed(g: Graph, h: Graph, pre: dict[int, int]) -> Optional[tuple[int, ...]]:
    """Extend the partial map pre (h-vertex -> g-vertex) to a full
    subgraph embedding; returns the image tuple indexed by h-vertex."""
    order = [v for v in sorted(range(h.n), key=lambda v: -h.degree(v)) if v not in pre]
    assign = dict(pre)
    used = set(pre.values())

    def backtrack(i):
        if i == len(order):
            return True
        hv = order[i]
        for gv in range(g.n):
            if gv in used:
                continue
            okv = True
            for hu in iter_bits(h.adj[hv]):
                if hu in assign and not g.has_edge(assign[hu], gv):
                    okv = False
                    break
            if not okv:
                continue
            assign[hv] = gv
            used.add(gv)
            if backtrack(i + 1):
                return True
            del assign[hv]
            used.remove(gv)
        return False

    for hu, gu in pre.items():
        for hv, gv in pre.items():
            if hu < hv and h.has_edge(hu, hv) and not g.has_edge(gu, gv):
                return None
    if backtrack(0):
        return tuple(assign[v] for v in range(h.n))
    return None


def _is_complete(h: Graph) -> bool:
    return h.m == h.n * (h.n - 1) // 2


def contains_subgraph(g: Graph, h: Graph) -> VerificationReport:
    """Does h embed into g as a (not necessarily induced) subgraph?"""
    if h.n > PATTERN_MAX_VERTICES:
        raise ResourceLimitError(
            f"pattern limited to {PATTERN_MAX_VERTICES} vertices, got {h.n}"
        )
    if h.n > g.n or h.m > g.m:
        return fail(note="pattern larger than host")
    if _is_complete(h):
        if has_clique(g.adj, (1 << g.n) - 1, h.n):
            return ok(witness=_embed(g, h, {}))
        return fail(note=f"no K_{h.n}")
    image = _embed(g, h, {})
    if image is None:
        return fail(note="no embedding")
    return ok(witness=image)


def contains_subgraph_using_edge(g: Graph, h: Graph, e: tuple[int, int]) -> bool:
    """Is there a copy of h in g in which some h-edge lands on e?"""
    u, v = e
    if not g.has_edge(u, v):
        return False
    if _is_complete(h):
        if h.n < 2:
            return False
        return has_clique(g.adj, g.adj[u] & g.adj[v], h.n - 2)
    for a, b in h.edges:
        if _embed(g, h, {a: u, b: v}) is not None:
            return True
        if _embed(g, h, {a: v, b: u}) is not None:
            return True
    return False
