"""Saturation predicates, colored and uncolored.

Colored side: a graph is rainbow-K_r-saturated when it has no rainbow
K_r, yet adding any non-edge in any color creates one through the new
edge.  The universal color quantifier is finite: colors absent from the
graph are interchangeable, so it suffices to test the present colors
plus a single fresh one (`candidate_colors`).

Uncolored side: classical H-saturation plus the (H,k) variants where k
edges may first be removed and k+1 are then added.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .cliques import (
    RainbowCliqueQuery,
    _ColoredView,
    _find_rainbow_clique,
    contains_rainbow_clique,
    contains_subgraph,
    contains_subgraph_using_edge,
)
from .errors import ParameterError, ResourceLimitError
from .graphs import EdgeColoredGraph, Graph
from .reports import VerificationReport, fail, ok

FRESH = "fresh"
WEAK_MAX_NON_EDGES = 7
KSAT_DEFAULT_BUDGET = 10**8


def candidate_colors(gamma: EdgeColoredGraph) -> set[int]:
    """Present colors plus one fresh representative.

    Adding a fixed non-edge in color c creates a rainbow K_r for every
    color c iff it does for every member of this set: any two colors
    absent from the graph are swapped by a renaming that fixes it.
    """
    return set(range(gamma.num_colors + 1)) if gamma.m else {0}


def is_rfree(gamma: EdgeColoredGraph, r: int) -> VerificationReport:
    """No rainbow r-clique; witness is one if present."""
    found = contains_rainbow_clique(gamma, RainbowCliqueQuery(r))
    if found:
        return fail(witness=found.witness, note=f"rainbow {r}-clique present")
    return ok()


def _creates_through(gamma, u, v, c, r):
    """Does adding {u,v} in color c give a rainbow r-clique through it?"""
    view = _ColoredView(gamma, extra_edge=(u, v, c))
    return _find_rainbow_clique(view, r, required=(u, v)) is not None


def _witness_color(gamma, c):
    return c if c < gamma.num_colors else FRESH


def _semisat_violation(gamma, r, num_fresh=1):
    """First (non-edge, color) whose addition creates no rainbow r-clique
    through it, or None."""
    ncands = max(gamma.num_colors + num_fresh, 1)
    for u, v in gamma.graph.non_edges():
        for c in range(ncands):
            if not _creates_through(gamma, u, v, c, r):
                return ((u, v), c)
    return None


def is_rainbow_saturated(
    gamma: EdgeColoredGraph, r: int, num_fresh: int = 1
) -> VerificationReport:
    """Rainbow-K_r-free and every non-edge in every color completes one.

    num_fresh widens the fresh-color block beyond the single
    representative; the verdict must not depend on it.
    """
    if r < 2:
        raise ParameterError("r must be >= 2")
    free = is_rfree(gamma, r)
    if not free:
        return free
    bad = _semisat_violation(gamma, r, num_fresh)
    if bad is not None:
        (u, v), c = bad
        return fail(
            witness=((u, v), _witness_color(gamma, c)),
            note=f"adding ({u},{v}) in that color creates no rainbow {r}-clique",
        )
    return ok()


def is_rainbow_semisaturated(
    gamma: EdgeColoredGraph, r: int, num_fresh: int = 1
) -> VerificationReport:
    """Like is_rainbow_saturated but without requiring freeness."""
    if r < 2:
        raise ParameterError("r must be >= 2")
    bad = _semisat_violation(gamma, r, num_fresh)
    if bad is not None:
        (u, v), c = bad
        return fail(
            witness=((u, v), _witness_color(gamma, c)),
            note=f"adding ({u},{v}) in that color creates no rainbow {r}-clique",
        )
    return ok()


class _OverlayView:
    """Read view of an edge-colored graph plus several virtual edges."""

    def __init__(self, ecg: EdgeColoredGraph, extra: dict):
        self.n = ecg.n
        self.adj = list(ecg.graph.adj)
        self.color = ecg.color
        self.extra = extra
        for u, v in extra:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u

    def col(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        if e in self.extra:
            return self.extra[e]
        return self.color[e]


def is_weakly_rainbow_saturated(gamma: EdgeColoredGraph, r: int) -> VerificationReport:
    """Some ordering e_1..e_t of the non-edges works for every choice of
    pairwise-distinct colors c_1..c_t: adding e_i in c_i creates, at each
    step, a rainbow K_r through e_i.

    Colors are reduced to representatives: the present colors plus t
    fresh ones, fresh colors numbered in order of first use.
    """
    if r < 2:
        raise ParameterError("r must be >= 2")
    non_edges = gamma.graph.non_edges()
    t = len(non_edges)
    if t == 0:
        return ok(witness=(), note="no non-edges")
    # Semisaturation is stronger: each addition alone creates a copy
    # through the new edge, and extra edges never destroy that copy.
    semi = is_rainbow_semisaturated(gamma, r)
    if semi:
        return ok(witness=tuple(non_edges), note="rainbow-semisaturated")
    if t > WEAK_MAX_NON_EDGES:
        raise ResourceLimitError(
            f"weak saturation check limited to {WEAK_MAX_NON_EDGES} non-edges, got {t}"
        )
    base = gamma.num_colors

    def step_ok(assignment, e, c):
        overlay = dict(assignment)
        overlay[e] = c
        view = _OverlayView(gamma, overlay)
        return _find_rainbow_clique(view, r, required=e) is not None

    def search(prefix, remaining, assignments):
        if not remaining:
            return tuple(prefix)
        for e in list(remaining):
            extended = []
            viable = True
            for assignment in assignments:
                used = set(assignment.values())
                nfresh = sum(1 for c in used if c >= base)
                options = [c for c in range(base) if c not in used]
                options.append(base + nfresh)
                for c in options:
                    if not step_ok(assignment, e, c):
                        viable = False
                        break
                    nxt = dict(assignment)
                    nxt[e] = c
                    extended.append(nxt)
                if not viable:
                    break
            if not viable:
                continue
            found = search(prefix + [e], remaining - {e}, extended)
            if found is not None:
                return found
        return None

    ordering = search([], set(non_edges), [{}])
    if ordering is None:
        return fail(note="no admissible non-edge ordering")
    return ok(witness=ordering)


# ---------------------------------------------------------------------------
# Uncolored saturation


def is_sat(g: Graph, h: Graph) -> VerificationReport:
    """H-free, and every single-edge addition creates a copy through the
    new edge."""
    present = contains_subgraph(g, h)
    if present:
        return fail(witness=present.witness, note="pattern already present")
    for u, v in g.non_edges():
        if not contains_subgraph_using_edge(g.add_edge(u, v), h, (u, v)):
            return fail(witness=(u, v), note=f"adding ({u},{v}) creates no copy")
    return ok()


def is_k_sat(
    g: Graph, h: Graph, k: int, budget: int = KSAT_DEFAULT_BUDGET
) -> VerificationReport:
    """H-free, and removing any k edges then adding any k+1 absent pairs
    (removed edges may be re-added) yields a copy of h."""
    if k < 0:
        raise ParameterError("k must be >= 0")
    if g.m > 64:
        raise ResourceLimitError("edge-removal enumeration limited to 64 edges")
    # With fewer than k edges present, removing all of them is the
    # binding case (smaller removals are dominated by monotonicity).
    k = min(k, g.m)
    t = len(g.non_edges())
    cost = comb(g.m, k) * comb(t + k, k + 1)
    if cost > budget:
        raise ResourceLimitError(
            f"(H,k)-saturation enumeration needs {cost} cases, budget {budget}"
        )
    present = contains_subgraph(g, h)
    if present:
        return fail(witness=present.witness, note="pattern already present")
    for removed in combinations(g.edges, k):
        stripped = g
        for e in removed:
            stripped = stripped.remove_edge(*e)
        absent = stripped.non_edges()
        for added in combinations(absent, k + 1):
            cand = stripped
            for e in added:
                cand = cand.add_edge(*e)
            if not contains_subgraph(cand, h):
                return fail(
                    witness=(removed, added),
                    note="removal/addition avoids the pattern",
                )
    return ok()


def is_k_semisat(g: Graph, h: Graph, k: int) -> VerificationReport:
    """k=0: every pair addition creates a copy through the new pair.
    k=1: additionally every remove-one/add-two exchange leaves a copy
    through at least one added pair."""
    if k not in (0, 1):
        raise ParameterError("k must be 0 or 1")
    for u, v in g.non_edges():
        if not contains_subgraph_using_edge(g.add_edge(u, v), h, (u, v)):
            return fail(witness=(u, v), note=f"adding ({u},{v}) creates no copy")
    if k == 0:
        return ok()
    for e in g.edges:
        stripped = g.remove_edge(*e)
        absent = stripped.non_edges()
        for e1, e2 in combinations(absent, 2):
            cand = stripped.add_edge(*e1).add_edge(*e2)
            if not (
                contains_subgraph_using_edge(cand, h, e1)
                or contains_subgraph_using_edge(cand, h, e2)
            ):
                return fail(
                    witness=((e,), (e1, e2)),
                    note="exchange leaves no copy through an added pair",
                )
    return ok()
