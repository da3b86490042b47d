"""Membership predicates for the graph families behind f(k), g(k), g'(k).

The central family collects edge-colored graphs Gamma such that
  (P1) Gamma has no rainbow (k+1)-clique,
  (P2) every vertex-deleted subgraph Gamma - v still has a rainbow
       k-clique, and
  (P3) for every color c present in Gamma some rainbow k-clique avoids c.

Also here: the clique/matching predicates used by the semisaturation
stability arguments (graphs whose clique number survives vertex
deletions and whose complement carries a large matching).
"""

from __future__ import annotations

from functools import lru_cache

from .cliques import RainbowCliqueQuery, clique_number, contains_rainbow_clique
from .errors import ParameterError
from .graphs import EdgeColoredGraph, Graph, complement, iter_bits
from .reports import VerificationReport, fail, ok


def in_family_Fhat(gamma: EdgeColoredGraph, k: int) -> VerificationReport:
    """Check properties P1-P3 above; the failure witness names the violated
    property and the offending vertex or color."""
    if k < 1:
        raise ParameterError("k must be >= 1")
    big = contains_rainbow_clique(gamma, RainbowCliqueQuery(k + 1))
    if big:
        return fail(witness=("P1", big.witness), note=f"rainbow {k + 1}-clique present")
    for v in range(gamma.n):
        if not contains_rainbow_clique(gamma, RainbowCliqueQuery(k, forbidden_vertex=v)):
            return fail(witness=("P2", v), note=f"no rainbow {k}-clique avoiding vertex {v}")
    for c in range(gamma.num_colors):
        if not contains_rainbow_clique(gamma, RainbowCliqueQuery(k, forbidden_color=c)):
            return fail(witness=("P3", c), note=f"no rainbow {k}-clique avoiding color {c}")
    return ok()


# ---------------------------------------------------------------------------
# Matchings (tiny graphs; memoized bitmask recursion is exact on any graph)


def max_matching_size(g: Graph) -> int:
    """Maximum matching size, exact for general (non-bipartite) graphs."""
    adj = g.adj

    @lru_cache(maxsize=None)
    def rec(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        u = low.bit_length() - 1
        rest = mask ^ low
        best = rec(rest)  # u unmatched
        for v in iter_bits(adj[u] & rest):
            best = max(best, 1 + rec(rest & ~(1 << v)))
        return best

    result = rec((1 << g.n) - 1)
    rec.cache_clear()
    return result


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and max_matching_size(g) == g.n // 2


def in_family_F_doubleprime(g: Graph, r: int) -> bool:
    """Graphs on 2(r-2) vertices with clique number r-2 whose complement
    has a perfect matching (the cores of the semisaturation extremal
    constructions)."""
    if r < 3:
        raise ParameterError("r must be >= 3")
    return (
        g.n == 2 * (r - 2)
        and clique_number(g) == r - 2
        and has_perfect_matching(complement(g))
    )


def lemma2_hypothesis(g: Graph) -> bool:
    """Does the clique number survive deleting any single vertex?"""
    w = clique_number(g)
    return all(clique_number(g.delete_vertices([v])) == w for v in range(g.n))


def lemma2_conclusion(g: Graph) -> bool:
    """Does the complement contain a matching of size omega(g)?"""
    return max_matching_size(complement(g)) >= clique_number(g)


def robust_clique_check(g: Graph, t: int) -> bool:
    """True iff omega(g - S) = omega(g) for every vertex set S, |S| <= t."""
    if t < 0:
        raise ParameterError("t must be >= 0")
    from itertools import combinations

    w = clique_number(g)
    for size in range(1, min(t, g.n) + 1):
        for S in combinations(range(g.n), size):
            if clique_number(g.delete_vertices(S)) != w:
                return False
    return True
