"""Tour of the explicit constructions, each checked by its verifier.

Builds the complete-join upper-bound graphs for r = 3, 4, 5, the
alternative 5-clique construction, the subdivision-based family members
for larger k, and the non-stability assemblies that realize many edge
counts at once — printing edge counts next to their closed forms.
"""

from math import comb

from rsat.constructions import (
    alt_k5,
    gamma_rn,
    nonstab_assemble,
    subdivision_gamma,
)
from rsat.errors import InfeasibleError
from rsat.families import in_family_Fhat
from rsat.saturation import is_rainbow_saturated

print("== complete-join construction (rainbow saturated) ==")
for r, form in [(3, "2n-4"), (4, "3n-6"), (5, "5n-16")]:
    for n in range(r + 4, r + 7):
        gamma = gamma_rn(r, n)
        assert is_rainbow_saturated(gamma, r)
        print(f"  r={r} n={n:2d}: {gamma.m} edges  ({form})")

print("== alternative construction for 5-cliques ==")
for n in (9, 11, 13):
    gamma = alt_k5(n)
    assert is_rainbow_saturated(gamma, 5)
    print(f"  n={n}: {gamma.m} edges  (5n-16 = {5 * n - 16})")

print("== subdivision-based family members ==")
for k in range(4, 9):
    gamma = subdivision_gamma(k)
    assert in_family_Fhat(gamma, k)
    print(f"  k={k}: {gamma.n} vertices, {gamma.m} edges, {gamma.num_colors} colors")

print("== non-stability: many edge counts at n=12, r=3 ==")
for m in range(2 * 12 - 4, comb(12, 2) + 1):
    try:
        gamma = nonstab_assemble(3, 12, m)
    except InfeasibleError:
        continue
    print(f"  m={m}: verified rainbow-K_3-saturated on 12 vertices")
