"""Walk through the small exact values by exhaustive search.

Recomputes the minimum vertex counts f(k) of the structured family, the
minimum edge counts g(k)/g'(k) on that many vertices, and brute-force
saturation numbers, cross-checking each against its closed form.  Runs
in a couple of minutes; results land in .rsat-cache/ as replayable
records.
"""

from rsat.graphs import complete_graph
from rsat.search import (
    ResultCache,
    compute_f,
    compute_g_gprime,
    compute_sat,
    compute_sat_rainbow,
)

cache = ResultCache()

print("== minimum vertices f(k) ==")
for k in (1, 2, 3):
    rec = compute_f(k, cache=cache)
    print(f"  f({k}) = {rec.value}   [{rec.elapsed_ms} ms, witness {rec.witness}]")
print("  f(4) =", compute_f(4, cache=cache).value, "  (derived: bounds coincide)")

print("== minimum edges on f(k) vertices ==")
for k in (1, 2, 3):
    rec_g, rec_gp = compute_g_gprime(k, cache=cache)
    print(f"  g({k}) = {rec_g.value}   g'({k}) = {rec_gp.value}")

print("== plain saturation numbers, brute force vs closed form ==")
for n in range(3, 9):
    rec = compute_sat(n, complete_graph(3), cache=cache)
    print(f"  sat({n}, K3) = {rec.value}   closed form n-1 = {n - 1}")

print("== rainbow saturation numbers for triangles ==")
for n in (4, 5, 6):
    rec = compute_sat_rainbow(n, 3, cache=cache)
    print(f"  rsat({n}, K3) = {rec.value}   closed form 2n-4 = {2 * n - 4}")
