"""
Spectra of small complete graphs
================================

The search walks every edge partition of K_n once, up to relabeling of
colors, and records which color counts admit a good coloring.
"""

from mixedramsey import parse_pattern as P
from mixedramsey.search import count_colorings, spectrum

# How many partitions are there? These are the Bell numbers of C(n, 2).
for n in range(2, 6):
    print(n, sum(count_colorings(n).values()))

# A full table for paths against rainbow triangles.
print(spectrum(5, P("P4"), P("K3")).format_table())

# A few more pairs, one line each.
for g, h in [("C4", "K3+e"), ("2K2", "K3"), ("C4", "C4")]:
    rep = spectrum(5, P(g), P(h))
    print(f"S(5; {g}, {h}) = {rep.format_set()}  ({rep.nodes_explored} nodes)")

# Each witness in the report is a coloring you can re-check independently.
rep = spectrum(6, P("P4"), P("K3"))
for k, st in sorted(rep.per_k.items()):
    if st.witness is not None:
        print(k, st.witness.colors)
