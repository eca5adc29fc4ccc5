"""
The gap in the K10 spectrum
===========================

For a monochromatic-C4-free, rainbow-(K3+e)-free coloring of K10 the
catalog lists the color counts {3, 7, 8, 9}. Search can confirm the low
end; the middle counts 4, 5, 6 are beyond an exhaustive desk search.
"""

from mixedramsey import parse_pattern as P
from mixedramsey.formulas import known_spectrum
from mixedramsey.search import Budget, existence, monotone_nonexistence

g, h = P("C4"), P("K3+e")
print(known_spectrum(10, g, h))

# Three colors: a witness turns up quickly.
res = existence(10, 3, g, h, Budget(nodes=10**6))
print("k=3:", res.status, res.nodes_explored, "nodes")

# Two colors: no good 2-coloring even of K6, so none of K10.
print("k=2:", monotone_nonexistence(10, 2, g, h, m=6))

# Four colors under a small budget: honestly unknown.
res = existence(10, 4, g, h, Budget(nodes=50_000))
print("k=4:", res.status, res.nodes_explored, "nodes")
