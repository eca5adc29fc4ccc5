"""
Checking good colorings of K10
==============================

Three explicit colorings of K10 avoid a monochromatic 4-cycle and a
rainbow triangle-with-pendant. We build them, re-check them with the
detectors, and write one to disk as a certificate.
"""

from mixedramsey import Coloring, construct, is_good, parse_pattern, save_coloring, load_coloring

g, h = parse_pattern("C4"), parse_pattern("K3+e")

for name in ("star", "k10_eight", "k10_seven"):
    c = construct.star_coloring(10) if name == "star" else getattr(construct, name)()
    print(f"{name:10s} colors={c.num_colors} good={is_good(c, g, h).good}")

# The certificate file is plain text, one edge per line.
save_coloring(construct.k10_eight(), "/tmp/k10_eight.col")
again = load_coloring("/tmp/k10_eight.col")
print("round trip equal:", again == construct.k10_eight())

# Without the star structure a big class soon holds a 4-cycle; the verdict shows where.
bad = Coloring.from_function(10, lambda u, v: 1 if u <= 2 else 2)
verdict = is_good(bad, g, h)
print("two blocks good?", verdict.good)
print("witness:", verdict.mono_witness)
