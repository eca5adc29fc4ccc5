"""
Moving between color counts
===========================

Three local operations shift a good coloring to a neighboring count:
merging two star classes with a shared center, deleting a vertex, and
adding a vertex whose edges all get a fresh color.
"""

from mixedramsey import Coloring, construct, is_good, parse_pattern as P
from mixedramsey.graph import color_census
from mixedramsey.transform import deletion_color_drop, delete_vertex, extend_new_color, merge_star_classes

g, h = P("C4"), P("K3")
c = construct.star_coloring(6)
print("start:", c.num_colors, "colors")

# Two classes hanging off vertex 1 can be fused into one star.
two_stars = Coloring.from_mapping(4, {(1, 2): 1, (1, 3): 2, (1, 4): 2, (2, 3): 3, (2, 4): 3, (3, 4): 3})
print("before merge:", two_stars.num_colors, is_good(two_stars, g, P("C4")).good)
merged = merge_star_classes(two_stars, 1, 2)
print("after merge:", merged.num_colors, is_good(merged, g, P("C4")).good)

# The census at a vertex predicts how many colors deletion loses.
s = color_census(c, 1)
print("private at v1:", sorted(s.private_colors), "drop:", deletion_color_drop(c, 1))
print("delete v1:", delete_vertex(c, 1).num_colors)

bigger = extend_new_color(c)
print("extend:", bigger.n, "vertices,", bigger.num_colors, "colors", is_good(bigger, g, h).good)
