"""Goodness-preserving operations on colorings.

* :func:`merge_star_classes` fuses two color classes that are stars with a
  common center; for ``G`` not a star the result stays ``(G, H)``-good.
* :func:`delete_vertex` restricts to ``K_{n-1}``; goodness always survives.
* :func:`extend_new_color` adds a vertex joined to everything in a fresh
  color; goodness survives when ``G`` is not a star and ``H`` has minimum
  degree at least 2.
"""

from __future__ import annotations

from .graph import Coloring, color_census

__all__ = ["TransformError", "star_centers", "merge_star_classes", "delete_vertex", "extend_new_color"]


class TransformError(ValueError):
    pass


def star_centers(coloring: Coloring, color: int) -> frozenset[int]:
    """Vertices that every edge of the class touches (empty if the class is not a star)."""
    edges = coloring.color_classes().get(color)
    if not edges:
        raise TransformError(f"color {color} is not used")
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
    return frozenset(common)


def merge_star_classes(coloring: Coloring, a: int, b: int) -> Coloring:
    if a == b:
        raise TransformError("cannot merge a color class with itself")
    ca, cb = star_centers(coloring, a), star_centers(coloring, b)
    if not ca:
        raise TransformError(f"color class {a} is not a star")
    if not cb:
        raise TransformError(f"color class {b} is not a star")
    if not ca & cb:
        raise TransformError(f"color classes {a} and {b} are stars with different centers")
    return Coloring(coloring.n, tuple(a if c == b else c for c in coloring.colors))


def delete_vertex(coloring: Coloring, x: int) -> Coloring:
    """Coloring of ``K_{n-1}`` on the other vertices, relabeled in order."""
    n = coloring.n
    if n == 1:
        raise TransformError("cannot delete the only vertex")
    if not 1 <= x <= n:
        raise TransformError(f"vertex {x} outside 1..{n}")
    kept = [(u, v, c) for (u, v), c in coloring.items() if x not in (u, v)]
    shift = lambda w: w - 1 if w > x else w  # noqa: E731
    mapping = {(shift(u), shift(v)): c for u, v, c in kept}
    return Coloring.from_mapping(n - 1, mapping)


def extend_new_color(coloring: Coloring) -> Coloring:
    """Append vertex ``n+1``; all its edges get one new color."""
    n, fresh = coloring.n, coloring.num_colors + 1
    old = coloring.matrix()
    return Coloring.from_function(n + 1, lambda u, v: fresh if v == n + 1 else old[u][v])


def deletion_color_drop(coloring: Coloring, x: int) -> int:
    """How many colors :func:`delete_vertex` loses at ``x`` (the private colors of ``x``)."""
    return len(color_census(coloring, x).private_colors)
