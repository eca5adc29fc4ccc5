"""Explicit good colorings: the two K10 colorings with 8 and 7 colors, the
smaller-endpoint star coloring, the matching-Ramsey extremal coloring and
the iterated pentagon blow-up for triangles."""

from __future__ import annotations

from .graph import Coloring

__all__ = ["star_coloring", "k10_eight", "k10_seven", "matching_extremal", "pentagon_power"]


def star_coloring(n: int) -> Coloring:
    """Color ``v_i v_j`` (``i < j``) by ``i``: ``n - 1`` star classes, no rainbow triangle."""
    if n < 2:
        raise ValueError("star_coloring needs n >= 2")
    return Coloring.from_function(n, lambda u, v: u)


def k10_eight() -> Coloring:
    """Stars at ``v_1..v_7`` plus a color-8 triangle on ``v_8 v_9 v_10``."""
    return Coloring.from_function(10, lambda u, v: u if u <= 7 else 8)


_PENTAGON_6_10 = {(6, 7), (7, 8), (8, 9), (9, 10), (6, 10)}


def k10_seven() -> Coloring:
    """Stars at ``v_1..v_5``, color 6 on the 5-cycle ``v_6..v_10``, color 7 on its complement."""

    def color(u: int, v: int) -> int:
        if u <= 5:
            return u
        return 6 if (u, v) in _PENTAGON_6_10 else 7

    return Coloring.from_function(10, color)


def matching_extremal(ell: int, k: int) -> Coloring:
    """K_{2l-1} in color 1, then ``k-1`` batches of ``l-1`` vertices.

    Every edge touching batch ``j`` (and no later batch) gets color ``j+1``.
    The result has ``2l - 1 + (k-1)(l-1)`` vertices.
    """
    if ell < 2 or k < 1:
        raise ValueError("matching_extremal needs ell >= 2 and k >= 1")
    base = 2 * ell - 1
    n = base + (k - 1) * (ell - 1)

    def batch(w: int) -> int:
        return 1 if w <= base else 2 + (w - base - 1) // (ell - 1)

    return Coloring.from_function(n, lambda u, v: batch(v))


def _pentagon_layers(k: int) -> tuple[int, list[list[int]]]:
    """Size and color matrix (0-based vertices, raw labels 1..k) of the k-color blow-up."""
    if k % 2:
        size, mat = 2, [[0, 1], [1, 0]]
        base_colors = 1
    else:
        size = 5
        mat = [[0] * 5 for _ in range(5)]
        for i in range(5):
            for j in range(5):
                if i != j:
                    mat[i][j] = 1 if (i - j) % 5 in (1, 4) else 2
        base_colors = 2
    for low in range(base_colors, k, 2):
        cyc, chord = low + 1, low + 2
        m = size
        new = [[0] * (5 * m) for _ in range(5 * m)]
        for x in range(5 * m):
            bx, ix = divmod(x, m)
            for y in range(5 * m):
                by, iy = divmod(y, m)
                if bx == by:
                    new[x][y] = mat[ix][iy]
                else:
                    new[x][y] = cyc if (bx - by) % 5 in (1, 4) else chord
        size, mat = 5 * m, new
    return size, mat


def pentagon_power(k: int) -> Coloring:
    """A ``k``-coloring of ``K_{lambda(k)}`` with no monochromatic and no rainbow triangle.

    Odd ``k`` starts from a one-colored ``K_2``, even ``k`` from ``K_5`` split
    into two 5-cycles.  Each step substitutes the current coloring into the
    five vertices of that ``K_5`` pattern, using two fresh colors (the two
    largest labels) on edges between blobs.  Blob ``b`` occupies the vertex
    block ``[(b-1)m + 1, bm]``.
    """
    if k < 1:
        raise ValueError("pentagon_power needs k >= 1")
    size, mat = _pentagon_layers(k)
    return Coloring.from_function(size, lambda u, v: mat[u - 1][v - 1])
