"""Monochromatic and rainbow copies of small patterns inside edge-colorings.

All detectors work on non-induced copies and search every injective vertex
map.  Pattern vertices are placed in label order ``1..p`` and host vertices
are tried in increasing order, so the first witness found is the one with
the lexicographically least ``vertex_map``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

from .graph import Coloring, Edge, Pattern

__all__ = [
    "Embedding",
    "Verdict",
    "PartialColoring",
    "find_monochromatic",
    "find_rainbow",
    "is_good",
    "violations_containing_edge",
]


@dataclass(frozen=True)
class Embedding:
    """A copy of ``pattern`` in a host: pattern vertex ``i`` goes to ``vertex_map[i-1]``."""

    pattern: Pattern
    vertex_map: tuple[int, ...]
    edge_colors: tuple[int, ...]

    @property
    def host_edges(self) -> list[Edge]:
        vm = self.vertex_map
        return [tuple(sorted((vm[a - 1], vm[b - 1]))) for a, b in self.pattern.edges]

    def is_monochromatic(self) -> bool:
        return len(set(self.edge_colors)) == 1

    def is_rainbow(self) -> bool:
        return len(set(self.edge_colors)) == len(self.edge_colors)

    def agrees_with(self, coloring: Coloring) -> bool:
        """Injective, in range, and ``edge_colors`` match the host."""
        vm = self.vertex_map
        if len(vm) != self.pattern.vertex_count or len(set(vm)) != len(vm):
            return False
        if any(not 1 <= x <= coloring.n for x in vm):
            return False
        return all(coloring.color(u, v) == c for (u, v), c in zip(self.host_edges, self.edge_colors))

    def __str__(self) -> str:
        return f"{self.pattern} at vertices {' '.join(map(str, self.vertex_map))} colors {' '.join(map(str, self.edge_colors))}"


@dataclass(frozen=True)
class Verdict:
    mono_witness: Optional[Embedding] = None
    rainbow_witness: Optional[Embedding] = None

    @property
    def good(self) -> bool:
        return self.mono_witness is None and self.rainbow_witness is None

    def __bool__(self) -> bool:
        return self.good


@dataclass(frozen=True)
class PartialColoring:
    """Some edges of ``K_n`` colored; ``assigned`` maps ``(u, v)`` with ``u < v`` to a color."""

    n: int
    assigned: Mapping[Edge, int]

    @classmethod
    def prefix(cls, coloring: Coloring, edges: Sequence[Edge]) -> "PartialColoring":
        return cls(coloring.n, {e: coloring.color(*e) for e in edges})

    def matrix(self) -> list[list[int]]:
        mat = [[0] * (self.n + 1) for _ in range(self.n + 1)]
        for (u, v), c in self.assigned.items():
            mat[u][v] = mat[v][u] = c
        return mat


def _maps(
    mat: list[list[int]],
    n: int,
    pattern: Pattern,
    mono: bool,
    pinned: Mapping[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield vertex maps of monochromatic/rainbow copies in lexicographic order.

    ``mat[u][v] == 0`` marks an uncolored pair; such pairs never carry a
    pattern edge.
    """
    p = pattern.vertex_count
    if p > n:
        return
    adj = pattern.neighbors()
    back = [sorted(j for j in adj[i] if j < i) for i in range(p + 1)]
    pinned = dict(pinned or {})
    reserved = set(pinned.values())
    vm = [0] * (p + 1)
    used = [False] * (n + 1)

    def rec(i: int, target: int, seen: frozenset) -> Iterator[tuple[int, ...]]:
        if i > p:
            yield tuple(vm[1:])
            return
        if i in pinned:
            candidates: Sequence[int] = (pinned[i],)
        else:
            candidates = range(1, n + 1)
        for x in candidates:
            if used[x] or (x in reserved and i not in pinned):
                continue
            row = mat[x]
            t = target
            ok = True
            if mono:
                for j in back[i]:
                    c = row[vm[j]]
                    if c == 0 or (t and c != t):
                        ok = False
                        break
                    t = c
                nseen = seen
            else:
                added = []
                for j in back[i]:
                    c = row[vm[j]]
                    if c == 0 or c in seen or c in added:
                        ok = False
                        break
                    added.append(c)
                nseen = seen.union(added) if added else seen
            if not ok:
                continue
            vm[i] = x
            used[x] = True
            yield from rec(i + 1, t, nseen)
            used[x] = False

    yield from rec(1, 0, frozenset())


def _embedding(mat, pattern: Pattern, vertex_map: tuple[int, ...]) -> Embedding:
    colors = tuple(mat[vertex_map[a - 1]][vertex_map[b - 1]] for a, b in pattern.edges)
    return Embedding(pattern, vertex_map, colors)


def _require_edges(pattern: Pattern, role: str) -> None:
    if pattern.edge_count == 0:
        raise ValueError(f"{role} pattern has no edges")


def find_monochromatic(coloring: Coloring, g: Pattern) -> Optional[Embedding]:
    """Lexicographically least monochromatic copy of ``g``, or ``None``."""
    _require_edges(g, "monochromatic")
    mat = coloring.matrix()
    for vm in _maps(mat, coloring.n, g, mono=True):
        return _embedding(mat, g, vm)
    return None


def find_rainbow(coloring: Coloring, h: Pattern) -> Optional[Embedding]:
    """Lexicographically least rainbow copy of ``h``, or ``None``."""
    _require_edges(h, "rainbow")
    if h.edge_count > coloring.num_colors:
        return None
    mat = coloring.matrix()
    for vm in _maps(mat, coloring.n, h, mono=False):
        return _embedding(mat, h, vm)
    return None


def is_good(coloring: Coloring, g: Pattern, h: Pattern) -> Verdict:
    """``(g, h)``-goodness with witnesses for whatever is violated."""
    return Verdict(find_monochromatic(coloring, g), find_rainbow(coloring, h))


def _copy_through_edge(mat, n: int, pattern: Pattern, e: Edge, mono: bool) -> Optional[Embedding]:
    u, v = e
    for a, b in pattern.edges:
        for x, y in ((u, v), (v, u)):
            for vm in _maps(mat, n, pattern, mono, pinned={a: x, b: y}):
                return _embedding(mat, pattern, vm)
    return None


def violations_containing_edge(partial: PartialColoring | Coloring, e: Edge, g: Pattern, h: Pattern) -> bool:
    """True iff a monochromatic ``g`` or rainbow ``h`` uses edge ``e`` and only colored edges."""
    _require_edges(g, "monochromatic")
    _require_edges(h, "rainbow")
    u, v = min(e), max(e)
    mat = partial.matrix()
    if not 1 <= u < v <= partial.n or mat[u][v] == 0:
        raise ValueError(f"edge {e} is not colored")
    if _copy_through_edge(mat, partial.n, g, (u, v), mono=True):
        return True
    if isinstance(partial, Coloring):
        ncolors = partial.num_colors
    else:
        ncolors = len(set(partial.assigned.values()))
    if h.edge_count > ncolors:
        return False
    return _copy_through_edge(mat, partial.n, h, (u, v), mono=False) is not None
