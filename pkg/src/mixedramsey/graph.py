"""Patterns, edge-colorings of complete graphs, and the certificate codec.

Vertices are 1-based everywhere in the public API.  Edges of ``K_n`` are
unordered pairs ``(u, v)`` with ``u < v`` and are enumerated in
lexicographic order; a :class:`Coloring` stores one color per edge in that
order, with labels renumbered ``1..k`` by first appearance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Pattern",
    "PatternError",
    "Coloring",
    "ColoringFormatError",
    "CensusSplit",
    "lex_edges",
    "edge_index",
    "parse_pattern",
    "recognize_tag",
    "complete",
    "triangle_plus_edge",
    "cycle",
    "path",
    "star",
    "matching",
    "color_census",
    "write_coloring",
    "read_coloring",
    "save_coloring",
    "load_coloring",
]

FORMAT_MAGIC = "mixedramsey v1"


class PatternError(ValueError):
    """Raised for malformed pattern expressions or edge lists."""


class ColoringFormatError(ValueError):
    """Raised when a certificate file or a color assignment is invalid."""


def lex_edges(n: int) -> list[Edge]:
    """All edges of ``K_n`` in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))


def edge_index(n: int, u: int, v: int) -> int:
    """Position of edge ``{u, v}`` in :func:`lex_edges` order."""
    if u > v:
        u, v = v, u
    if not 1 <= u < v <= n:
        raise ValueError(f"({u}, {v}) is not an edge of K_{n}")
    # edges starting at 1..u-1 come first
    before = (u - 1) * n - (u - 1) * u // 2
    return before + (v - u - 1)


# ---------------------------------------------------------------------------
# patterns


@dataclass(frozen=True)
class Pattern:
    """A small simple graph used in the G (monochromatic) or H (rainbow) role.

    ``edges`` is kept sorted, each pair with the smaller endpoint first.
    ``tag`` is the canonical name (``"K3"``, ``"K3+e"``, ``"C4"``, ``"P4"``,
    ``"K1,l"``, ``"lK2"``) when the edge set is recognized, else ``"custom"``.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    tag: str = "custom"

    def __post_init__(self):
        if self.vertex_count < 1:
            raise PatternError("a pattern needs at least one vertex")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise PatternError(f"loop at vertex {u}")
            if u > v:
                raise PatternError(f"edge ({u}, {v}) must list the smaller endpoint first")
            if not (1 <= u and v <= self.vertex_count):
                raise PatternError(f"edge ({u}, {v}) outside 1..{self.vertex_count}")
            if (u, v) in seen:
                raise PatternError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if tuple(sorted(self.edges)) != self.edges:
            object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        if self.tag != "custom" and recognize_tag(self) != self.tag:
            raise PatternError(f"edge set does not match tag {self.tag!r}")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], vertex_count: int | None = None) -> "Pattern":
        """Build a pattern from arbitrary pairs; the tag is recognized automatically."""
        norm = []
        for e in edges:
            u, v = e
            norm.append((min(u, v), max(u, v)) if u != v else (u, v))
        if vertex_count is None:
            vertex_count = max((max(e) for e in norm), default=1)
        p = cls(vertex_count, tuple(sorted(norm)))
        tag = recognize_tag(p)
        return p if tag == "custom" else cls(vertex_count, p.edges, tag)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * (self.vertex_count + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg[1:]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    def is_star(self) -> bool:
        """True if every edge shares one common vertex (a star, possibly plus isolated vertices)."""
        if not self.edges:
            return False
        common = set(self.edges[0])
        for e in self.edges[1:]:
            common &= set(e)
        return bool(common)

    def neighbors(self) -> list[set[int]]:
        """Adjacency sets indexed by vertex (index 0 unused)."""
        adj: list[set[int]] = [set() for _ in range(self.vertex_count + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __str__(self) -> str:
        if self.tag != "custom":
            return self.tag
        return "edges:" + ",".join(f"{u}-{v}" for u, v in self.edges)


def complete(k: int) -> Pattern:
    return Pattern.from_edges(combinations(range(1, k + 1), 2), k)


def triangle_plus_edge() -> Pattern:
    """``K3+e``: triangle 1-2-3 with pendant edge 1-4."""
    return Pattern(4, ((1, 2), (1, 3), (1, 4), (2, 3)), "K3+e")


def cycle(k: int) -> Pattern:
    return Pattern.from_edges([(i, i % k + 1) for i in range(1, k + 1)], k)


def path(k: int) -> Pattern:
    """Path on ``k`` vertices."""
    return Pattern.from_edges([(i, i + 1) for i in range(1, k)], k)


def star(leaves: int) -> Pattern:
    """``K_{1,leaves}`` with center 1."""
    if leaves < 1:
        raise PatternError("a star needs at least one leaf")
    return Pattern(leaves + 1, tuple((1, j) for j in range(2, leaves + 2)), f"K1,{leaves}")


def matching(size: int) -> Pattern:
    """``size`` disjoint edges ``{1,2}, {3,4}, ...``."""
    if size < 2:
        raise PatternError("matchings are named for size >= 2 (a single edge is K1,1)")
    return Pattern(2 * size, tuple((2 * i - 1, 2 * i) for i in range(1, size + 1)), f"{size}K2")


def recognize_tag(p: Pattern) -> str:
    """Name of the pattern up to isomorphism, or ``"custom"``.

    Only the named families are recognized; each is pinned down by its
    vertex count, edge count and degree sequence.
    """
    nv, ne = p.vertex_count, p.edge_count
    if ne == 0:
        return "custom"
    deg = sorted(p.degrees())
    if nv == 3 and ne == 3:
        return "K3"
    if nv == 4 and ne == 4 and deg == [1, 2, 2, 3]:
        return "K3+e"
    if nv == 4 and ne == 4 and deg == [2, 2, 2, 2]:
        return "C4"
    if nv == 4 and ne == 3 and deg == [1, 1, 2, 2]:
        return "P4"
    if ne == nv - 1 and deg[-1] == ne and all(d == 1 for d in deg[:-1]):
        return f"K1,{ne}"
    if nv == 2 * ne and ne >= 2 and all(d == 1 for d in deg):
        return f"{ne}K2"
    return "custom"


_STAR_RE = re.compile(r"K1,(\d+)$")
_MATCHING_RE = re.compile(r"(\d+)K2$")
_EDGE_RE = re.compile(r"(\d+)-(\d+)$")


def parse_pattern(text: str) -> Pattern:
    """Parse ``K3``, ``K3+e``, ``C4``, ``P4``, ``K1,<l>``, ``<l>K2`` or ``edges:u-v,...``."""
    s = text.strip().replace(" ", "")
    if s == "K3":
        return complete(3)
    if s == "K3+e":
        return triangle_plus_edge()
    if s == "C4":
        return cycle(4)
    if s == "P4":
        return path(4)
    m = _STAR_RE.match(s)
    if m:
        return star(int(m.group(1)))
    m = _MATCHING_RE.match(s)
    if m:
        return matching(int(m.group(1)))
    if s.startswith("edges:"):
        body = s[len("edges:"):]
        if not body:
            raise PatternError("empty edge list")
        pairs = []
        for item in body.split(","):
            em = _EDGE_RE.match(item)
            if not em:
                raise PatternError(f"malformed edge {item!r}")
            u, v = int(em.group(1)), int(em.group(2))
            if u < 1 or v < 1:
                raise PatternError(f"vertex labels are 1-based: {item!r}")
            if u == v:
                raise PatternError(f"loop at vertex {u}")
            pairs.append((min(u, v), max(u, v)))
        if len(set(pairs)) != len(pairs):
            raise PatternError("duplicate edge in list")
        return Pattern.from_edges(pairs)
    raise PatternError(f"unrecognized pattern expression {text!r}")


# ---------------------------------------------------------------------------
# colorings


def _canonical_labels(colors: Iterable[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return tuple(out)


@dataclass(frozen=True)
class Coloring:
    """A total edge-coloring of ``K_n``.

    ``colors[i]`` is the label of the ``i``-th edge in lexicographic order.
    Labels are always canonical: ``1..k`` in order of first appearance.
    """

    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ColoringFormatError("n must be positive")
        m = self.n * (self.n - 1) // 2
        if len(self.colors) != m:
            raise ColoringFormatError(f"K_{self.n} has {m} edges, got {len(self.colors)} colors")
        if any((not isinstance(c, int)) or c < 1 for c in self.colors):
            raise ColoringFormatError("colors must be positive integers")
        object.__setattr__(self, "colors", _canonical_labels(self.colors))

    @classmethod
    def from_function(cls, n: int, color: Callable[[int, int], int]) -> "Coloring":
        """Color each edge ``(u, v)``, ``u < v``, by ``color(u, v)``."""
        return cls(n, tuple(color(u, v) for u, v in lex_edges(n)))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Edge, int]) -> "Coloring":
        colors = []
        for u, v in lex_edges(n):
            c = mapping.get((u, v), mapping.get((v, u)))
            if c is None:
                raise ColoringFormatError(f"missing edge {u} {v}")
            colors.append(c)
        return cls(n, tuple(colors))

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=0)

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(range(1, self.num_colors + 1))

    def color(self, u: int, v: int) -> int:
        return self.colors[edge_index(self.n, u, v)]

    def items(self) -> Iterator[tuple[Edge, int]]:
        return zip(lex_edges(self.n), self.colors)

    def color_classes(self) -> dict[int, list[Edge]]:
        classes: dict[int, list[Edge]] = {}
        for e, c in self.items():
            classes.setdefault(c, []).append(e)
        return classes

    def matrix(self) -> list[list[int]]:
        """Symmetric ``(n+1) x (n+1)`` color table, 0 on the diagonal and row/column 0."""
        mat = [[0] * (self.n + 1) for _ in range(self.n + 1)]
        for (u, v), c in self.items():
            mat[u][v] = mat[v][u] = c
        return mat


@dataclass(frozen=True)
class CensusSplit:
    """Colors private to a vertex ``x`` versus colors seen on ``K_n - x``."""

    vertex: int
    private_colors: frozenset[int]
    interior_colors: frozenset[int]


def color_census(coloring: Coloring, x: int) -> CensusSplit:
    """Split the palette into colors used only at ``x`` and colors used away from ``x``."""
    if not 1 <= x <= coloring.n:
        raise ValueError(f"vertex {x} outside 1..{coloring.n}")
    at_x, away = set(), set()
    for (u, v), c in coloring.items():
        if u == x or v == x:
            at_x.add(c)
        else:
            away.add(c)
    return CensusSplit(x, frozenset(at_x - away), frozenset(away))


# ---------------------------------------------------------------------------
# certificate codec


def write_coloring(coloring: Coloring) -> str:
    lines = [FORMAT_MAGIC, f"n {coloring.n}", f"colors {coloring.num_colors}"]
    lines.extend(f"e {u} {v} {c}" for (u, v), c in coloring.items())
    return "\n".join(lines) + "\n"


def _header(line: str | None, key: str) -> int:
    parts = (line or "").split()
    if len(parts) != 2 or parts[0] != key or not parts[1].isdigit():
        raise ColoringFormatError(f"expected '{key} <int>', got {line!r}")
    return int(parts[1])


def read_coloring(text: str) -> Coloring:
    """Parse a certificate.  Edge lines may come in any order but each pair exactly once."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != FORMAT_MAGIC:
        raise ColoringFormatError(f"first line must be {FORMAT_MAGIC!r}")
    n = _header(lines[1] if len(lines) > 1 else None, "n")
    k = _header(lines[2] if len(lines) > 2 else None, "colors")
    if n < 1:
        raise ColoringFormatError("n must be positive")
    assigned: dict[Edge, int] = {}
    for ln in lines[3:]:
        parts = ln.split()
        if len(parts) != 4 or parts[0] != "e":
            raise ColoringFormatError(f"malformed edge line {ln!r}")
        try:
            u, v, c = (int(t) for t in parts[1:])
        except ValueError:
            raise ColoringFormatError(f"malformed edge line {ln!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ColoringFormatError(f"vertex out of range in {ln!r}")
        if u >= v:
            raise ColoringFormatError(f"edge must be written with u < v: {ln!r}")
        if c < 1:
            raise ColoringFormatError(f"non-positive color in {ln!r}")
        if c > k:
            raise ColoringFormatError(f"color {c} exceeds declared count {k}")
        if (u, v) in assigned:
            raise ColoringFormatError(f"duplicate edge {u} {v}")
        assigned[(u, v)] = c
    for u, v in lex_edges(n):
        if (u, v) not in assigned:
            raise ColoringFormatError(f"missing edge {u} {v}")
    used = set(assigned.values())
    if used != set(range(1, k + 1)):
        raise ColoringFormatError(f"declared {k} colors but file uses {sorted(used)}")
    return Coloring.from_mapping(n, assigned)


def save_coloring(coloring: Coloring, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(write_coloring(coloring))


def load_coloring(path) -> Coloring:
    with open(path, encoding="ascii") as fh:
        return read_coloring(fh.read())
