"""Exhaustive backtracking over edge-colorings of ``K_n``.

Edges are visited vertex by vertex (``(1,2), (1,3), (2,3), (1,4), ...``) and
colors follow a restricted-growth rule: an edge may reuse any color seen so
far or open exactly one new color.  Every partition of the edge set into
color classes is therefore visited once.  After each assignment the new
edge is checked for a monochromatic ``G`` or a rainbow ``H`` through it;
violations never disappear in an extension, so the branch is cut.

The tree is split at a fixed depth into subtrees.  Subtrees are independent
and merged in canonical order, and node budgets are charged as if the whole
tree were walked sequentially, so results do not depend on ``workers``.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence

from .graph import Coloring, Edge, Pattern
from .formulas import NotCovered, known_min_colors

__all__ = [
    "Status",
    "Budget",
    "KStatus",
    "SpectrumReport",
    "ExistenceResult",
    "MinColors",
    "search_edge_order",
    "existence",
    "spectrum",
    "min_colors",
    "monotone_nonexistence",
    "count_colorings",
]


class Status(str, Enum):
    PROVED_IN = "proved-in"
    PROVED_OUT = "proved-out"
    UNKNOWN = "unknown"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Budget:
    """Node limit (deterministic) and optional wall-clock limit in seconds."""

    nodes: Optional[int] = None
    seconds: Optional[float] = None

    @property
    def exhaustive(self) -> bool:
        return self.nodes is None and self.seconds is None


EXHAUSTIVE = Budget()


@dataclass(frozen=True)
class KStatus:
    status: Status
    witness: Optional[Coloring] = None


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    g: Pattern
    h: Pattern
    per_k: dict[int, KStatus]
    nodes_explored: int
    elapsed: float = field(compare=False)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(k for k, s in self.per_k.items() if s.status is Status.PROVED_IN)

    @property
    def complete(self) -> bool:
        return all(s.status is not Status.UNKNOWN for s in self.per_k.values())

    def format_set(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}"

    def format_table(self) -> str:
        lines = [f"S({self.n}; {self.g}, {self.h})", "k  status"]
        lines += [f"{k:<2} {s.status}" for k, s in sorted(self.per_k.items())]
        lines.append(f"nodes {self.nodes_explored}")
        prefix = "S = " if self.complete else "S >= "
        lines.append(prefix + self.format_set())
        return "\n".join(lines)


@dataclass(frozen=True)
class ExistenceResult:
    status: Status
    witness: Optional[Coloring]
    nodes_explored: int
    elapsed: float = field(compare=False)


@dataclass(frozen=True)
class MinColors:
    """``value`` is the minimum, or ``None`` when the spectrum is empty or unresolved."""

    value: Optional[int]
    status: Status
    source: str


def search_edge_order(n: int) -> list[Edge]:
    """The edge order used by the search (1-based): column by column."""
    return [(u, v) for v in range(2, n + 1) for u in range(1, v)]


# ---------------------------------------------------------------------------
# incremental checkers on bitmask state
#
# State shared by a kernel: col[u][v] (0 = uncolored), adj[c][u] bitmask of
# c-colored neighbors, anyadj[u] bitmask of colored neighbors.  Vertices are
# 0-based inside the kernel.


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _automorphisms(p: Pattern) -> list[tuple[int, ...]]:
    if p.vertex_count > 7:
        return [tuple(range(p.vertex_count + 1))]
    edges = set(p.edges)
    out = []
    for perm in itertools.permutations(range(1, p.vertex_count + 1)):
        f = (0,) + perm
        if all(tuple(sorted((f[a], f[b]))) in edges for a, b in p.edges):
            out.append(f)
    return out


def _arc_plans(p: Pattern) -> list[tuple[int, int, list[tuple[int, tuple[int, ...]]]]]:
    """One representative arc per automorphism orbit, with a placement order for the rest.

    Each plan is ``(a, b, steps)``; ``steps`` lists ``(w, placed_neighbors)``
    so every pattern edge is checked when its later endpoint is placed.
    """
    autos = _automorphisms(p)
    arcs = [(a, b) for a, b in p.edges] + [(b, a) for a, b in p.edges]
    seen: set[tuple[int, int]] = set()
    adj = p.neighbors()
    plans = []
    for a, b in sorted(arcs):
        if (a, b) in seen:
            continue
        seen.update((f[a], f[b]) for f in autos)
        placed = [a, b]
        rest = [w for w in range(1, p.vertex_count + 1) if w not in (a, b)]
        steps = []
        while rest:
            w = max(rest, key=lambda x: (len(adj[x] & set(placed)), -x))
            rest.remove(w)
            steps.append((w, tuple(sorted(adj[w] & set(placed)))))
            placed.append(w)
        plans.append((a, b, steps))
    return plans


def _generic_checker(p: Pattern, n: int, col, adj, anyadj, mono: bool):
    plans = _arc_plans(p)
    full = (1 << n) - 1
    host = [0] * (p.vertex_count + 1)

    if mono:

        def check(u: int, v: int, c: int) -> bool:
            A = adj[c]

            def rec(steps, si, used):
                if si == len(steps):
                    return True
                w, nbrs = steps[si]
                cand = full & ~used
                for z in nbrs:
                    cand &= A[host[z]]
                while cand:
                    low = cand & -cand
                    host[w] = low.bit_length() - 1
                    if rec(steps, si + 1, used | low):
                        return True
                    cand ^= low
                return False

            for a, b, steps in plans:
                host[a], host[b] = u, v
                if rec(steps, 0, (1 << u) | (1 << v)):
                    return True
            return False

        return check

    def check_rainbow(u: int, v: int, c: int) -> bool:
        def rec(steps, si, used, ucol):
            if si == len(steps):
                return True
            w, nbrs = steps[si]
            cand = full & ~used
            for z in nbrs:
                cand &= anyadj[host[z]]
            while cand:
                low = cand & -cand
                x = low.bit_length() - 1
                row = col[x]
                new = ucol
                ok = True
                for z in nbrs:
                    bit = 1 << row[host[z]]
                    if new & bit:
                        ok = False
                        break
                    new |= bit
                if ok:
                    host[w] = x
                    if rec(steps, si + 1, used | low, new):
                        return True
                cand ^= low
            return False

        for a, b, steps in plans:
            host[a], host[b] = u, v
            if rec(steps, 0, (1 << u) | (1 << v), 1 << c):
                return True
        return False

    return check_rainbow


def _mono_checker(p: Pattern, n: int, col, adj, anyadj, generic: bool = False):
    if p.vertex_count > n:
        return None
    if not generic:
        if p.tag == "K3":
            return lambda u, v, c: (adj[c][u] & adj[c][v]) != 0
        if p.tag == "C4":

            def c4(u: int, v: int, c: int) -> bool:
                A = adj[c]
                ends = A[v] & ~(1 << u)
                for x in _bits(A[u] & ~(1 << v)):
                    if A[x] & ends:
                        return True
                return False

            return c4
        if p.tag.startswith("K1,"):
            ell = p.edge_count
            return lambda u, v, c: adj[c][u].bit_count() >= ell or adj[c][v].bit_count() >= ell
    return _generic_checker(p, n, col, adj, anyadj, mono=True)


def _rainbow_checker(p: Pattern, n: int, col, adj, anyadj, generic: bool = False):
    if p.vertex_count > n:
        return None
    if not generic and p.tag == "K3":

        def k3(u: int, v: int, c: int) -> bool:
            cu, cv = col[u], col[v]
            for w in _bits(anyadj[u] & anyadj[v]):
                a, b = cu[w], cv[w]
                if a != b and a != c and b != c:
                    return True
            return False

        return k3
    return _generic_checker(p, n, col, adj, anyadj, mono=False)


# ---------------------------------------------------------------------------
# the kernel


class _BudgetHit(Exception):
    pass


EXACT, AT_MOST, SPECTRUM, COUNT = "exact", "at-most", "spectrum", "count"


class _Kernel:
    """Mutable search state for one query; one instance per process."""

    def __init__(self, n, g, h, mode, k=None, vertex_symmetry=False, generic=False):
        self.n = n
        self.m = n * (n - 1) // 2
        self.order = [(u - 1, v - 1) for u, v in search_edge_order(n)]
        self.mode = mode
        self.cap = k if mode in (EXACT, AT_MOST) else self.m
        self.k = k
        self.vertex_symmetry = vertex_symmetry
        self.col = [[0] * n for _ in range(n)]
        self.adj = [[0] * n for _ in range(self.cap + 1)]
        self.anyadj = [0] * n
        self.count = [0] * (self.cap + 1)
        self.colors = [0] * self.m
        args = (n, self.col, self.adj, self.anyadj)
        self.mono = _mono_checker(g, *args, generic=generic) if g is not None else None
        self.rain = _rainbow_checker(h, *args, generic=generic) if h is not None else None
        self.h_edges = h.edge_count if h is not None else 0

    def assign(self, i: int, c: int) -> None:
        u, v = self.order[i]
        self.colors[i] = c
        self.col[u][v] = self.col[v][u] = c
        A = self.adj[c]
        A[u] |= 1 << v
        A[v] |= 1 << u
        self.anyadj[u] |= 1 << v
        self.anyadj[v] |= 1 << u
        self.count[c] += 1

    def unassign(self, i: int, c: int) -> None:
        u, v = self.order[i]
        self.colors[i] = 0
        self.col[u][v] = self.col[v][u] = 0
        A = self.adj[c]
        A[u] &= ~(1 << v)
        A[v] &= ~(1 << u)
        self.anyadj[u] &= ~(1 << v)
        self.anyadj[v] &= ~(1 << u)
        self.count[c] -= 1

    def violates(self, i: int, c: int, used: int) -> bool:
        u, v = self.order[i]
        if self.mono is not None and self.mono(u, v, c):
            return True
        if self.rain is not None and used >= self.h_edges and self.rain(u, v, c):
            return True
        return False

    def _symmetry_cut(self, i: int) -> bool:
        # WLOG color 1 is a largest class: some relabeling of vertices puts
        # an edge of a largest class first, which then receives label 1.
        remaining = self.m - i - 1
        return max(self.count[2:]) > self.count[1] + remaining if self.cap >= 2 else False

    def load(self, prefix: Sequence[int]) -> int:
        for i, c in enumerate(prefix):
            self.assign(i, c)
        return max(prefix, default=0)

    def clear(self, prefix: Sequence[int]) -> None:
        for i in reversed(range(len(prefix))):
            self.unassign(i, prefix[i])

    def explore(
        self,
        start: int,
        used: int,
        node_limit: Optional[int],
        deadline: Optional[float],
        stop_depth: Optional[int] = None,
        on_prefix: Optional[Callable[[int, tuple, int], None]] = None,
    ) -> tuple[int, bool, dict[int, tuple]]:
        """Depth-first walk from edge ``start``.

        Returns ``(nodes, finished, found)``; ``finished`` is False when the
        node or time budget was hit.  ``found`` maps a color count to the
        first complete coloring (in search edge order) with that count.  With
        ``stop_depth`` set, the walk stops at that depth and reports each
        prefix to ``on_prefix(nodes_so_far, colors, used)``.
        """
        m, cap, mode, k = self.m, self.cap, self.mode, self.k
        depth_end = m if stop_depth is None else stop_depth
        assign, unassign, violates = self.assign, self.unassign, self.violates
        colors = self.colors
        sym = self.vertex_symmetry
        found: dict[int, tuple] = {}
        nodes = 0
        limit = node_limit if node_limit is not None else -1

        def leaf(u_count: int) -> bool:
            if mode == COUNT:
                found[u_count] = found.get(u_count, 0) + 1
                return False
            if mode == SPECTRUM:
                if u_count not in found:
                    found[u_count] = tuple(colors)
                return False
            found[u_count] = tuple(colors)
            return True

        def rec(i: int, u_count: int) -> bool:
            nonlocal nodes
            if i == depth_end:
                if stop_depth is not None:
                    on_prefix(nodes, tuple(colors[:i]), u_count)
                    return False
                return leaf(u_count)
            remaining = m - i - 1
            top = u_count + 1 if u_count < cap else cap
            for c in range(1, top + 1):
                nodes += 1
                if nodes == limit + 1 and limit >= 0:
                    raise _BudgetHit
                if deadline is not None and not nodes & 1023 and time.perf_counter() > deadline:
                    raise _BudgetHit
                nu = u_count + 1 if c > u_count else u_count
                if mode == EXACT and nu + remaining < k:
                    continue
                if mode == SPECTRUM and found and all(j in found for j in range(nu, nu + remaining + 1)):
                    continue
                assign(i, c)
                if not violates(i, c, nu) and not (sym and self._symmetry_cut(i)):
                    if rec(i + 1, nu):
                        unassign(i, c)
                        return True
                unassign(i, c)
            return False

        try:
            rec(start, used)
        except _BudgetHit:
            for i in range(start, m):
                if colors[i]:
                    unassign(i, colors[i])
            # the node that tripped the limit was not explored
            return (min(nodes, limit) if limit >= 0 else nodes), False, found
        return nodes, True, found


# ---------------------------------------------------------------------------
# subtree splitting and deterministic merge


@dataclass
class _Query:
    n: int
    g: Optional[Pattern]
    h: Optional[Pattern]
    mode: str
    k: Optional[int]
    vertex_symmetry: bool
    generic: bool = False

    def kernel(self) -> _Kernel:
        return _Kernel(self.n, self.g, self.h, self.mode, self.k, self.vertex_symmetry, self.generic)


_worker_cache: dict = {}


def _run_subtree(query: _Query, prefix: tuple, used: int, node_limit, deadline):
    key = repr(query)
    kern = _worker_cache.get(key)
    if kern is None:
        _worker_cache.clear()
        kern = _worker_cache[key] = query.kernel()
    kern.load(prefix)
    try:
        return kern.explore(len(prefix), used, node_limit, deadline)
    finally:
        kern.clear(prefix)


def _default_split(m: int) -> int:
    return min(m, 6)


@dataclass
class _Outcome:
    nodes: int
    finished: bool
    found: dict[int, tuple]


def _solve(query: _Query, budget: Budget, workers: int = 1, split_depth: Optional[int] = None) -> _Outcome:
    kern = query.kernel()
    m = kern.m
    d = _default_split(m) if split_depth is None else max(0, min(split_depth, m))
    deadline = time.perf_counter() + budget.seconds if budget.seconds is not None else None
    B = budget.nodes

    prefixes: list[tuple[int, tuple, int]] = []
    prefix_nodes, _, _ = kern.explore(0, 0, None, None, stop_depth=d,
                                      on_prefix=lambda k_, c_, u_: prefixes.append((k_, c_, u_)))

    found: dict[int, tuple] = {}
    acc = 0
    stop_after_first = query.mode != SPECTRUM

    def merge(res_found):
        for kk, wit in res_found.items():
            found.setdefault(kk, wit)

    def limit_for(start):
        return None if B is None else B - start

    if workers <= 1 or len(prefixes) <= 1:
        results = (None for _ in prefixes)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = [pool.submit(_run_subtree, query, pre, used, B, deadline) for _, pre, used in prefixes]

    try:
        for (before, pre, used), fut in zip(prefixes, results):
            start = before + acc
            if B is not None and start > B:
                return _Outcome(B, False, found)
            if fut is None:
                res = _run_subtree(query, pre, used, limit_for(start), deadline)
            else:
                res = fut.result()
                nodes_j, fin_j, _ = res
                if (B is not None and start + nodes_j > B) or not fin_j:
                    res = _run_subtree(query, pre, used, limit_for(start), deadline)
            nodes_j, fin_j, found_j = res
            acc += nodes_j
            merge(found_j)
            if not fin_j:
                return _Outcome(start + nodes_j, False, found)
            if stop_after_first and found:
                return _Outcome(start + nodes_j, True, found)
    finally:
        if pool is not None:
            pool.shutdown(wait=False, cancel_futures=True)

    total = prefix_nodes + acc
    if B is not None and total > B:
        return _Outcome(B, False, found)
    return _Outcome(total, True, found)


def _to_coloring(n: int, colors: tuple) -> Coloring:
    order = search_edge_order(n)
    return Coloring.from_mapping(n, dict(zip(order, colors)))


def _check_query(n: int, g: Pattern, h: Pattern) -> None:
    if n < 2:
        raise ValueError("n must be at least 2")
    if g.edge_count == 0 or h.edge_count == 0:
        raise ValueError("patterns must have at least one edge")


# ---------------------------------------------------------------------------
# public operations


def existence(
    n: int,
    k: int,
    g: Pattern,
    h: Pattern,
    budget: Budget = EXHAUSTIVE,
    *,
    workers: int = 1,
    split_depth: Optional[int] = None,
    vertex_symmetry: bool = False,
) -> ExistenceResult:
    """Is there a ``(g, h)``-good coloring of ``K_n`` with exactly ``k`` colors?"""
    _check_query(n, g, h)
    m = n * (n - 1) // 2
    if not 1 <= k <= m:
        raise ValueError(f"k must lie in 1..{m}")
    t0 = time.perf_counter()
    out = _solve(_Query(n, g, h, EXACT, k, vertex_symmetry), budget, workers, split_depth)
    elapsed = time.perf_counter() - t0
    if k in out.found:
        return ExistenceResult(Status.PROVED_IN, _to_coloring(n, out.found[k]), out.nodes, elapsed)
    status = Status.PROVED_OUT if out.finished else Status.UNKNOWN
    return ExistenceResult(status, None, out.nodes, elapsed)


def spectrum(
    n: int,
    g: Pattern,
    h: Pattern,
    budget: Budget = EXHAUSTIVE,
    *,
    workers: int = 1,
    split_depth: Optional[int] = None,
    vertex_symmetry: bool = False,
) -> SpectrumReport:
    """Classify every color count ``1..C(n,2)`` in one walk of the tree."""
    _check_query(n, g, h)
    m = n * (n - 1) // 2
    t0 = time.perf_counter()
    out = _solve(_Query(n, g, h, SPECTRUM, None, vertex_symmetry), budget, workers, split_depth)
    per_k = {}
    for k in range(1, m + 1):
        if k in out.found:
            per_k[k] = KStatus(Status.PROVED_IN, _to_coloring(n, out.found[k]))
        else:
            per_k[k] = KStatus(Status.PROVED_OUT if out.finished else Status.UNKNOWN)
    return SpectrumReport(n, g, h, per_k, out.nodes, time.perf_counter() - t0)


def min_colors(
    n: int,
    g: Pattern,
    h: Pattern,
    budget: Budget = EXHAUSTIVE,
    *,
    use_formulas: bool = True,
    workers: int = 1,
) -> MinColors:
    """Smallest color count in the spectrum: a catalog formula if one applies, else search."""
    _check_query(n, g, h)
    if use_formulas:
        try:
            known = known_min_colors(n, g, h)
        except NotCovered:
            pass
        else:
            if known.is_set:
                return MinColors(None, Status.PROVED_OUT, "formula")
            return MinColors(known.value, Status.PROVED_IN, "formula")
    for k in range(1, n * (n - 1) // 2 + 1):
        res = existence(n, k, g, h, budget, workers=workers)
        if res.status is Status.PROVED_IN:
            return MinColors(k, Status.PROVED_IN, "search")
        if res.status is Status.UNKNOWN:
            return MinColors(None, Status.UNKNOWN, "search")
    return MinColors(None, Status.PROVED_OUT, "search")


def monotone_nonexistence(
    n: int,
    k: int,
    g: Pattern,
    h: Pattern,
    m: int,
    budget: Budget = EXHAUSTIVE,
    *,
    workers: int = 1,
) -> Status:
    """Rule out good ``k``-colorings of ``K_n`` by exhausting ``K_m`` with at most ``k`` colors.

    Restricting a good coloring of ``K_n`` to any ``m`` vertices gives a good
    coloring of ``K_m`` with at most ``k`` colors, so if none exists the
    answer for ``K_n`` is no.
    """
    _check_query(n, g, h)
    if m > n:
        raise ValueError("m must not exceed n")
    if m < 2 or k < 1:
        raise ValueError("need m >= 2 and k >= 1")
    k_eff = min(k, m * (m - 1) // 2)
    out = _solve(_Query(m, g, h, AT_MOST, k_eff, False), budget, workers)
    if out.finished and not out.found:
        return Status.PROVED_OUT
    return Status.INCONCLUSIVE


def count_colorings(n: int) -> dict[int, int]:
    """Colorings visited per color count with no patterns, i.e. every edge partition once."""
    kern = _Kernel(n, None, None, COUNT)
    _, _, counts = kern.explore(0, 0, None, None)
    return counts
