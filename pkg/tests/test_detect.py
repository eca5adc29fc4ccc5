import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from mixedramsey.construct import k10_eight, k10_seven, star_coloring
from mixedramsey.detect import (
    PartialColoring,
    find_monochromatic,
    find_rainbow,
    is_good,
    violations_containing_edge,
)
from mixedramsey.graph import Coloring, Pattern, parse_pattern as P
from mixedramsey.search import search_edge_order

from oracles import brute_mono, brute_rainbow
from test_graph import colorings

CATALOG = ["K3", "K3+e", "C4", "P4", "2K2", "K1,2", "K1,3", "edges:1-2,3-4,4-5"]


def test_mono_c4_in_monochromatic_k4():
    w = find_monochromatic(Coloring(4, (1,) * 6), P("C4"))
    assert w is not None and w.vertex_map == (1, 2, 3, 4)
    assert w.is_monochromatic()


def test_star_coloring_has_no_mono_c4():
    assert find_monochromatic(star_coloring(5), P("C4")) is None


def test_k10_eight_has_no_mono_c4():
    assert find_monochromatic(k10_eight(), P("C4")) is None


def test_rainbow_triangle_found():
    w = find_rainbow(Coloring(3, (1, 2, 3)), P("K3"))
    assert w is not None and w.is_rainbow()


def test_two_colors_never_rainbow_triangle():
    rng = random.Random(3)
    for _ in range(20):
        c = Coloring(6, tuple(rng.choice((1, 2)) for _ in range(15)))
        assert find_rainbow(c, P("K3")) is None


def test_k10_seven_has_no_rainbow_triangle():
    assert find_rainbow(k10_seven(), P("K3")) is None


def test_is_good_k10_colorings():
    v = is_good(k10_eight(), P("C4"), P("K3+e"))
    assert v.good and k10_eight().num_colors == 8
    v = is_good(star_coloring(10), P("C4"), P("K3+e"))
    assert v.good and star_coloring(10).num_colors == 9


def test_is_good_reports_mono_witness():
    v = is_good(Coloring(3, (1, 1, 1)), P("K3"), P("K3"))
    assert not v.good
    assert v.mono_witness is not None and v.rainbow_witness is None


def test_edgeless_pattern_rejected():
    with pytest.raises(ValueError):
        find_monochromatic(star_coloring(3), Pattern(2, ()))
    with pytest.raises(ValueError):
        find_rainbow(star_coloring(3), Pattern(2, ()))


def test_witness_is_lexicographically_least():
    c = Coloring(5, (1,) * 10)
    assert find_monochromatic(c, P("P4")).vertex_map == (1, 2, 3, 4)
    assert find_monochromatic(c, P("C4")).vertex_map == (1, 2, 3, 4)


# --- soundness and completeness against brute force -----------------------


@settings(max_examples=150, deadline=None)
@given(colorings(min_n=2, max_n=5, max_colors=5), st.sampled_from(CATALOG))
def test_detectors_match_brute_force(c, text):
    p = P(text)
    mono = find_monochromatic(c, p)
    rain = find_rainbow(c, p)
    bm, br = brute_mono(c, p), brute_rainbow(c, p)
    # brute force scans maps in lexicographic order, so the first hit is the least
    assert (mono.vertex_map if mono else None) == bm
    assert (rain.vertex_map if rain else None) == br
    for w in (mono, rain):
        if w is not None:
            assert w.agrees_with(c)
    assert mono is None or mono.is_monochromatic()
    assert rain is None or rain.is_rainbow()


SUBGRAPH_CHAINS = [("P4", "C4"), ("K3", "K3+e"), ("2K2", "C4"), ("K1,2", "P4"), ("P4", "K3+e"), ("K1,3", "K3+e")]


@settings(max_examples=100, deadline=None)
@given(colorings(min_n=3, max_n=6, max_colors=4), st.sampled_from(SUBGRAPH_CHAINS))
def test_subgraph_monotonicity(c, pair):
    small, big = P(pair[0]), P(pair[1])
    if find_monochromatic(c, small) is None:
        assert find_monochromatic(c, big) is None
    if find_rainbow(c, small) is None:
        assert find_rainbow(c, big) is None


# --- incremental check ------------------------------------------------------


def _prefix(c, count):
    return PartialColoring.prefix(c, search_edge_order(c.n)[:count])


def test_prefix_triangle_mono():
    part = PartialColoring(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})
    assert violations_containing_edge(part, (2, 3), P("K3"), P("C4"))


def test_single_edge_prefix():
    part = PartialColoring(5, {(1, 2): 1})
    assert not violations_containing_edge(part, (1, 2), P("P4"), P("K3"))


def test_k4_prefix_of_k10_eight():
    part = _prefix(k10_eight(), 6)
    assert set(part.assigned) == {(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)}
    assert not violations_containing_edge(part, (3, 4), P("C4"), P("K3+e"))


def test_uncolored_edge_rejected():
    with pytest.raises(ValueError):
        violations_containing_edge(PartialColoring(4, {(1, 2): 1}), (3, 4), P("K3"), P("K3"))


def _restricted(c, count):
    """Brute force: does a bad copy lie inside the first `count` edges and use the last one?"""
    edges = search_edge_order(c.n)[:count]
    e = edges[-1]
    allowed = set(edges)
    out = False
    for pat, mono in ((G, True), (H, False)):
        for vm in itertools.permutations(range(1, c.n + 1), pat.vertex_count):
            hosts = [tuple(sorted((vm[a - 1], vm[b - 1]))) for a, b in pat.edges]
            if e not in hosts or not set(hosts) <= allowed:
                continue
            cols = [c.color(*x) for x in hosts]
            if (mono and len(set(cols)) == 1) or (not mono and len(set(cols)) == len(cols)):
                out = True
    return out


G, H = P("C4"), P("K3+e")


@settings(max_examples=80, deadline=None)
@given(colorings(min_n=4, max_n=5, max_colors=4), st.data())
def test_incremental_agrees_with_restricted_brute_force(c, data):
    m = c.n * (c.n - 1) // 2
    count = data.draw(st.integers(1, m))
    part = _prefix(c, count)
    e = search_edge_order(c.n)[count - 1]
    assert violations_containing_edge(part, e, G, H) == _restricted(c, count)


@settings(max_examples=60, deadline=None)
@given(colorings(min_n=4, max_n=6, max_colors=4), st.sampled_from(CATALOG), st.sampled_from(CATALOG))
def test_violation_persistence(c, gt, ht):
    # a violation seen in any prefix survives in the completed coloring
    g, h = P(gt), P(ht)
    order = search_edge_order(c.n)
    for count in range(1, len(order) + 1):
        if violations_containing_edge(_prefix(c, count), order[count - 1], g, h):
            assert not is_good(c, g, h).good
            break
