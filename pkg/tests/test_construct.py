import pytest

from mixedramsey.construct import k10_eight, k10_seven, matching_extremal, pentagon_power, star_coloring
from mixedramsey.detect import find_monochromatic, find_rainbow, is_good
from mixedramsey.formulas import lambda_value, ramsey_matching
from mixedramsey.graph import parse_pattern as P
from mixedramsey.transform import delete_vertex


def test_star_coloring_4():
    c = star_coloring(4)
    assert [c.color(*e) for e in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]] == [1, 1, 1, 2, 2, 3]


def test_star_coloring_2():
    c = star_coloring(2)
    assert c.n == 2 and c.num_colors == 1


def test_star_coloring_rejects_small():
    with pytest.raises(ValueError):
        star_coloring(1)


@pytest.mark.parametrize("n", range(3, 12))
def test_star_coloring_properties(n):
    c = star_coloring(n)
    assert c.num_colors == n - 1
    assert find_rainbow(c, P("K3")) is None
    assert find_monochromatic(c, P("P4")) is None
    assert delete_vertex(c, n) == star_coloring(n - 1)


def test_k10_eight_definition():
    c = k10_eight()
    assert c.num_colors == 8
    for u in range(1, 8):
        assert all(c.color(u, v) == u for v in range(u + 1, 11))
    assert c.color(8, 9) == c.color(8, 10) == c.color(9, 10) == 8
    assert is_good(c, P("C4"), P("K3+e")).good


def test_k10_seven_definition():
    c = k10_seven()
    assert c.num_colors == 7
    assert sorted(c.color_classes()[6]) == [(6, 7), (6, 10), (7, 8), (8, 9), (9, 10)]
    assert sorted(c.color_classes()[7]) == [(6, 8), (6, 9), (7, 9), (7, 10), (8, 10)]
    assert is_good(c, P("C4"), P("K3+e")).good


@pytest.mark.parametrize("ell, k, n", [(2, 3, 5), (2, 2, 4), (3, 2, 7), (2, 1, 3), (4, 3, 13)])
def test_matching_extremal_sizes(ell, k, n):
    c = matching_extremal(ell, k)
    assert c.n == n == ramsey_matching(k, ell) - 1
    assert c.num_colors == k
    assert find_monochromatic(c, P(f"{ell}K2")) is None


def test_matching_extremal_layout():
    c = matching_extremal(3, 2)
    assert all(c.color(u, v) == 1 for u in range(1, 6) for v in range(u + 1, 6))
    assert all(c.color(u, v) == 2 for v in (6, 7) for u in range(1, v))


@pytest.mark.parametrize("ell, k", [(2, 4), (3, 3)])
def test_matching_extremal_has_no_rainbow_cycles(ell, k):
    c = matching_extremal(ell, k)
    for h in ("K3", "C4", "K3+e"):
        assert find_rainbow(c, P(h)) is None


def test_matching_extremal_errors():
    with pytest.raises(ValueError):
        matching_extremal(1, 2)
    with pytest.raises(ValueError):
        matching_extremal(2, 0)


def test_pentagon_k1():
    c = pentagon_power(1)
    assert c.n == 2 and c.num_colors == 1


def test_pentagon_k2_is_two_five_cycles():
    c = pentagon_power(2)
    classes = c.color_classes()
    assert c.n == 5 and len(classes) == 2
    for edges in classes.values():
        deg = [0] * 6
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        assert len(edges) == 5 and deg[1:] == [2] * 5
    assert is_good(c, P("K3"), P("K3")).good


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_pentagon_sizes_and_goodness(k):
    c = pentagon_power(k)
    assert c.n == lambda_value(k)
    assert c.num_colors == k
    assert is_good(c, P("K3"), P("K3")).good


def test_pentagon_blob_layout():
    # K25: blob 1 is vertices 1..5 and carries a copy of the 2-colored K5
    c = pentagon_power(4)
    inner = {c.color(u, v) for u in range(1, 6) for v in range(u + 1, 6)}
    cross = {c.color(u, v) for u in range(1, 6) for v in range(6, 26)}
    assert len(inner) == 2 and len(cross) == 2 and not inner & cross
