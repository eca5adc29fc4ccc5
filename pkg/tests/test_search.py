import itertools

import pytest
from sympy import bell
from sympy.functions.combinatorial.numbers import stirling

from mixedramsey.detect import is_good
from mixedramsey.graph import parse_pattern as P
from mixedramsey.search import (
    Budget,
    Status,
    _Query,
    _solve,
    count_colorings,
    existence,
    min_colors,
    monotone_nonexistence,
    search_edge_order,
    spectrum,
)

from oracles import brute_spectrum

PAIRS = [(g, h) for g in ("C4", "P4", "2K2") for h in ("K3", "K3+e")]


def test_edge_order_is_vertex_by_vertex():
    assert search_edge_order(4) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


@pytest.mark.parametrize("n, m", [(3, 3), (4, 6), (5, 10)])
def test_enumeration_counts_are_bell_numbers(n, m):
    counts = count_colorings(n)
    assert sum(counts.values()) == bell(m)
    for k, c in counts.items():
        assert c == stirling(m, k)


def test_bell_values():
    assert [bell(3), bell(6), bell(10)] == [5, 203, 115975]


# --- existence ----------------------------------------------------------------


def test_existence_two_colors_k5_c4():
    r = existence(5, 2, P("C4"), P("K3"))
    assert r.status is Status.PROVED_IN
    assert r.witness.num_colors == 2 and is_good(r.witness, P("C4"), P("K3")).good


def test_existence_two_colors_k6_c4_out():
    assert existence(6, 2, P("C4"), P("K3+e")).status is Status.PROVED_OUT


def test_existence_p4_four_colors_k4_out():
    assert existence(4, 4, P("P4"), P("K3")).status is Status.PROVED_OUT


def test_existence_k10_three_colors():
    r = existence(10, 3, P("C4"), P("K3+e"), Budget(nodes=10**8))
    assert r.status is Status.PROVED_IN
    assert r.witness.n == 10 and r.witness.num_colors == 3
    assert is_good(r.witness, P("C4"), P("K3+e")).good


def test_existence_budget_is_honest():
    r = existence(8, 4, P("C4"), P("K3+e"), Budget(nodes=5000))
    assert r.status is Status.UNKNOWN
    assert r.nodes_explored == 5000


def test_existence_parameter_checks():
    with pytest.raises(ValueError):
        existence(1, 1, P("C4"), P("K3"))
    with pytest.raises(ValueError):
        existence(4, 7, P("C4"), P("K3"))
    with pytest.raises(ValueError):
        existence(4, 0, P("C4"), P("K3"))


# --- spectrum -----------------------------------------------------------------


def test_spectrum_p4_k3_n4():
    assert spectrum(4, P("P4"), P("K3")).members == {2, 3}


def test_spectrum_k2():
    r = spectrum(2, P("C4"), P("K3"))
    assert r.members == {1} and r.complete


def test_spectrum_c4_k3e_n5():
    # frozen from the brute-force partition oracle (tests/oracles.py)
    assert spectrum(5, P("C4"), P("K3+e")).members == {2, 3, 4}


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("g, h", PAIRS + [("C4", "C4"), ("K3", "K3"), ("K1,2", "K3")])
def test_spectrum_matches_oracle_small(n, g, h):
    assert spectrum(n, P(g), P(h)).members == brute_spectrum(n, P(g), P(h))


def test_witnesses_reverify_with_exact_count():
    for g, h in PAIRS:
        rep = spectrum(5, P(g), P(h))
        for k, st in rep.per_k.items():
            if st.status is Status.PROVED_IN:
                assert st.witness.num_colors == k
                assert is_good(st.witness, P(g), P(h)).good
            else:
                assert st.status is Status.PROVED_OUT and st.witness is None


def test_spectrum_table_text():
    text = spectrum(4, P("P4"), P("K3")).format_table()
    assert text.splitlines()[-1] == "S = {2,3}"


def test_spectrum_budget_marks_unknown():
    rep = spectrum(5, P("C4"), P("K3+e"), Budget(nodes=50))
    assert not rep.complete and rep.nodes_explored <= 50
    assert all(s.status is not Status.PROVED_OUT for s in rep.per_k.values())


# --- determinism and splitting -------------------------------------------------


@pytest.mark.parametrize("budget", [None, 1, 37, 500, 5000])
@pytest.mark.parametrize("n, k, g, h", [(6, 3, "C4", "K3+e"), (6, 2, "C4", "K3"), (7, 5, "P4", "K3"), (8, 3, "C4", "K3")])
def test_split_depth_does_not_change_existence(budget, n, k, g, h):
    b = Budget(nodes=budget)
    ref = existence(n, k, P(g), P(h), b, split_depth=0)
    for d in (1, 4, 6, 10):
        r = existence(n, k, P(g), P(h), b, split_depth=d)
        assert (r.status, r.witness, r.nodes_explored) == (ref.status, ref.witness, ref.nodes_explored)


@pytest.mark.parametrize("budget", [None, 200, 3000])
def test_workers_do_not_change_results(budget):
    b = Budget(nodes=budget)
    a = spectrum(5, P("C4"), P("K3+e"), b, workers=1)
    c = spectrum(5, P("C4"), P("K3+e"), b, workers=2)
    assert a.per_k == c.per_k and a.nodes_explored == c.nodes_explored
    e1 = existence(9, 3, P("C4"), P("K3+e"), b, workers=1)
    e2 = existence(9, 3, P("C4"), P("K3+e"), b, workers=2)
    assert (e1.status, e1.witness, e1.nodes_explored) == (e2.status, e2.witness, e2.nodes_explored)


def test_repeat_runs_identical():
    a = spectrum(5, P("2K2"), P("K3"))
    b = spectrum(5, P("2K2"), P("K3"))
    assert a == b


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("g, h", PAIRS + [("K3", "K3"), ("C4", "C4"), ("K1,2", "K3+e")])
def test_generic_checkers_agree_with_fast_paths(n, g, h):
    fast = _solve(_Query(n, P(g), P(h), "spectrum", None, False), Budget())
    slow = _solve(_Query(n, P(g), P(h), "spectrum", None, False, generic=True), Budget())
    assert fast.found == slow.found and fast.nodes == slow.nodes


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("g, h", PAIRS + [("K3", "K3"), ("C4", "C4")])
def test_vertex_symmetry_preserves_spectrum(n, g, h):
    plain = spectrum(n, P(g), P(h))
    reduced = spectrum(n, P(g), P(h), vertex_symmetry=True)
    assert plain.members == reduced.members
    for st in reduced.per_k.values():
        if st.witness is not None:
            assert is_good(st.witness, P(g), P(h)).good


# --- min colors and monotone lifting --------------------------------------------


def test_min_colors_formula_shortcuts():
    r = min_colors(10, P("C4"), P("K3+e"))
    assert (r.value, r.source) == (3, "formula")
    assert min_colors(10, P("2K2"), P("K3+e")).value == 8


def test_min_colors_by_search():
    r = min_colors(5, P("C4"), P("K3+e"))
    assert (r.value, r.source) == (2, "search")
    assert min_colors(10, P("C4"), P("K3+e"), use_formulas=False).value == 3


def test_min_colors_empty_and_unknown():
    assert min_colors(4, P("K1,1"), P("K3")).status is Status.PROVED_OUT
    r = min_colors(8, P("C4"), P("K3+e"), Budget(nodes=10), use_formulas=False)
    assert r.status is Status.UNKNOWN and r.value is None


@pytest.mark.parametrize("g, h", PAIRS)
def test_min_colors_consistent_with_spectrum(g, h):
    for n in (4, 5):
        rep = spectrum(n, P(g), P(h))
        assert min_colors(n, P(g), P(h), use_formulas=False).value == min(rep.members)
        assert min_colors(n, P(g), P(h)).value == min(rep.members)


def test_monotone_two_colors_k10():
    assert monotone_nonexistence(10, 2, P("C4"), P("K3+e"), 6) is Status.PROVED_OUT


def test_monotone_three_colors_inconclusive():
    assert monotone_nonexistence(10, 3, P("C4"), P("K3+e"), 6) is Status.INCONCLUSIVE


def test_monotone_degenerates_at_m_equals_n():
    assert monotone_nonexistence(6, 2, P("C4"), P("K3+e"), 6) is Status.PROVED_OUT
    assert existence(6, 2, P("C4"), P("K3+e")).status is Status.PROVED_OUT
    assert monotone_nonexistence(5, 2, P("C4"), P("K3"), 5) is Status.INCONCLUSIVE
    assert existence(5, 2, P("C4"), P("K3")).status is Status.PROVED_IN


def test_monotone_m_larger_than_n():
    with pytest.raises(ValueError):
        monotone_nonexistence(5, 2, P("C4"), P("K3"), 6)


def test_monotone_budget_inconclusive():
    assert monotone_nonexistence(10, 2, P("C4"), P("K3+e"), 6, Budget(nodes=3)) is Status.INCONCLUSIVE


def test_known_spectrum_agrees_with_search_where_both_defined():
    from mixedramsey.formulas import NotCovered, known_spectrum

    checked = 0
    for n, g, h in itertools.product((4, 5), ("P4", "C4", "2K2", "K1,1", "K3"), ("K3", "K3+e")):
        try:
            kv = known_spectrum(n, g, h)
        except NotCovered:
            continue
        assert spectrum(n, P(g), P(h)).members == kv.value
        checked += 1
    assert checked >= 8
