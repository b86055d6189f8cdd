from __future__ import annotations

from collections import Counter
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brickpoly.arrangement import (
    Arrangement,
    brick_vector,
    check_hyperplane,
    contact_graph,
    demazure_product,
    flip,
    flip_partner,
    from_contact_graph,
    greedy,
    is_decreasing_flip,
    is_sorting,
    summand_vector,
)
from brickpoly.enumeration import all_arrangements, irreducible_components
from brickpoly.errors import GraphMismatch, NotAContact, NotSorting
from brickpoly.network import (
    DupGraph,
    bricks,
    bubble_sort_network,
    duplicated_network,
    make_network,
    total_depth,
    x_network,
    y_network,
)
from support import battery, battery_ids, random_sorting_network

BATTERY = [n for _, n in battery()]


def x_arrangement(m: int, i: int) -> Arrangement:
    """X_m arrangement crossing at commutator i (1-based)."""
    return Arrangement.from_marks(x_network(m), [j != i - 1 for j in range(m)])


@pytest.mark.parametrize("m", range(2, 8))
def test_x_greedy_and_brick_vectors(m):
    assert greedy(x_network(m)) == x_arrangement(m, 1)
    for i in range(1, m + 1):
        assert brick_vector(x_arrangement(m, i)) == (m - i, i - 1)


def test_reduced_network_greedy_is_all_crossings():
    net = bubble_sort_network(6)
    arr = greedy(net)
    assert arr.key == "X" * net.m
    assert contact_graph(arr).arcs == ()


def test_not_sorting():
    net = make_network(3, (1, 1))
    assert not is_sorting(net)
    with pytest.raises(NotSorting):
        greedy(net)


@pytest.mark.parametrize("net", BATTERY, ids=battery_ids())
def test_arrangement_invariants(net):
    for arr in all_arrangements(net):
        crossings = Counter(frozenset(arr.meet[j]) for j in range(net.m) if not arr.marks[j])
        assert len(crossings) == comb(net.n, 2) and set(crossings.values()) == {1}
        final = arr.after(net.m - 1) if net.m else tuple(range(1, net.n + 1))
        assert final == tuple(range(net.n, 0, -1))
        for i in range(1, net.n + 1):
            prof = arr.level_profile(i)
            assert prof[0] == i and prof[-1] == net.n + 1 - i
            steps = [b - a for a, b in zip(prof, prof[1:]) if b != a]
            assert steps.count(1) == net.n - i and steps.count(-1) == i - 1
        g = contact_graph(arr)
        assert len(g.arcs) == net.m - comb(net.n, 2)


@pytest.mark.parametrize("net", BATTERY, ids=battery_ids())
def test_greedy_arcs_sorted_and_flips_decreasing(net):
    arr = greedy(net)
    assert all(a < b for a, b, _ in contact_graph(arr).arcs)
    assert all(is_decreasing_flip(arr, j) for j in arr.contacts)
    # greedy is the only arrangement with every contact right of its crossing
    others = [a for a in all_arrangements(net) if all(is_decreasing_flip(a, j) for j in a.contacts)]
    assert others == [arr]


def test_x3_middle_arrangement_flips():
    arr = x_arrangement(3, 2)
    assert sorted(is_decreasing_flip(arr, j) for j in arr.contacts) == [False, True]


def test_flip_errors_and_involution():
    arr = x_arrangement(4, 2)
    with pytest.raises(NotAContact):
        flip(arr, 1)
    for j in arr.contacts:
        w = flip_partner(arr, j)
        assert flip(flip(arr, j), w) == arr


@pytest.mark.parametrize("net", BATTERY, ids=battery_ids())
def test_flip_delta_law(net):
    for arr in all_arrangements(net):
        before = brick_vector(arr)
        for j in arr.contacts:
            above, below = arr.meet[j]
            delta = [b - a for a, b in zip(before, brick_vector(flip(arr, j)))]
            c = delta[below - 1]
            assert c >= 1
            expected = [0] * net.n
            expected[below - 1], expected[above - 1] = c, -c
            assert delta == expected


@pytest.mark.parametrize("net", BATTERY, ids=battery_ids())
def test_hyperplane_and_summands(net):
    bs = bricks(net)
    for arr in all_arrangements(net):
        assert check_hyperplane(arr)
        assert sum(brick_vector(arr)) == total_depth(net)
        parts = [summand_vector(arr, b) for b in bs]
        for b, part in zip(bs, parts):
            assert sum(part) == b.depth
        total = tuple(map(sum, zip(*parts))) if parts else (0,) * net.n
        assert total == brick_vector(arr)


def test_x_summands():
    m = 5
    net = x_network(m)
    for c in range(1, m + 1):
        arr = x_arrangement(m, c)
        for idx, b in enumerate(bricks(net), start=1):
            assert summand_vector(arr, b) == ((1, 0) if c <= idx else (0, 1))


def test_brick_free_network_zero_vector():
    net = make_network(2, (1,))
    assert bricks(net) == []
    assert brick_vector(greedy(net)) == (0, 0)


@pytest.mark.parametrize("net", BATTERY, ids=battery_ids())
def test_contact_graph_round_trip(net):
    for arr in all_arrangements(net):
        assert from_contact_graph(net, contact_graph(arr).arcs) == arr


def test_every_orientation_of_dup_graph_reconstructs():
    edges = ((1, 2), (2, 3), (1, 3), (3, 4))
    net = duplicated_network(DupGraph(4, edges))
    seen = set()
    for signs in product((0, 1), repeat=len(edges)):
        arcs = [(i, j) if s else (j, i) for (i, j), s in zip(edges, signs)]
        seen.add(from_contact_graph(net, arcs).key)
    assert len(seen) == 2 ** len(edges)


def test_from_contact_graph_mismatch():
    net = y_network(5)
    with pytest.raises(GraphMismatch):
        from_contact_graph(net, [(3, 1), (3, 1)])
    with pytest.raises(GraphMismatch):
        from_contact_graph(net, [(1, 2), (1, 2), (1, 2), (1, 2)])


def test_from_marks_rejects_bad_vectors():
    with pytest.raises(GraphMismatch):
        Arrangement.from_string(x_network(3), "XXC")
    with pytest.raises(GraphMismatch):
        Arrangement.from_string(x_network(3), "CC")


@pytest.mark.parametrize("net", BATTERY, ids=battery_ids())
def test_components_stable_across_arrangements(net):
    comps = irreducible_components(net)
    for arr in all_arrangements(net):
        assert contact_graph(arr).components() == comps


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.lists(st.integers(1, 4), max_size=12))
def test_sorting_matches_demazure(n, raw):
    bands = [1 + (b - 1) % (n - 1) for b in raw]
    net = make_network(n, bands)
    assert is_sorting(net) == (demazure_product(net) == tuple(range(n, 0, -1)))


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 5), st.integers(0, 4), st.integers(0, 10**6))
def test_random_networks_round_trip(n, extra, seed):
    net = random_sorting_network(n, extra, seed)
    for arr in all_arrangements(net):
        assert from_contact_graph(net, contact_graph(arr).arcs) == arr
        assert check_hyperplane(arr)
