"""Shared test battery and brute-force oracles.

The oracles deliberately avoid the package's sweep and flip code so that
agreement means something.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, product
from math import comb

from brickpoly.network import (
    DupGraph,
    Network,
    _duplicate,
    alternating_network,
    bubble_sort_network,
    duplicated_network,
    kernel,
    make_network,
    reflect,
    x_network,
    y_network,
)

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def random_sorting_network(n: int, extra: int, seed: int) -> Network:
    """A random reduced word for the reversal, with ``extra`` commutators
    inserted at random places."""
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    bands = []
    while order != sorted(order, reverse=True):
        b = rng.choice([b for b in range(1, n) if order[b - 1] < order[b]])
        order[b - 1], order[b] = order[b], order[b - 1]
        bands.append(b)
    for _ in range(extra):
        bands.insert(rng.randint(0, len(bands)), rng.randint(1, n - 1))
    return make_network(n, bands)


@lru_cache(maxsize=None)
def battery() -> tuple[tuple[str, Network], ...]:
    """About 25 sorting networks with n <= 8 and at most 2000 arrangements."""
    nets = [
        ("X_2", x_network(2)),
        ("X_4", x_network(4)),
        ("X_6", x_network(6)),
        ("Y_3", y_network(3)),
        ("Y_5", y_network(5)),
        ("Y_7", y_network(7)),
        ("Y_9", y_network(9)),
        ("B_4", bubble_sort_network(4)),
        ("N_aba", alternating_network("aba")),
        ("Z(K_3)", duplicated_network(DupGraph(3, ((1, 2), (2, 3), (1, 3))))),
        ("Z(P_4)", duplicated_network(DupGraph(4, ((1, 2), (2, 3), (3, 4))))),
        ("Z(S_4)", duplicated_network(DupGraph(4, ((1, 2), (1, 3), (1, 4))))),
        ("Z(K_4)", duplicated_network(DupGraph(4, tuple(combinations(range(1, 5), 2))))),
        ("Z(C_4)", duplicated_network(DupGraph(4, ((1, 2), (2, 3), (3, 4), (1, 4))))),
        ("N_bbb^1", kernel(bubble_sort_network(5), 1)),
        ("N_aab^1", kernel(alternating_network("aab"), 1)),
        ("N_abab^1", kernel(alternating_network("abab"), 1)),
        ("N_aabb^1", kernel(alternating_network("aabb"), 1)),
        ("B_7^2", kernel(bubble_sort_network(7), 2)),
        ("B_8^2", kernel(bubble_sort_network(8), 2)),
        ("v(N_abba^1)", reflect(kernel(alternating_network("abba"), 1), "v")),
        ("Z(2K_2)", _duplicate(bubble_sort_network(4), [(1, 2), (3, 4)])),
        ("Z(K_2+K_1)", _duplicate(bubble_sort_network(3), [(1, 2), (1, 2)])),
        ("rand4", random_sorting_network(4, 3, seed=1)),
        ("rand5", random_sorting_network(5, 3, seed=2)),
        ("rand5b", random_sorting_network(5, 4, seed=7)),
        ("rand6", random_sorting_network(6, 3, seed=3)),
        ("rand6b", random_sorting_network(6, 6, seed=11)),
        ("rand7", random_sorting_network(7, 4, seed=5)),
    ]
    return tuple(nets)


def battery_ids() -> list[str]:
    return [name for name, _ in battery()]


# -- brute-force arrangement enumeration ------------------------------------


def brute_force_arrangements(net: Network) -> list[str]:
    """Mark strings of every arrangement, by choosing which C(n, 2)
    commutators are crossings and checking that each pair crosses once."""
    pairs = comb(net.n, 2)
    out = []
    for crossings in combinations(range(net.m), pairs):
        chosen = set(crossings)
        at = list(range(1, net.n + 1))
        crossed = set()
        ok = True
        for j, b in enumerate(net.bands):
            if j in chosen:
                pair = frozenset((at[b - 1], at[b]))
                if pair in crossed:
                    ok = False
                    break
                crossed.add(pair)
                at[b - 1], at[b] = at[b], at[b - 1]
        if ok and len(crossed) == pairs:
            out.append("".join("X" if j in chosen else "C" for j in range(net.m)))
    return sorted(out)


# -- bricks as bounded cells of the diagram ---------------------------------


def cell_sweep_bricks(net: Network) -> list[tuple[int, int]]:
    """(band, cell size) for each bounded cell, by flood fill over the gaps
    between consecutive commutators in each band strip."""
    found = []
    for band in range(1, net.n):
        # gap g sits between commutators g - 1 and g; walls are same-band commutators
        cells, current = [], [0]
        for j, b in enumerate(net.bands):
            if b == band:
                cells.append(current)
                current = []
            current.append(j + 1)
        cells.append(current)
        for cell in cells:
            if 0 not in cell and net.m not in cell:
                found.append((band, len(cell)))
    return found


def cell_sweep_depth(net: Network) -> int:
    return sum(net.n - band for band, _ in cell_sweep_bricks(net))


# -- polygon oracles ----------------------------------------------------------


def _crosses(a, b) -> bool:
    (i, j), (k, l) = sorted(a), sorted(b)
    return i < k < j < l or k < i < l < j


def brute_force_k_triangulations(n: int, k: int) -> list[frozenset]:
    """Maximal (k+1)-crossing-free sets of k-relevant diagonals of the
    convex n-gon labeled 1..n around the boundary."""
    relevant = [
        (i, j) for i, j in combinations(range(1, n + 1), 2) if min(j - i - 1, n - (j - i) - 1) >= k
    ]

    def free(subset):
        return not any(
            all(_crosses(a, b) for a, b in combinations(c, 2)) for c in combinations(subset, k + 1)
        )

    size = k * (n - 2 * k - 1)
    found = [frozenset(s) for s in combinations(relevant, size) if free(s)]
    # maximality, checked directly rather than trusted from the size
    for s in found:
        assert all(not free(s | {d}) for d in relevant if d not in s)
    return found


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def zero_one_facets(vertices, dim: int):
    """Facets with 0/1 normals, found by trying all of them."""
    from brickpoly.exact import affine_rank

    n = len(vertices[0])
    out = {}
    for normal in product((0, 1), repeat=n):
        if not any(normal) or all(normal):
            continue
        values = [sum(a * b for a, b in zip(normal, v)) for v in vertices]
        low = min(values)
        incident = frozenset(i for i, x in enumerate(values) if x == low)
        if affine_rank(vertices[i] for i in sorted(incident)) == dim - 1:
            out.setdefault(incident, normal)
    return out


def fib(i: int) -> int:
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def series(p: int, terms: int) -> list[int]:
    """Coefficients of x^2 (2 - x^p) / ((1 - 2x + x^{p+1})(1 - x))."""
    num = [0] * terms
    num[2] += 2
    if p + 2 < terms:
        num[p + 2] -= 1
    den = [0] * terms
    for i, c in [(0, 1), (1, -2), (p + 1, 1)]:
        if i < terms:
            den[i] += c
    # power-series division by each denominator factor in turn
    out = num[:]
    for d in (den, [1, -1] + [0] * (terms - 2)):
        res = [0] * terms
        for i in range(terms):
            res[i] = out[i] - sum(d[j] * res[i - j] for j in range(1, i + 1))
        out = res
    return out
