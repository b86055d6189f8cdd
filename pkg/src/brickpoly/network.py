"""Networks: levels joined by a left-to-right sequence of commutators.

Levels are numbered 1..n from bottom to top.  Commutator ``j`` (0-based
position in the sequence) sits in band ``bands[j]`` and joins levels
``bands[j]`` and ``bands[j] + 1``.  Only the left-to-right order of the
commutators matters, so no abscissae are stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DisconnectedGraph, InvalidBand, KernelTooDeep, TooFewLevels

Pair = tuple[int, int]


@dataclass(frozen=True)
class Network:
    n: int
    bands: tuple[int, ...]
    labels: tuple[Pair, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.bands)

    def __len__(self) -> int:
        return len(self.bands)

    def to_json(self) -> str:
        data: dict = {"n": self.n, "bands": list(self.bands)}
        if self.labels is not None:
            data["labels"] = [list(p) for p in self.labels]
        return json.dumps(data, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Network":
        data = json.loads(text)
        labels = data.get("labels")
        return make_network(data["n"], data["bands"], labels)


@dataclass(frozen=True)
class Brick:
    band: int
    left: int
    right: int
    depth: int


@dataclass(frozen=True)
class DupGraph:
    n: int
    edges: tuple[Pair, ...]

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == self.n


def make_network(n: int, bands: Iterable[int], labels=None) -> Network:
    if n < 2:
        raise TooFewLevels(f"a network needs at least 2 levels, got {n}")
    bands = tuple(int(b) for b in bands)
    for j, b in enumerate(bands):
        if not 1 <= b <= n - 1:
            raise InvalidBand(f"commutator {j + 1} has band {b}, expected 1..{n - 1}")
    if labels is not None:
        labels = tuple(tuple(sorted(int(v) for v in p)) for p in labels)
        if len(labels) != len(bands):
            raise ValueError("labels and bands differ in length")
    return Network(n, bands, labels)


def bricks(net: Network) -> list[Brick]:
    """Bricks sorted by band, then by left wall."""
    out = []
    for band in range(1, net.n):
        walls = [j for j, b in enumerate(net.bands) if b == band]
        for left, right in zip(walls, walls[1:]):
            out.append(Brick(band, left, right, net.n - band))
    return out


def total_depth(net: Network) -> int:
    return sum(b.depth for b in bricks(net))


def is_alternating(net: Network) -> bool:
    # each intermediate level must see its commutators alternate above/below
    for level in range(2, net.n):
        sides = [b for b in net.bands if b in (level - 1, level)]
        if any(x == y for x, y in zip(sides, sides[1:])):
            return False
    return True


def x_network(m: int) -> Network:
    return make_network(2, [1] * m)


def y_network(m: int) -> Network:
    return make_network(3, [2 if j % 2 == 0 else 1 for j in range(m)])


def _polygon_points(word: str) -> list[tuple[int, int]]:
    # Same cyclic order as the circle construction, but on two parabolic arcs
    # so every chord slope is rational.
    n = len(word) + 2
    pts = [(1, 0)]
    for i, letter in enumerate(word, start=1):
        height = i * (n - i - 1)
        pts.append((i + 1, height if letter == "a" else -height))
    pts.append((n, 0))
    return pts


def alternating_network(word: str) -> Network:
    """Reduced alternating network in which pseudoline ``i + 1`` touches the
    top level iff ``word[i - 1] == 'a'``.

    Built as the wiring diagram of the lines dual to a convex polygon whose
    upper chain holds the ``a`` vertices.
    """
    if set(word) - {"a", "b"}:
        raise ValueError(f"word must be over {{a, b}}, got {word!r}")
    n = len(word) + 2
    pts = _polygon_points(word)
    slope = {}
    for i, j in combinations(range(1, n + 1), 2):
        (xi, yi), (xj, yj) = pts[i - 1], pts[j - 1]
        slope[i, j] = Fraction(yj - yi, xj - xi)

    order = list(range(1, n + 1))  # order[level - 1] = pseudoline
    bands, labels = [], []
    for s in sorted(set(slope.values())):
        group = [p for p in slope if slope[p] == s]
        group.sort(key=lambda p: order.index(p[0]))
        for i, j in group:
            lo = order.index(i)
            if order[lo + 1] != j:
                raise AssertionError(f"pair {i, j} not adjacent at its crossing")
            order[lo], order[lo + 1] = j, i
            bands.append(lo + 1)
            labels.append((i, j))
    return make_network(n, bands, labels)


def bubble_sort_network(n: int) -> Network:
    return alternating_network("b" * (n - 2))


def kernel(net: Network, k: int) -> Network:
    """Erase the first ``k`` and last ``k`` levels with their commutators."""
    if k == 0:
        return net
    if net.n <= 2 * k:
        raise KernelTooDeep(f"cannot erase {2 * k} of {net.n} levels")
    keep = [j for j, b in enumerate(net.bands) if k + 1 <= b <= net.n - k - 1]
    labels = None if net.labels is None else [net.labels[j] for j in keep]
    return make_network(net.n - 2 * k, [net.bands[j] - k for j in keep], labels)


def _duplicate(base: Network, edges: Iterable[Pair]) -> Network:
    if base.labels is None:
        raise ValueError("duplication needs a labeled reduced network")
    count: dict[Pair, int] = {}
    for i, j in edges:
        key = (min(i, j), max(i, j))
        count[key] = count.get(key, 0) + 1
    bands, labels = [], []
    for b, lab in zip(base.bands, base.labels):
        for _ in range(1 + count.pop(lab, 0)):
            bands.append(b)
            labels.append(lab)
    if count:
        raise ValueError(f"no commutator labeled {sorted(count)}")
    return make_network(base.n, bands, labels)


def duplicated_network(g: DupGraph) -> Network:
    """Bubble-sort network with the commutator of each edge doubled."""
    if not g.is_connected():
        raise DisconnectedGraph(f"graph on {g.n} vertices is not connected")
    return _duplicate(bubble_sort_network(g.n), g.edges)


def reflect(net: Network, axis: str) -> Network:
    """``axis='v'`` mirrors left/right, ``axis='h'`` mirrors top/bottom.

    Both reflections map pseudoline ``i`` to ``n + 1 - i``; labels follow.
    Kernel labels name vertices of the parent polygon, so they are mirrored
    within the largest label instead.
    """
    n = net.n
    labels = None
    if net.labels is not None:
        top = max([n] + [max(pair) for pair in net.labels])
        labels = [tuple(sorted((top + 1 - p, top + 1 - q))) for p, q in net.labels]
    if axis in ("v", "vertical"):
        bands = list(reversed(net.bands))
        if labels is not None:
            labels.reverse()
    elif axis in ("h", "horizontal"):
        bands = [n - b for b in net.bands]
    else:
        raise ValueError(f"unknown axis {axis!r}")
    return make_network(n, bands, labels)


def restriction(arr, curves: Iterable[int]) -> Network:
    """Network seen by the pseudolines ``curves`` of the arrangement ``arr``.

    Keeps the commutators whose two incident pseudolines both belong to
    ``curves``; the kept curves are stretched into levels 1..len(curves).
    """
    keep = set(curves)
    net = arr.net
    bands, labels = [], []
    for j, before in enumerate(arr.trajectory):
        b = net.bands[j]
        below, above = before[b - 1], before[b]
        if below in keep and above in keep:
            rank = sum(1 for p in before[: b - 1] if p in keep)
            bands.append(rank + 1)
            if net.labels is not None:
                labels.append(net.labels[j])
    return make_network(len(keep), bands, labels if net.labels is not None else None)


@dataclass(frozen=True)
class Embedding:
    host: Network
    frozen: frozenset[int]
    witness: tuple[Pair, ...]
    kept: tuple[int, ...]


def universality_embedding(net: Network) -> Embedding:
    """Realize ``net`` inside a kernel of a bubble-sort network.

    The commutators of the host labeled by ``witness`` reproduce the band
    pattern of ``net``; every other host commutator is ``frozen`` (forced to
    be a contact).
    """
    n, m = net.n, net.m
    if m < 1:
        raise ValueError("embedding needs at least one commutator")
    big = n + 2 * m - 2
    host = kernel(bubble_sort_network(big), m - 1)
    witness = tuple((i, i + net.bands[i - 1] + m - 1) for i in range(1, m + 1))
    wanted = set(witness)
    kept = tuple(j for j, lab in enumerate(host.labels) if lab in wanted)
    frozen = frozenset(range(host.m)) - set(kept)
    return Embedding(host, frozen, witness, kept)


def remove_commutators(net: Network, drop: Iterable[int]) -> Network:
    drop = set(drop)
    keep = [j for j in range(net.m) if j not in drop]
    labels = None if net.labels is None else [net.labels[j] for j in keep]
    return make_network(net.n, [net.bands[j] for j in keep], labels)


def parse_shorthand(spec: str) -> Sequence[int]:
    """``'1,2,1'`` -> ``[1, 2, 1]``."""
    spec = spec.strip()
    return [int(tok) for tok in spec.split(",")] if spec else []
