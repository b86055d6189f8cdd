"""Flip-graph enumeration of all arrangements supported by a network."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .arrangement import (
    Arrangement,
    contact_graph,
    flip,
    flip_partner,
    greedy,
)
from .errors import ResourceLimit
from .network import Network

DEFAULT_MAX_NODES = 10**6


def max_nodes_default() -> int:
    return int(os.environ.get("BRICK_MAX_NODES", DEFAULT_MAX_NODES))


def _neighbours(net: Network, key: str) -> list[str]:
    arr = Arrangement.from_string(net, key)
    return [flip(arr, j).key for j in sorted(arr.contacts)]


def all_arrangements(net: Network, max_nodes: int | None = None, jobs: int = 1) -> list[Arrangement]:
    """Every arrangement supported by ``net``, sorted by mark string.

    Breadth-first search over flips from the greedy arrangement; complete
    because the flip graph is connected.
    """
    limit = max_nodes_default() if max_nodes is None else max_nodes
    start = greedy(net).key
    seen = {start}
    frontier = [start]
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while frontier:
            if pool is None:
                expanded = [_neighbours(net, key) for key in frontier]
            else:
                expanded = list(pool.map(_neighbours, [net] * len(frontier), frontier, chunksize=64))
            nxt = set()
            for keys in expanded:
                for key in keys:
                    if key not in seen:
                        seen.add(key)
                        nxt.add(key)
                        if len(seen) > limit:
                            raise ResourceLimit(f"more than {limit} arrangements")
            frontier = sorted(nxt)
    finally:
        if pool is not None:
            pool.shutdown()
    return [Arrangement(net, tuple(c == "C" for c in key)) for key in sorted(seen)]


@dataclass(frozen=True)
class FlipEdge:
    a: str
    b: str
    contact: int  # contact of ``a`` that is flipped
    crossing: int  # crossing of ``a`` that becomes a contact
    decreasing: bool  # True when a -> b is decreasing


@dataclass
class FlipGraph:
    net: Network
    nodes: list[str]
    edges: list[FlipEdge]

    def adjacency(self) -> dict[str, set[str]]:
        adj = {v: set() for v in self.nodes}
        for e in self.edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
        return adj

    def to_dot(self, directed: bool = False) -> str:
        lines = ["digraph flips {" if directed else "graph flips {"]
        for v in self.nodes:
            lines.append(f'  "{v}";')
        for e in self.edges:
            tag = f"{e.contact + 1},{e.crossing + 1}"
            if directed:
                src, dst = (e.a, e.b) if e.decreasing else (e.b, e.a)
                lines.append(f'  "{src}" -> "{dst}" [label="{tag}"];')
            else:
                lines.append(f'  "{e.a}" -- "{e.b}" [label="{tag}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def flip_graph(net: Network, arrangements=None, max_nodes: int | None = None) -> FlipGraph:
    arrs = all_arrangements(net, max_nodes) if arrangements is None else arrangements
    degree = net.m - comb(net.n, 2)
    edges = []
    for arr in arrs:
        for j in sorted(arr.contacts):
            w = flip_partner(arr, j)
            other = flip(arr, j)
            if arr.key < other.key:
                edges.append(FlipEdge(arr.key, other.key, j, w, w < j))
    nodes = [a.key for a in arrs]
    if 2 * len(edges) != len(nodes) * degree:
        raise AssertionError("flip graph is not regular")
    return FlipGraph(net, nodes, edges)


@dataclass
class Orientation:
    successors: dict[str, list[str]]
    source: str
    sink: str


def decreasing_orientation(fg: FlipGraph) -> Orientation:
    succ = {v: [] for v in fg.nodes}
    indeg = {v: 0 for v in fg.nodes}
    for e in fg.edges:
        src, dst = (e.a, e.b) if e.decreasing else (e.b, e.a)
        succ[src].append(dst)
        indeg[dst] += 1
    sources = [v for v in fg.nodes if indeg[v] == 0]
    sinks = [v for v in fg.nodes if not succ[v]]
    assert len(sources) == 1, f"{len(sources)} sources"
    assert len(sinks) == 1, f"{len(sinks)} sinks"
    # Kahn's algorithm doubles as the acyclicity check
    remaining = dict(indeg)
    queue = list(sources)
    visited = 0
    while queue:
        v = queue.pop()
        visited += 1
        for w in succ[v]:
            remaining[w] -= 1
            if remaining[w] == 0:
                queue.append(w)
    assert visited == len(fg.nodes), "decreasing flips contain a cycle"
    for v in succ:
        succ[v].sort()
    return Orientation(succ, sources[0], sinks[0])


def complex_facets(net: Network, arrangements=None) -> list[frozenset[int]]:
    arrs = all_arrangements(net) if arrangements is None else arrangements
    return [a.contacts for a in arrs]


def euler_characteristic(facets) -> int:
    """Euler characteristic of the simplicial complex generated by ``facets``
    (empty face excluded)."""
    faces = set()
    for f in facets:
        items = sorted(f)
        for r in range(1, len(items) + 1):
            faces.update(combinations(items, r))
    return sum((-1) ** (len(f) - 1) for f in faces)


def irreducible_components(net: Network) -> list[frozenset[int]]:
    return contact_graph(greedy(net)).components()


def is_minimal(net: Network) -> bool:
    comps = irreducible_components(net)
    return len(comps) == 1 and net.m == comb(net.n, 2) + net.n - 1



def restricted_flip_graph(host: Network, frozen, start: Arrangement, max_nodes: int | None = None) -> FlipGraph:
    """Flip graph of the host arrangements that keep every ``frozen``
    commutator as a contact, explored from ``start``."""
    frozen = frozenset(frozen)
    if not frozen <= start.contacts:
        raise ValueError("start arrangement does not contain the frozen contacts")
    limit = max_nodes_default() if max_nodes is None else max_nodes
    seen = {start.key: start}
    frontier = [start]
    edges = []
    while frontier:
        nxt = []
        for arr in frontier:
            for j in sorted(arr.contacts - frozen):
                w = flip_partner(arr, j)
                if w in frozen:
                    continue
                other = flip(arr, j)
                if arr.key < other.key:
                    edges.append(FlipEdge(arr.key, other.key, j, w, w < j))
                if other.key not in seen:
                    seen[other.key] = other
                    nxt.append(other)
                    if len(seen) > limit:
                        raise ResourceLimit(f"more than {limit} arrangements")
        frontier = sorted(nxt, key=lambda a: a.key)
    return FlipGraph(host, sorted(seen), sorted(edges, key=lambda e: (e.a, e.b)))


def lift_to_host(embedding, arr: Arrangement) -> Arrangement:
    """Arrangement of the embedding host: frozen commutators become contacts,
    kept ones copy the marks of ``arr`` in order."""
    marks = [True] * embedding.host.m
    for mark, j in zip(arr.marks, embedding.kept):
        marks[j] = mark
    return Arrangement.from_marks(embedding.host, marks)
