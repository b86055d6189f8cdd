"""The brick polytope: vertices from acyclic contact graphs, facets from
minimal directed cuts, and the face lattice closed under facet intersection.

All coordinates, normals and right-hand sides are integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product

from .arrangement import (
    Arrangement,
    ContactGraph,
    brick_vector,
    contact_graph,
    summand_vector,
)
from .enumeration import all_arrangements, irreducible_components
from .errors import CyclicGraph, DimensionTooLarge, NotIrreducible, OracleMismatch
from .exact import affine_rank, convex_hull, in_convex_hull
from .network import Brick, Network, bricks, total_depth

ORACLE_MAX_AMBIENT = 8


def is_acyclic(g: ContactGraph) -> bool:
    succ = {v: set() for v in range(1, g.n + 1)}
    indeg = {v: 0 for v in range(1, g.n + 1)}
    for a, b, _ in g.arcs:
        if b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    queue = [v for v in indeg if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == g.n


def _connected(nodes: frozenset[int], edges) -> bool:
    if not nodes:
        return False
    start = min(nodes)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == v and y in nodes and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen == nodes


@dataclass(frozen=True)
class DirectedCut:
    source: frozenset[int]
    sink: frozenset[int]
    arcs: tuple[tuple[int, int, int], ...]


def minimal_directed_cuts(g: ContactGraph, component=None) -> list[DirectedCut]:
    """Ordered bipartitions (U, V) of ``component`` with every crossing arc
    going U -> V and both sides weakly connected."""
    if not is_acyclic(g):
        raise CyclicGraph("minimal directed cuts need an acyclic contact graph")
    nodes = sorted(range(1, g.n + 1) if component is None else component)
    inside = set(nodes)
    arcs = [a for a in g.arcs if a[0] in inside and a[1] in inside]
    cuts = []
    for mask in range(1, 2 ** len(nodes) - 1):
        source = frozenset(v for i, v in enumerate(nodes) if mask >> i & 1)
        sink = frozenset(inside - source)
        crossing = [a for a in arcs if (a[0] in source) != (a[1] in source)]
        if not crossing or any(a[0] in sink for a in crossing):
            continue
        if not _connected(source, [(a, b) for a, b, _ in arcs if a in source and b in source]):
            continue
        if not _connected(sink, [(a, b) for a, b, _ in arcs if a in sink and b in sink]):
            continue
        cuts.append(DirectedCut(source, sink, tuple(crossing)))
    return cuts


def hasse_is_forest(g: ContactGraph) -> bool:
    """Transitive reduction of the (acyclic) contact graph has no cycle."""
    succ = {v: set() for v in range(1, g.n + 1)}
    for a, b, _ in g.arcs:
        succ[a].add(b)
    reach = {}

    def below(v):
        if v not in reach:
            out = set()
            for w in succ[v]:
                out.add(w)
                out |= below(w)
            reach[v] = out
        return reach[v]

    hasse = []
    for a in succ:
        for b in succ[a]:
            if not any(b in below(c) for c in succ[a] if c != b):
                hasse.append((a, b))
    comps = len(g.components())
    return len(hasse) == g.n - comps


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    rhs: int
    incident: frozenset[int]

    @property
    def bits(self) -> str:
        return "".join(str(x) for x in self.normal)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def face_lattice(vertices, facet_sets, dim) -> dict[frozenset[int], int]:
    """Faces (as vertex-index sets) mapped to their dimension."""
    full = frozenset(range(len(vertices)))
    if dim <= 1:
        faces = {frozenset(): -1, full: dim}
        for i in range(len(vertices)):
            faces[frozenset([i])] = 0
        return faces
    found = set()
    stack = list(facet_sets)
    while stack:
        f = stack.pop()
        if f in found:
            continue
        found.add(f)
        for g in facet_sets:
            h = f & g
            if h not in found:
                stack.append(h)
    found.add(full)
    return {f: affine_rank(vertices[i] for i in sorted(f)) for f in found}


def f_vector_of(faces: dict, dim: int) -> tuple[int, ...]:
    if dim == 0:
        return (1,)
    counts = [0] * dim
    for d in faces.values():
        if 0 <= d < dim:
            counts[d] += 1
    return tuple(counts)


@dataclass
class BrickPolytope:
    net: Network
    vertices: list[tuple[int, ...]]
    preimages: list[Arrangement]
    facets: list[Facet]
    dim: int
    depth: int
    components: list[frozenset[int]]
    faces: dict[frozenset[int], int] = field(repr=False)
    points: dict[tuple[int, ...], int] = field(repr=False)  # brick vector -> multiplicity
    arrangements: list[Arrangement] = field(repr=False)

    @property
    def n(self) -> int:
        return self.net.n

    @property
    def f_vector(self) -> tuple[int, ...]:
        return f_vector_of(self.faces, self.dim)

    def dump(self) -> str:
        lines = [f"dim {self.dim}", f"ambient {self.n}", f"D {self.depth}"]
        lines += ["V " + " ".join(str(x) for x in v) for v in self.vertices]
        lines += [f"F {f.bits} {f.rhs}" for f in self.facets]
        lines.append("f-vector: " + " ".join(str(x) for x in self.f_vector))
        return "\n".join(lines) + "\n"


def build_polytope(net: Network, arrangements=None, max_nodes: int | None = None) -> BrickPolytope:
    arrs = all_arrangements(net, max_nodes) if arrangements is None else list(arrangements)
    comps = irreducible_components(net)
    points: dict[tuple[int, ...], int] = {}
    chosen: dict[tuple[int, ...], Arrangement] = {}
    for arr in arrs:
        vec = brick_vector(arr)
        points[vec] = points.get(vec, 0) + 1
        if is_acyclic(contact_graph(arr)):
            if vec in chosen:
                raise AssertionError(f"vertex {vec} has two acyclic preimages")
            chosen[vec] = arr
    vertices = sorted(chosen)
    preimages = [chosen[v] for v in vertices]
    dim = net.n - len(comps)

    facets = []
    if dim >= 2:
        normals = set()
        for arr in preimages:
            g = contact_graph(arr)
            for comp in comps:
                if len(comp) < 2:
                    continue
                pad = set(range(1, net.n + 1)) - comp
                for cut in minimal_directed_cuts(g, comp):
                    support = cut.sink | pad
                    normals.add(tuple(int(i in support) for i in range(1, net.n + 1)))
        for normal in sorted(normals):
            values = [_dot(normal, v) for v in vertices]
            rhs = min(values)
            incident = frozenset(i for i, val in enumerate(values) if val == rhs)
            facets.append(Facet(normal, rhs, incident))

    if vertices and affine_rank(vertices) != dim:
        raise AssertionError("dimension differs from n minus the number of components")
    faces = face_lattice(vertices, [f.incident for f in facets], dim)
    return BrickPolytope(
        net, vertices, preimages, facets, dim, total_depth(net), comps, faces, points, arrs
    )


def polytope_graph(p: BrickPolytope) -> list[tuple[int, int]]:
    edges = sorted(tuple(sorted(f)) for f, d in p.faces.items() if d == 1)
    for i, j in edges:
        a, b = p.preimages[i].marks, p.preimages[j].marks
        if sum(x != y for x, y in zip(a, b)) != 2:
            raise AssertionError(f"polytope edge {i, j} is not a flip")
    return edges


def is_simple_vertex(p: BrickPolytope, index: int) -> bool:
    return sum(1 for f in p.facets if index in f.incident) == p.dim


def minkowski_summand(net: Network, brick: Brick, arrangements=None) -> list[tuple[int, ...]]:
    arrs = all_arrangements(net) if arrangements is None else arrangements
    return sorted({summand_vector(a, brick) for a in arrs})


def direction_battery(n: int, seed: int = 0, extra: int = 64) -> list[tuple[int, ...]]:
    dirs = []
    if n <= 6:
        dirs = [d for d in product((-1, 0, 1), repeat=n) if any(d)]
    rng = random.Random(seed)
    for _ in range(extra):
        dirs.append(tuple(rng.randint(-7, 7) for _ in range(n)))
    return dirs


def verify_minkowski_sum(net: Network, arrangements=None, seed: int = 0) -> bool:
    """Support functions of the polytope and of the sum of its brick summands agree."""
    arrs = all_arrangements(net) if arrangements is None else arrangements
    cloud = {brick_vector(a) for a in arrs}
    summands = [{summand_vector(a, b) for a in arrs} for b in bricks(net)]
    for f in direction_battery(net.n, seed):
        whole = max(_dot(f, x) for x in cloud)
        parts = sum(max(_dot(f, s) for s in pts) for pts in summands)
        if whole != parts:
            return False
    return True


@dataclass
class GPCoordinates:
    n: int
    z: dict[frozenset[int], int]
    y: dict[frozenset[int], int]


def _subsets(items):
    items = sorted(items)
    for r in range(len(items) + 1):
        yield from (frozenset(c) for c in combinations(items, r))


def gp_coordinates(p: BrickPolytope) -> GPCoordinates:
    if len(p.components) != 1:
        raise NotIrreducible(f"{len(p.components)} irreducible components")
    ground = range(1, p.n + 1)
    z = {frozenset(): 0}
    for subset in _subsets(ground):
        if subset:
            z[subset] = min(sum(v[i - 1] for i in subset) for v in p.vertices)
    y = {}
    for subset in z:
        y[subset] = sum((-1) ** (len(subset) - len(sub)) * z[sub] for sub in _subsets(subset))
    return GPCoordinates(p.n, z, y)


@dataclass
class OracleReport:
    vertices: int
    interior_points: int
    facets: int
    dim: int
    f_vector: tuple[int, ...]

    def lines(self) -> list[str]:
        return [
            f"oracle vertices: {self.vertices}",
            f"oracle non-vertices: {self.interior_points}",
            f"oracle facets: {self.facets}",
            "oracle f-vector: " + " ".join(str(x) for x in self.f_vector),
        ]


def hull_oracle_verify(p: BrickPolytope, vectors=None) -> OracleReport:
    """Re-derive vertices and facets from the point cloud alone and compare."""
    if p.n > ORACLE_MAX_AMBIENT:
        raise DimensionTooLarge(f"ambient dimension {p.n} > {ORACLE_MAX_AMBIENT}")
    cloud = sorted(set(p.points) if vectors is None else set(map(tuple, vectors)))
    claimed = set(p.vertices)
    for x in cloud:
        others = [y for y in cloud if y != x]
        inside = in_convex_hull(x, others)
        if x in claimed and inside:
            raise OracleMismatch(f"claimed vertex {x} is a convex combination", x)
        if x not in claimed and not inside:
            raise OracleMismatch(f"point {x} is extreme but not claimed", x)
    for f in p.facets:
        values = [_dot(f.normal, x) for x in cloud]
        if min(values) < f.rhs:
            raise OracleMismatch(f"inequality {f.bits} >= {f.rhs} is violated", f)
        if affine_rank(p.vertices[i] for i in sorted(f.incident)) != p.dim - 1:
            raise OracleMismatch(f"face {f.bits} is not a facet", f)
    hull = convex_hull(cloud)
    if set(hull.vertices) != claimed:
        raise OracleMismatch("double description disagrees on vertices", hull.vertices)
    if p.dim >= 2:
        index = {v: i for i, v in enumerate(p.vertices)}
        derived = {frozenset(index[hull.vertices[i]] for i in f) for f in hull.facets}
        mine = {f.incident for f in p.facets}
        if derived != mine:
            raise OracleMismatch("facet sets differ", sorted(map(sorted, derived ^ mine)))
    faces = face_lattice(hull.vertices, hull.facets, hull.dim)
    return OracleReport(
        len(hull.vertices),
        len(cloud) - len(hull.vertices),
        len(hull.facets) if p.dim >= 2 else 0,
        hull.dim,
        f_vector_of(faces, hull.dim),
    )


def hull_polytope(points):
    """Face data of conv(points) computed by the exact oracle alone."""
    hull = convex_hull(points)
    faces = face_lattice(hull.vertices, hull.facets, hull.dim)
    return hull, faces, f_vector_of(faces, hull.dim)
