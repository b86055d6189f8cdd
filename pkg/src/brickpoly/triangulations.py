"""Polygons P_x, k-triangulations and their dual arrangements on k-kernels.

Polygons are purely combinatorial.  Vertex ``i + 1`` lies on the upper chain
when ``x[i - 1] == 'a'`` and on the lower chain otherwise; counterclockwise the
vertices read 1, the lower chain left to right, n, the upper chain right to
left.  Diagonals are sorted label pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

from .arrangement import Arrangement, brick_vector, flip, flip_partner, greedy
from .enumeration import all_arrangements
from .errors import GraphMismatch, NotAntisymmetric, NotATriangulation, NotRelevant
from .network import Network, alternating_network, kernel

Diagonal = tuple[int, int]

RELEVANT, BOUNDARY, IRRELEVANT = "relevant", "boundary", "irrelevant"


@dataclass(frozen=True)
class PolygonWord:
    x: str

    def __post_init__(self):
        if set(self.x) - {"a", "b"}:
            raise ValueError(f"word must be over {{a, b}}, got {self.x!r}")

    @classmethod
    def bubble(cls, n: int) -> "PolygonWord":
        return cls("b" * (n - 2))

    @property
    def n(self) -> int:
        return len(self.x) + 2

    @cached_property
    def cycle(self) -> tuple[int, ...]:
        lower = [i + 1 for i, c in enumerate(self.x, start=1) if c == "b"]
        upper = [i + 1 for i, c in enumerate(self.x, start=1) if c == "a"]
        return (1, *lower, self.n, *reversed(upper))

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: p for p, v in enumerate(self.cycle)}

    def diagonals(self) -> list[Diagonal]:
        """All pairs of vertices, hull edges included."""
        return list(combinations(range(1, self.n + 1), 2))

    def sides(self, d: Diagonal) -> tuple[int, int]:
        """Numbers of vertices strictly on each side of ``d``."""
        p, q = sorted(self.position[v] for v in d)
        inner = q - p - 1
        return inner, self.n - 2 - inner

    def crosses(self, d: Diagonal, e: Diagonal) -> bool:
        if set(d) & set(e):
            return False
        p, q = sorted(self.position[v] for v in d)
        inside = [p < self.position[v] < q for v in e]
        return inside[0] != inside[1]

    def classify(self, d: Diagonal, k: int) -> str:
        few = min(self.sides(d))
        if few >= k:
            return RELEVANT
        return BOUNDARY if few == k - 1 else IRRELEVANT

    def relevant(self, k: int) -> list[Diagonal]:
        return [d for d in self.diagonals() if self.classify(d, k) == RELEVANT]

    def forced(self, k: int) -> list[Diagonal]:
        """Diagonals contained in every k-triangulation."""
        return [d for d in self.diagonals() if self.classify(d, k) != RELEVANT]

    def network(self) -> Network:
        return alternating_network(self.x)

    def kernel(self, k: int) -> Network:
        return kernel(self.network(), k)


def classify_diagonal(n: int, k: int, d: Diagonal, polygon: PolygonWord | None = None) -> str:
    polygon = PolygonWord.bubble(n) if polygon is None else polygon
    return polygon.classify(tuple(sorted(d)), k)


def _norm(d) -> Diagonal:
    i, j = d
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class KTriangulation:
    polygon: PolygonWord
    k: int
    diagonals: frozenset[Diagonal]

    @property
    def n(self) -> int:
        return self.polygon.n

    def relevant(self) -> list[Diagonal]:
        return sorted(d for d in self.diagonals if self.polygon.classify(d, self.k) == RELEVANT)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.k}"] + [f"{i} {j}" for i, j in sorted(self.diagonals)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, polygon: PolygonWord | None = None) -> "KTriangulation":
        rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
        if not rows or any(len(r) != 2 for r in rows):
            raise ValueError("expected an 'n k' header followed by 'i j' lines")
        n, k = int(rows[0][0]), int(rows[0][1])
        polygon = PolygonWord.bubble(n) if polygon is None else polygon
        if polygon.n != n:
            raise ValueError(f"header says n={n}, polygon has {polygon.n} vertices")
        return make_triangulation(polygon, k, (_norm((int(a), int(b))) for a, b in rows[1:]))


def has_crossing_clique(polygon: PolygonWord, diagonals, size: int) -> bool:
    """Are there ``size`` pairwise crossing diagonals?"""
    diags = sorted(diagonals)

    def extend(clique, candidates):
        if len(clique) == size:
            return True
        for idx, d in enumerate(candidates):
            rest = [e for e in candidates[idx + 1 :] if polygon.crosses(d, e)]
            if len(clique) + 1 + len(rest) >= size and extend(clique + [d], rest):
                return True
        return False

    return extend([], diags)


def make_triangulation(polygon: PolygonWord, k: int, diagonals) -> KTriangulation:
    diags = frozenset(_norm(d) for d in diagonals)
    n = polygon.n
    if any(not (1 <= i < j <= n) for i, j in diags):
        raise NotATriangulation("diagonal endpoints out of range")
    missing = set(polygon.forced(k)) - diags
    if missing:
        raise NotATriangulation(f"missing forced diagonals {sorted(missing)}")
    if len(diags) != k * (2 * n - 2 * k - 1):
        raise NotATriangulation(f"{len(diags)} diagonals, expected {k * (2 * n - 2 * k - 1)}")
    if has_crossing_clique(polygon, [d for d in diags if d not in missing], k + 1):
        raise NotATriangulation(f"{k + 1} mutually crossing diagonals")
    return KTriangulation(polygon, k, diags)


def _dual_network(polygon: PolygonWord, k: int) -> Network:
    return polygon.kernel(k)


def triangulation_to_arrangement(t: KTriangulation, net: Network | None = None) -> Arrangement:
    net = _dual_network(t.polygon, t.k) if net is None else net
    marks = [lab in t.diagonals for lab in net.labels]
    try:
        return Arrangement.from_marks(net, marks)
    except GraphMismatch as exc:
        raise NotATriangulation(str(exc)) from exc


def arrangement_to_triangulation(arr: Arrangement, polygon: PolygonWord, k: int) -> KTriangulation:
    contacts = {arr.net.labels[j] for j in arr.contacts}
    return KTriangulation(polygon, k, frozenset(contacts) | frozenset(polygon.forced(k)))


def all_triangulations(polygon: PolygonWord, k: int, max_nodes: int | None = None) -> list[KTriangulation]:
    net = _dual_network(polygon, k)
    return [arrangement_to_triangulation(a, polygon, k) for a in all_arrangements(net, max_nodes)]


def flip_diagonal(t: KTriangulation, e: Diagonal) -> tuple[KTriangulation, Diagonal]:
    e = _norm(e)
    if e not in t.diagonals or t.polygon.classify(e, t.k) != RELEVANT:
        raise NotRelevant(f"{e} is not a {t.k}-relevant diagonal of the triangulation")
    net = _dual_network(t.polygon, t.k)
    arr = triangulation_to_arrangement(t, net)
    j = net.labels.index(e)
    f = net.labels[flip_partner(arr, j)]
    return arrangement_to_triangulation(flip(arr, j), t.polygon, t.k), f


@dataclass(frozen=True)
class Star:
    vertices: tuple[int, ...]  # cyclic order around the polygon
    pseudoline: int  # dual pseudoline on the k-kernel

    def edges(self, k: int) -> list[Diagonal]:
        s = self.vertices
        size = len(s)
        return sorted(_norm((s[i], s[(i + k) % size])) for i in range(size))


def _candidate_stars(t: KTriangulation) -> list[tuple[int, ...]]:
    k, size = t.k, 2 * t.k + 1
    out = []
    for subset in combinations(t.polygon.cycle, size):
        if all(_norm((subset[i], subset[(i + k) % size])) in t.diagonals for i in range(size)):
            out.append(subset)
    return out


def k_stars(t: KTriangulation) -> list[Star]:
    """The n - 2k stars of ``t``, indexed by their dual pseudoline.

    A star is a (2k+1)-subset whose k-th neighbour edges all lie in ``t``; the
    star dual to pseudoline l has l + k as its middle vertex label.
    """
    found = _candidate_stars(t)
    if len(found) != t.n - 2 * t.k:
        raise AssertionError(f"found {len(found)} stars, expected {t.n - 2 * t.k}")
    net = _dual_network(t.polygon, t.k)
    arr = triangulation_to_arrangement(t, net)
    touching = {p: set() for p in range(1, net.n + 1)}
    for j in arr.contacts:
        for p in arr.meet[j]:
            touching[p].add(net.labels[j])
    stars = []
    for cyc in found:
        middle = sorted(cyc)[t.k]
        line = middle - t.k
        star = Star(cyc, line)
        mine = {d for d in star.edges(t.k) if t.polygon.classify(d, t.k) == RELEVANT}
        if mine != touching[line]:
            raise AssertionError(f"star {cyc} does not match pseudoline {line}")
        stars.append(star)
    return sorted(stars, key=lambda s: s.pseudoline)


def common_bisector(polygon: PolygonWord, k: int, s: Star, r: Star) -> Diagonal:
    """The diagonal ``[s_j, r_i]`` that bisects both stars."""

    def bisects(star, vertex, other):
        cyc = star.vertices
        size = len(cyc)
        j = cyc.index(vertex)
        lo, hi = polygon.position[cyc[(j + k) % size]], polygon.position[cyc[(j + k + 1) % size]]
        pos = polygon.position[other]
        base = polygon.position[vertex]
        # strictly between s_{j+k} and s_{j+k+1}, walking away from s_j
        rel = lambda p: (p - base) % polygon.n
        return rel(lo) < rel(pos) < rel(hi)

    hits = [
        _norm((a, b))
        for a in s.vertices
        for b in r.vertices
        if a != b and bisects(s, a, b) and bisects(r, b, a)
    ]
    if len(set(hits)) != 1:
        raise AssertionError(f"stars {s.vertices} and {r.vertices} have bisectors {hits}")
    return hits[0]


def hl_coordinates(t: KTriangulation) -> tuple[int, ...]:
    """Integer coordinates of a triangulation (k = 1) in the classical
    associahedron realization indexed by the word."""
    if t.k != 1:
        raise ValueError("coordinates are defined for triangulations only")
    n, x = t.n, t.polygon.x
    triangles = [s.vertices for s in k_stars(t)]
    coords = []
    for j in range(1, n - 1):
        mid = j + 1
        (u, v), = [(min(tri), max(tri)) for tri in triangles if sorted(tri)[1] == mid]
        pi = boundary_edges(t.polygon, u, mid, v) * boundary_edges(t.polygon, mid, v, u)
        # vertex j + 1 sits on the chain chosen by letter j
        coords.append(pi if x[j - 1] == "b" else n + 1 - pi)
    return tuple(coords)


def boundary_edges(polygon: PolygonWord, a: int, b: int, avoid: int) -> int:
    """Polygon edges on the boundary path from ``a`` to ``b`` that misses ``avoid``."""
    n, pos = polygon.n, polygon.position
    steps = (pos[b] - pos[a]) % n
    if 0 < (pos[avoid] - pos[a]) % n < steps:
        steps = n - steps
    return steps


def half_turn(polygon: PolygonWord, d: Diagonal) -> Diagonal:
    half = polygon.n // 2
    cyc, pos = polygon.cycle, polygon.position
    return _norm(tuple(cyc[(pos[v] + half) % polygon.n] for v in d))


def is_antisymmetric(x: str) -> bool:
    size = len(x)
    return size % 2 == 0 and all({x[i], x[size - 1 - i]} == {"a", "b"} for i in range(size))


def is_centrally_symmetric(t: KTriangulation) -> bool:
    return {half_turn(t.polygon, d) for d in t.diagonals} == set(t.diagonals)


@dataclass
class Cyclohedron:
    polygon: PolygonWord
    triangulations: list[KTriangulation]
    vectors: list[tuple[int, ...]]


def cyclohedron_vertices(x: str) -> Cyclohedron:
    if not is_antisymmetric(x):
        raise NotAntisymmetric(f"{x!r} is not antisymmetric")
    polygon = PolygonWord(x)
    net = polygon.kernel(1)
    picked = []
    for arr in all_arrangements(net):
        t = arrangement_to_triangulation(arr, polygon, 1)
        if is_centrally_symmetric(t):
            picked.append((brick_vector(arr), t))
    picked.sort(key=lambda pair: pair[0])
    return Cyclohedron(polygon, [t for _, t in picked], [v for v, _ in picked])


@dataclass(frozen=True)
class ValidSequence:
    p: int
    q: int
    bits: str


def is_valid(bits: str, p: int) -> bool:
    if "0" not in bits or "1" not in bits:
        return False
    return re.search("10{%d,}1" % p, bits) is None


def valid_sequences(p: int, q: int) -> list[ValidSequence]:
    words = ("".join(w) for w in product("01", repeat=q))
    return [ValidSequence(p, q, w) for w in words if is_valid(w, p)]


def d_sigma(n: int, k: int, sigma: str) -> list[Diagonal]:
    if len(sigma) != n - 2 * k:
        raise ValueError(f"sigma must have length {n - 2 * k}, got {len(sigma)}")
    padded = "0" * k + sigma + "0" * k
    zeta = [i + 1 for i, c in enumerate(padded) if c == "0"]
    return sorted({_norm((zeta[i], zeta[i + k])) for i in range(len(zeta) - k)})


@dataclass
class FacetCheck:
    sigma: str
    facet_normal: tuple[int, ...] | None
    containing: int  # triangulations containing D(sigma)
    ok: bool


def facet_check(n: int, k: int, polytope=None) -> list[FacetCheck]:
    """For each k-valid sigma, match the triangulations containing D(sigma)
    against a facet of the bubble-sort brick polytope."""
    from .polytope import build_polytope  # local to keep module import light

    polygon = PolygonWord.bubble(n)
    net = polygon.kernel(k)
    p = build_polytope(net) if polytope is None else polytope
    index = {v: i for i, v in enumerate(p.vertices)}
    pairs = [(arrangement_to_triangulation(a, polygon, k), brick_vector(a)) for a in p.arrangements]
    out = []
    for seq in valid_sequences(k, n - 2 * k):
        wanted = set(d_sigma(n, k, seq.bits))
        vectors = {vec for t, vec in pairs if wanted <= t.diagonals}
        incident = frozenset(index[v] for v in vectors if v in index)
        normal = tuple(int(c) for c in seq.bits)
        match = [f for f in p.facets if f.normal == normal and f.incident == incident]
        # non-vertex brick vectors may also land on the facet
        on_face = bool(match) and all(
            sum(a * b for a, b in zip(normal, v)) == match[0].rhs for v in vectors
        )
        count = sum(1 for t, _ in pairs if wanted <= t.diagonals)
        out.append(FacetCheck(seq.bits, normal if match else None, count, on_face))
    return out


def greedy_triangulation(polygon: PolygonWord, k: int) -> KTriangulation:
    return arrangement_to_triangulation(greedy(polygon.kernel(k)), polygon, k)
