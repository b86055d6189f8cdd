"""Pseudoline arrangements supported by a network.

An arrangement is identified by its mark vector: ``marks[j]`` is True when
commutator ``j`` is a contact and False when it is a crossing.  Pseudoline
``i`` starts at level ``i`` and ends at level ``n + 1 - i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphMismatch, NotAContact, NotSorting
from .network import Brick, Network, bricks, total_depth

CONTACT, CROSSING = "C", "X"


@dataclass(frozen=True)
class ContactGraph:
    n: int
    arcs: tuple[tuple[int, int, int], ...]  # (above, below, commutator)

    def arc_pairs(self) -> Counter:
        return Counter((a, b) for a, b, _ in self.arcs)

    def components(self) -> list[frozenset[int]]:
        parent = list(range(self.n + 1))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b, _ in self.arcs:
            parent[find(a)] = find(b)
        groups: dict[int, set[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), set()).add(v)
        return sorted((frozenset(g) for g in groups.values()), key=min)


def _sweep(net: Network, marks: Sequence[bool]):
    """Run the pseudolines through the network.

    Returns the level order before each commutator (bottom to top) and the
    final order, or None if a crossing is placed on a pair that already
    crossed.
    """
    order = list(range(1, net.n + 1))
    states = []
    for b, contact in zip(net.bands, marks):
        states.append(tuple(order))
        if not contact:
            below, above = order[b - 1], order[b]
            if below > above:
                return None
            order[b - 1], order[b] = above, below
    return states, order


@dataclass(frozen=True)
class Arrangement:
    net: Network = field(repr=False)
    marks: tuple[bool, ...]

    @classmethod
    def from_marks(cls, net: Network, marks: Iterable[bool]) -> "Arrangement":
        """Validated constructor; raises GraphMismatch on an unsupported mark vector."""
        marks = tuple(bool(c) for c in marks)
        if len(marks) != net.m:
            raise GraphMismatch(f"expected {net.m} marks, got {len(marks)}")
        swept = _sweep(net, marks)
        if swept is None or swept[1] != list(range(net.n, 0, -1)):
            raise GraphMismatch("mark vector is not a pseudoline arrangement")
        return cls(net, marks)

    @classmethod
    def from_string(cls, net: Network, text: str) -> "Arrangement":
        if set(text) - {CONTACT, CROSSING}:
            raise ValueError(f"mark string must be over X/C, got {text!r}")
        return cls.from_marks(net, (c == CONTACT for c in text))

    def __str__(self) -> str:
        return self.key

    @cached_property
    def key(self) -> str:
        return "".join(CONTACT if c else CROSSING for c in self.marks)

    @cached_property
    def trajectory(self) -> tuple[tuple[int, ...], ...]:
        """Level order (bottom to top) just before each commutator."""
        return tuple(_sweep(self.net, self.marks)[0])

    @cached_property
    def meet(self) -> tuple[tuple[int, int], ...]:
        """(above, below) pseudolines at each commutator."""
        return tuple(
            (state[b], state[b - 1]) for state, b in zip(self.trajectory, self.net.bands)
        )

    @cached_property
    def crossing_of(self) -> dict[frozenset, int]:
        return {
            frozenset(pair): j for j, pair in enumerate(self.meet) if not self.marks[j]
        }

    @property
    def contacts(self) -> frozenset[int]:
        return frozenset(j for j, c in enumerate(self.marks) if c)

    def level_profile(self, i: int) -> list[int]:
        """Levels occupied by pseudoline ``i`` before each commutator, then at the end."""
        final = list(range(self.net.n, 0, -1))
        return [state.index(i) + 1 for state in self.trajectory] + [final.index(i) + 1]

    def after(self, j: int) -> tuple[int, ...]:
        state = list(self.trajectory[j])
        if not self.marks[j]:
            b = self.net.bands[j]
            state[b - 1], state[b] = state[b], state[b - 1]
        return tuple(state)


def greedy(net: Network) -> Arrangement:
    """Sort (n, ..., 1) through the network, crossing as early as possible."""
    order = list(range(1, net.n + 1))
    marks = []
    for b in net.bands:
        below, above = order[b - 1], order[b]
        if below < above:
            order[b - 1], order[b] = above, below
            marks.append(False)
        else:
            marks.append(True)
    if order != list(range(net.n, 0, -1)):
        raise NotSorting(f"network leaves order {order} unsorted")
    return Arrangement(net, tuple(marks))


def is_sorting(net: Network) -> bool:
    try:
        greedy(net)
    except NotSorting:
        return False
    return True


def demazure_product(net: Network) -> tuple[int, ...]:
    """Demazure product of the band word, in one-line notation."""
    # Evaluated right to left with left multiplications (swapping values, not
    # positions), so it shares no code path with the greedy sweep.
    w = list(range(1, net.n + 1))
    for b in reversed(net.bands):
        i, k = w.index(b), w.index(b + 1)
        if i < k:
            w[i], w[k] = b + 1, b
    return tuple(w)


def flip(arr: Arrangement, j: int) -> Arrangement:
    if not arr.marks[j]:
        raise NotAContact(f"commutator {j + 1} is a crossing")
    w = arr.crossing_of[frozenset(arr.meet[j])]
    marks = list(arr.marks)
    marks[j], marks[w] = False, True
    return Arrangement(arr.net, tuple(marks))


def flip_partner(arr: Arrangement, j: int) -> int:
    """Commutator that becomes a contact when contact ``j`` is flipped."""
    if not arr.marks[j]:
        raise NotAContact(f"commutator {j + 1} is a crossing")
    return arr.crossing_of[frozenset(arr.meet[j])]


def is_decreasing_flip(arr: Arrangement, j: int) -> bool:
    return flip_partner(arr, j) < j


def contact_graph(arr: Arrangement) -> ContactGraph:
    arcs = tuple(
        (above, below, j)
        for j, (above, below) in enumerate(arr.meet)
        if arr.marks[j]
    )
    return ContactGraph(arr.net.n, arcs)


def summand_vector(arr: Arrangement, brick: Brick) -> tuple[int, ...]:
    """0/1 indicator of the pseudolines passing above ``brick``."""
    state = arr.after(brick.left)
    vec = [0] * arr.net.n
    for p in state[brick.band :]:
        vec[p - 1] = 1
    return tuple(vec)


def brick_vector(arr: Arrangement) -> tuple[int, ...]:
    vec = [0] * arr.net.n
    for brick in bricks(arr.net):
        for p in arr.after(brick.left)[brick.band :]:
            vec[p - 1] += 1
    return tuple(vec)


def from_contact_graph(net: Network, arcs: Iterable) -> Arrangement:
    """Rebuild the arrangement whose contact graph has the given arcs.

    ``arcs`` holds (above, below) pairs or (above, below, commutator) triples;
    commutator indices, if present, are ignored.
    """
    pool = Counter((a[0], a[1]) for a in arcs)
    order = list(range(1, net.n + 1))
    marks = []
    for j, b in enumerate(net.bands):
        below, above = order[b - 1], order[b]
        if pool[above, below] > 0:
            pool[above, below] -= 1
            marks.append(True)
        elif below < above:
            order[b - 1], order[b] = above, below
            marks.append(False)
        else:
            raise GraphMismatch(
                f"commutator {j + 1}: pair {above, below} already crossed and no arc left"
            )
    if +pool:
        raise GraphMismatch(f"unconsumed arcs {sorted((+pool).elements())}")
    if order != list(range(net.n, 0, -1)):
        raise GraphMismatch(f"some pair never crosses, final order {order}")
    return Arrangement(net, tuple(marks))


def check_hyperplane(arr: Arrangement) -> bool:
    return sum(brick_vector(arr)) == total_depth(arr.net)
