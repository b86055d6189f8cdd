"""Exact rational linear algebra for the hull oracle.

Everything here works over ``Fraction``/``int``; nothing touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = Sequence[int]


def _echelon(vectors):
    """Reduce ``vectors`` one by one; yield (pivot, row) for each new direction."""
    basis = []
    for vec in vectors:
        v = [Fraction(x) for x in vec]
        for piv, row in basis:
            c = v[piv]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is not None:
            c = v[piv]
            row = [x / c for x in v]
            basis.append((piv, row))
            yield piv, row


def rank(vectors) -> int:
    return sum(1 for _ in _echelon(vectors))


def affine_rank(points) -> int:
    """Dimension of the affine hull; -1 for the empty set."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    return rank([tuple(a - b for a, b in zip(p, base)) for p in pts[1:]])


def affine_pivots(points) -> list[int]:
    """Coordinates onto which projection is injective on the affine hull."""
    pts = list(points)
    base = pts[0]
    return sorted(piv for piv, _ in _echelon(tuple(a - b for a, b in zip(p, base)) for p in pts[1:]))


def in_convex_hull(point: Vector, others: Sequence[Vector]) -> bool:
    """Exact phase-one simplex: is ``point`` a convex combination of ``others``?"""
    if not others:
        return False
    d = len(point)
    count = len(others)
    rows = []
    for r in range(d):
        rows.append([Fraction(q[r]) for q in others] + [Fraction(point[r])])
    rows.append([Fraction(1)] * count + [Fraction(1)])
    for row in rows:
        if row[-1] < 0:
            row[:] = [-x for x in row]
    m = len(rows)
    width = count + m
    tableau = []
    for r, row in enumerate(rows):
        art = [Fraction(0)] * m
        art[r] = Fraction(1)
        tableau.append(row[:-1] + art + [row[-1]])
    basis = [count + r for r in range(m)]
    # reduced costs of the phase-one objective (sum of artificials)
    cost = [-sum(t[j] for t in tableau) for j in range(count)] + [Fraction(0)] * m
    value = -sum(t[-1] for t in tableau)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for r, t in enumerate(tableau):
            if t[enter] > 0:
                ratio = t[-1] / t[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:  # unbounded cannot happen in phase one
            raise AssertionError("phase-one LP unbounded")
        r = best[1]
        piv = tableau[r][enter]
        tableau[r] = [x / piv for x in tableau[r]]
        prow = tableau[r]
        for s in range(m):
            if s != r and tableau[s][enter]:
                c = tableau[s][enter]
                tableau[s] = [x - c * y for x, y in zip(tableau[s], prow)]
        c = cost[enter]
        cost = [x - c * y for x, y in zip(cost, prow[:-1])]
        value -= c * prow[-1]
        basis[r] = enter
    return value == 0


def _primitive(vec):
    den = 1
    for x in vec:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints) if g else tuple(ints)


def _solve_inverse(mat):
    """Inverse of a square rational matrix by Gauss-Jordan."""
    size = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == r)) for i in range(size)] for r, row in enumerate(mat)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def facet_cone(generators: Sequence[Vector]) -> list[tuple[int, ...]]:
    """Extreme rays of ``{a : a.g >= 0 for every generator g}``.

    Double description method; the generators must span the whole space.
    Each returned ray is a primitive integer vector.
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    dim = len(gens[0])
    # pick a basis among the generators
    chosen, basis_rows = [], []
    for idx, g in enumerate(gens):
        if rank(basis_rows + [g]) > len(basis_rows):
            chosen.append(idx)
            basis_rows.append(g)
            if len(chosen) == dim:
                break
    if len(chosen) < dim:
        raise ValueError("generators do not span the ambient space")
    inv = _solve_inverse(basis_rows)
    rays = []
    for col in range(dim):
        ray = _primitive([inv[r][col] for r in range(dim)])
        zero = frozenset(chosen[i] for i in range(dim) if i != col)
        rays.append((ray, zero))
    done = set(chosen)
    for idx, g in enumerate(gens):
        if idx in done:
            continue
        done.add(idx)
        signs = [_dot(g, ray) for ray, _ in rays]
        plus = [i for i, s in enumerate(signs) if s > 0]
        minus = [i for i, s in enumerate(signs) if s < 0]
        zero = [i for i, s in enumerate(signs) if s == 0]
        new = [(rays[i][0], rays[i][1]) for i in plus]
        new += [(rays[i][0], rays[i][1] | {idx}) for i in zero]
        if minus:
            for i in plus:
                for k in minus:
                    common = rays[i][1] & rays[k][1]
                    if len(common) < dim - 2:
                        continue
                    if any(t != i and t != k and common <= rays[t][1] for t in range(len(rays))):
                        continue
                    si, sk = signs[i], signs[k]
                    ray = _primitive([si * b - sk * a for a, b in zip(rays[i][0], rays[k][0])])
                    new.append((ray, common | {idx}))
        rays = new
    return sorted(ray for ray, _ in rays)


@dataclass
class Hull:
    points: list[tuple[int, ...]]  # distinct input points
    vertices: list[tuple[int, ...]]  # sorted
    dim: int
    facets: list[frozenset[int]]  # incident vertex indices
    facet_points: list[frozenset[int]]  # incident point indices


def convex_hull(points: Sequence[Vector]) -> Hull:
    """Vertices (by exact LP) and facets (by double description) of a point set."""
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    dim = affine_rank(pts)
    verts = [p for i, p in enumerate(pts) if not in_convex_hull(p, pts[:i] + pts[i + 1 :])]
    if dim <= 0:
        return Hull(pts, verts, dim, [], [])
    coords = affine_pivots(pts)
    lifted = [(1,) + tuple(p[c] for c in coords) for p in pts]
    normals = facet_cone(lifted)
    vindex = {v: i for i, v in enumerate(verts)}
    facets, facet_points = [], []
    for a in normals:
        on = frozenset(i for i, g in enumerate(lifted) if _dot(a, g) == 0)
        facet_points.append(on)
        facets.append(frozenset(vindex[pts[i]] for i in on if pts[i] in vindex))
    order = sorted(range(len(facets)), key=lambda i: sorted(facets[i]))
    return Hull(pts, verts, dim, [facets[i] for i in order], [facet_points[i] for i in order])
