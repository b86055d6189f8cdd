"""Command-line interface: ``brickpoly <verb> [flags]``.

Exit status is 0 on success, 1 on a domain error (the exception class name is
printed on stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .arrangement import brick_vector, greedy
from .enumeration import (
    all_arrangements,
    decreasing_orientation,
    flip_graph,
    lift_to_host,
    restricted_flip_graph,
)
from .errors import BrickError
from .network import (
    DupGraph,
    Network,
    alternating_network,
    bricks,
    duplicated_network,
    kernel,
    make_network,
    parse_shorthand,
    reflect,
    total_depth,
    universality_embedding,
    x_network,
    y_network,
)
from .polytope import (
    build_polytope,
    gp_coordinates,
    hull_oracle_verify,
    is_simple_vertex,
    minkowski_summand,
)
from .triangulations import (
    KTriangulation,
    PolygonWord,
    arrangement_to_triangulation,
    cyclohedron_vertices,
    d_sigma,
    facet_check,
    flip_diagonal,
    greedy_triangulation,
    hl_coordinates,
    k_stars,
    valid_sequences,
)


class UsageError(Exception):
    pass


def _vec(v) -> str:
    return " ".join(str(x) for x in v)


def _parse_dup(text: str) -> DupGraph:
    """``'1-2,2-3'`` or ``'4:1-2,2-3'`` (explicit vertex count)."""
    count = None
    if ":" in text:
        head, text = text.split(":", 1)
        count = int(head)
    edges = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        i, j = tok.split("-")
        edges.append((int(i), int(j)))
    if count is None:
        count = max(max(e) for e in edges)
    return DupGraph(count, tuple(edges))


def _parse_bands(text: str) -> Network:
    """``'3:2,1,2'`` -> 3 levels with bands 2, 1, 2."""
    head, _, rest = text.partition(":")
    return make_network(int(head), parse_shorthand(rest))


def add_network_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("network source")
    g.add_argument("--word", help="alternating network N_x for a word over {a,b}")
    g.add_argument("--bubble", type=int, metavar="N", help="bubble-sort network on N levels")
    g.add_argument("--x", type=int, metavar="M", help="two levels, M commutators")
    g.add_argument("--y", type=int, metavar="M", help="three levels, M alternating commutators")
    g.add_argument("--dup", metavar="EDGES", help="duplicated network, e.g. 1-2,2-3,1-3")
    g.add_argument("--bands", metavar="N:B,...", help="explicit bands, e.g. 3:2,1,2")
    g.add_argument("--json", type=Path, metavar="FILE", help="network JSON file ('-' for stdin)")
    g.add_argument("--kernel", type=int, default=0, metavar="K", help="erase K levels top and bottom")
    g.add_argument("--reflect", choices=["v", "h"], action="append", default=[])
    p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")


def network_from_args(args) -> Network:
    sources = [s for s in ("word", "bubble", "x", "y", "dup", "bands", "json") if getattr(args, s) is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --word, --bubble, --x, --y, --dup, --bands, --json")
    src = sources[0]
    if src == "word":
        net = alternating_network(args.word)
    elif src == "bubble":
        net = alternating_network("b" * (args.bubble - 2))
    elif src == "x":
        net = x_network(args.x)
    elif src == "y":
        net = y_network(args.y)
    elif src == "dup":
        net = duplicated_network(_parse_dup(args.dup))
    elif src == "bands":
        net = _parse_bands(args.bands)
    else:
        text = sys.stdin.read() if str(args.json) == "-" else args.json.read_text()
        net = Network.from_json(text)
    net = kernel(net, args.kernel)
    for axis in args.reflect:
        net = reflect(net, axis)
    return net


def cmd_net(args, out) -> None:
    net = network_from_args(args)
    out.write(net.to_json() + "\n")
    out.write(f"levels: {net.n}\n")
    out.write(f"commutators: {net.m}\n")
    out.write(f"bricks: {len(bricks(net))}\n")
    out.write(f"depth: {total_depth(net)}\n")


def cmd_enum(args, out) -> None:
    net = network_from_args(args)
    arrs = all_arrangements(net, jobs=args.jobs)
    if args.dot or args.decreasing:
        fg = flip_graph(net, arrs)
        if args.decreasing:
            decreasing_orientation(fg)  # asserts the unique source and sink
        out.write(fg.to_dot(directed=args.decreasing))
        return
    out.write(f"count: {len(arrs)}\n")
    if not args.count:
        for arr in arrs:
            out.write(arr.key + "\n")


def cmd_poly(args, out) -> None:
    net = network_from_args(args)
    arrs = all_arrangements(net, jobs=args.jobs)
    p = build_polytope(net, arrs)
    if args.fvector:
        out.write("f-vector: " + _vec(p.f_vector) + "\n")
        return
    if args.facets:
        for f in p.facets:
            out.write(f"F {f.bits} {f.rhs} : {_vec(sorted(f.incident))}\n")
        return
    if args.summands:
        for b in bricks(net):
            pts = minkowski_summand(net, b, arrs)
            out.write(f"brick {b.band} {b.left + 1} {b.right + 1}: " + " | ".join(_vec(v) for v in pts) + "\n")
        return
    if args.gp:
        gp = gp_coordinates(p)
        for subset in sorted(gp.z, key=lambda s: (len(s), sorted(s))):
            if subset:
                out.write(f"I {_vec(sorted(subset))} z {gp.z[subset]} y {gp.y[subset]}\n")
        return
    if args.verify:
        report = hull_oracle_verify(p)
        for line in report.lines():
            out.write(line + "\n")
        out.write("oracle: ok\n")
        return
    out.write(p.dump())
    if args.simple:
        bad = sum(1 for i in range(len(p.vertices)) if not is_simple_vertex(p, i))
        out.write(f"non-simple vertices: {bad}\n")


def _read_triangulation(args, polygon: PolygonWord, k: int) -> KTriangulation:
    if args.tri is None:
        return greedy_triangulation(polygon, k)
    text = sys.stdin.read() if str(args.tri) == "-" else args.tri.read_text()
    t = KTriangulation.from_text(text, polygon)
    if t.k != k:
        raise UsageError(f"triangulation file has k={t.k}, expected {k}")
    return t


def cmd_assoc(args, out) -> None:
    if args.cyclo:
        cyc = cyclohedron_vertices(args.word)
        out.write(f"count: {len(cyc.vectors)}\n")
        for v in cyc.vectors:
            out.write("V " + _vec(v) + "\n")
        return
    polygon = PolygonWord(args.word)
    k = args.k
    if args.hl:
        net = polygon.kernel(1)
        for arr in all_arrangements(net):
            t = arrangement_to_triangulation(arr, polygon, 1)
            out.write(f"{arr.key} hl {_vec(hl_coordinates(t))} brick {_vec(brick_vector(arr))}\n")
        return
    t = _read_triangulation(args, polygon, k)
    if args.stars:
        for star in k_stars(t):
            out.write(f"star {star.pseudoline}: {_vec(star.vertices)}\n")
        return
    if args.flip:
        i, j = (int(v) for v in args.flip.split(","))
        t, f = flip_diagonal(t, (i, j))
        out.write(f"# new diagonal {f[0]} {f[1]}\n")
    out.write(t.to_text())


def cmd_multi(args, out) -> None:
    if args.valid:
        p, q = args.valid
        seqs = valid_sequences(p, q)
        out.write(f"count: {len(seqs)}\n")
        for s in seqs:
            out.write(s.bits + "\n")
        return
    if args.n is None:
        raise UsageError("multi needs --n with --dsigma or --facet-check")
    if args.dsigma:
        for i, j in d_sigma(args.n, args.k, args.dsigma):
            out.write(f"{i} {j}\n")
        return
    if args.facet_check:
        results = facet_check(args.n, args.k)
        for r in results:
            out.write(f"{r.sigma} {'ok' if r.ok else 'FAIL'} {r.containing}\n")
        out.write(f"facets checked: {len(results)}\n")
        if not all(r.ok for r in results):
            raise BrickError("facet check failed")
        return
    raise UsageError("multi needs --valid, --dsigma or --facet-check")


def cmd_embed(args, out) -> None:
    net = network_from_args(args)
    emb = universality_embedding(net)
    out.write(f"host levels: {emb.host.n}\n")
    out.write(f"host commutators: {emb.host.m}\n")
    out.write("witness: " + " ".join(f"{i}-{j}" for i, j in emb.witness) + "\n")
    out.write("frozen: " + _vec(j + 1 for j in sorted(emb.frozen)) + "\n")
    arrs = all_arrangements(net)
    start = lift_to_host(emb, greedy(net))
    link = restricted_flip_graph(emb.host, emb.frozen, start)
    lifted = sorted(lift_to_host(emb, a).key for a in arrs)
    out.write(f"arrangements: {len(arrs)}\n")
    out.write(f"link arrangements: {len(link.nodes)}\n")
    out.write(f"match: {'yes' if lifted == link.nodes else 'no'}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brickpoly", description="Brick polytopes of sorting networks.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("net", help="build and echo a network")
    add_network_flags(p)
    p.set_defaults(func=cmd_net)

    p = sub.add_parser("enum", help="enumerate supported arrangements")
    add_network_flags(p)
    p.add_argument("--count", action="store_true", help="print the count only")
    p.add_argument("--dot", action="store_true", help="flip graph in DOT")
    p.add_argument("--decreasing", action="store_true", help="decreasing-flip orientation in DOT")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("poly", help="brick polytope")
    add_network_flags(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fvector", action="store_true")
    mode.add_argument("--facets", action="store_true")
    mode.add_argument("--summands", action="store_true")
    mode.add_argument("--gp", action="store_true", help="z and y coordinates")
    mode.add_argument("--verify", action="store_true", help="exact hull oracle cross-check")
    p.add_argument("--simple", action="store_true", help="also count non-simple vertices")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("assoc", help="triangulations, associahedra and cyclohedra")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--tri", type=Path, help="triangulation file ('n k' header, 'i j' lines)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--hl", action="store_true", help="classical coordinates next to brick vectors")
    mode.add_argument("--cyclo", action="store_true", help="centrally symmetric triangulations")
    mode.add_argument("--stars", action="store_true")
    mode.add_argument("--flip", metavar="I,J")
    p.set_defaults(func=cmd_assoc)

    p = sub.add_parser("multi", help="multitriangulations of the bubble-sort polygon")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=2)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--valid", type=int, nargs=2, metavar=("P", "Q"))
    mode.add_argument("--dsigma", metavar="BITS")
    mode.add_argument("--facet-check", action="store_true")
    p.set_defaults(func=cmd_multi)

    p = sub.add_parser("embed", help="universality embedding report")
    add_network_flags(p)
    p.set_defaults(func=cmd_embed)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad usage
    out = sys.stdout
    try:
        args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except (BrickError, AssertionError) as exc:
        name = "AssertionError" if isinstance(exc, AssertionError) else type(exc).__name__
        print(f"{name}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
