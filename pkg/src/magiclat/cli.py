"""Command-line interface.

Every command is a thin shell over the library; outputs are deterministic
for fixed inputs and flags.  Exit codes: 0 success, 1 domain error, 2
malformed input, 3 resource-cap refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import applications, faces as faces_mod
from .ehrhart import (
    bipartite_component_count,
    count_magic,
    expected_degree,
    fit_quasipolynomial,
)
from .errors import InputError, MagiclatError, ResourceLimitError
from .formats import (
    host_to_json,
    parse_group_table_file,
    parse_host_file,
    parse_matrix_file,
    serialize_host,
    serialize_matrix,
)
from .hilbert import basis_of, is_positive, positive_part
from .model import (
    Labeling,
    cayley_digraph,
    complete_digraph,
    digraph_to_bipartite,
    transport_labeling,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _element_lines(labelings) -> list[str]:
    return [f"sum={l.magic_sum} values={list(l.values)}" for l in labelings]


def _load_host(args):
    if getattr(args, "injected_host", None) is not None:
        if args.file is not None:
            raise InputError("birkhoff builds its own host; remove the FILE argument")
        return args.injected_host, None
    if args.file is None:
        raise InputError("missing input FILE")
    return parse_host_file(args.file)


def _require_labeling(path) -> Labeling:
    host, labeling = parse_host_file(path)
    if labeling is None:
        raise InputError(f"{path}: expected labeled edges (u v k)")
    return labeling


# ---------------------------------------------------------------------------
# command handlers


def cmd_hilbert(args, out):
    host, _ = _load_host(args)
    hb = basis_of(host)
    if args.json:
        out.write(_dump(hb.to_json()))
    else:
        out.write(f"hilbert basis: {len(hb.elements)} elements\n")
        for line in _element_lines(hb.elements):
            out.write(line + "\n")
    return EXIT_OK


def cmd_count(args, out):
    host, _ = _load_host(args)
    value = count_magic(host, args.sum)
    if args.json:
        out.write(_dump({"sum": args.sum, "count": str(value)}))
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_ehrhart(args, out):
    host, _ = _load_host(args)
    qp = fit_quasipolynomial(host)
    if args.json:
        out.write(_dump(qp.to_json()))
    else:
        if qp.delta:
            out.write("counting function: 1 at sum 0, else 0 (no positive edges)\n")
        else:
            out.write(f"degree: {qp.degree}\n")
            out.write(f"I: {[str(c) for c in qp.i_coeffs]}\n")
            out.write(f"J: {[str(c) for c in qp.j_coeffs]}\n")
    return EXIT_OK


def cmd_faces(args, out):
    host, _ = _load_host(args)
    poset = faces_mod.enumerate_faces(host)
    payload = faces_mod.poset_to_json(poset)
    if args.dim is not None:
        payload["faces"] = [f for f in payload["faces"] if f["dim"] == args.dim]
        payload.pop("covers")
    if args.json:
        out.write(_dump(payload))
    else:
        out.write(f"dimension: {payload['dimension']}\n")
        out.write(f"f_vector: {payload['f_vector']}\n")
        for face in payload["faces"]:
            out.write(f"dim={face['dim']} class={face['class']} support={face['support']}\n")
    return EXIT_OK


def cmd_edge_graph(args, out):
    host, _ = _load_host(args)
    poset = faces_mod.enumerate_faces(host)
    if args.dot:
        out.write(faces_mod.edge_graph_to_dot(poset))
    elif args.json:
        out.write(_dump(faces_mod.edge_graph_to_json(poset)))
    else:
        graph = faces_mod.edge_graph(poset)
        out.write(serialize_host(graph))
    return EXIT_OK


def cmd_poset(args, out):
    host, _ = _load_host(args)
    poset = faces_mod.enumerate_faces(host)
    if args.dot:
        out.write(faces_mod.poset_to_dot(poset))
    elif args.json:
        out.write(_dump(faces_mod.poset_to_json(poset)))
    else:
        for i, face in enumerate(poset.faces):
            out.write(f"f{i}: dim={face.dim} support={sorted(face.support)}\n")
        for low, high in poset.cover_edges:
            out.write(f"f{low} < f{high}\n")
    return EXIT_OK


def cmd_classes(args, out):
    host, _ = _load_host(args)
    poset = faces_mod.enumerate_faces(host)
    classes = faces_mod.isomorphism_classes(poset, args.dim)
    if args.json:
        out.write(
            _dump(
                {
                    "dim": args.dim,
                    "classes": [
                        {
                            "count": count,
                            "support": sorted(rep.support),
                            "edges": [
                                [str(t) for t in poset.host.edge_tokens(e)]
                                for e in sorted(rep.support)
                            ],
                        }
                        for rep, count in classes
                    ],
                }
            )
        )
    else:
        out.write(f"{len(classes)} isomorphism classes in dimension {args.dim}\n")
        for rep, count in classes:
            out.write(f"count={count} support={sorted(rep.support)}\n")
    return EXIT_OK


_FORWARDABLE = {
    "hilbert", "count", "ehrhart", "faces", "edge-graph", "poset",
    "classes", "matchings", "check",
}


def cmd_birkhoff(args, out, parser):
    if not args.rest:
        raise InputError("birkhoff needs a subcommand, e.g. birkhoff --n 3 faces")
    sub = parser.parse_args(args.rest)
    if sub.command not in _FORWARDABLE:
        raise InputError(f"birkhoff cannot forward to {sub.command!r}")
    sub.injected_host = complete_digraph(args.n)
    return _dispatch(sub, out, parser)


def cmd_matchings(args, out):
    host, _ = _load_host(args)
    if args.max is None:
        found = applications.perfect_matchings(host)
        header = f"perfect matchings: {len(found)}\n"
    else:
        found = applications.n_matchings(host, args.max)
        header = f"magic labelings of sum at most {args.max}: {len(found)}\n"
    if args.json:
        out.write(
            _dump(
                {
                    "count": len(found),
                    "elements": [
                        {"values": list(l.values), "magic_sum": l.magic_sum} for l in found
                    ],
                }
            )
        )
    else:
        out.write(header)
        for line in _element_lines(found):
            out.write(line + "\n")
    return EXIT_OK


def cmd_factorize(args, out):
    host, _ = _load_host(args)
    labeling = _require_labeling(args.labelfile)
    if labeling.host != host:
        raise InputError("labeling file does not describe the same host")
    sums = None
    if args.sums:
        try:
            sums = [int(tok) for tok in args.sums.split(",")]
        except ValueError:
            raise InputError(f"--sums expects comma-separated integers, got {args.sums!r}") from None
    results = applications.magic_factorizations(labeling, sums)
    if args.json:
        out.write(
            _dump(
                {
                    "factorizations": [
                        [{"values": list(f.values), "magic_sum": f.magic_sum} for f in fac]
                        for fac in results
                    ]
                }
            )
        )
    else:
        out.write(f"factorizations: {len(results)}\n")
        for k, fac in enumerate(results):
            out.write(f"factorization {k}:\n")
            for line in _element_lines(fac):
                out.write("  " + line + "\n")
    return EXIT_OK


def cmd_cayley(args, out):
    table = parse_group_table_file(args.tablefile)
    digraph, labeling = cayley_digraph(table)
    magic = labeling.is_magic
    if args.json:
        out.write(
            _dump(
                {
                    "host": host_to_json(digraph),
                    "labels": list(labeling.values),
                    "magic": magic,
                    "sum": labeling.magic_sum,
                }
            )
        )
    else:
        for e in range(digraph.edge_count):
            u, v = digraph.edge_tokens(e)
            out.write(f"{u} {v} {labeling.values[e]}\n")
        out.write(f"magic: {str(magic).lower()}, sum: {labeling.magic_sum}\n")
    return EXIT_OK


def cmd_convert(args, out):
    if args.mode == "bipartite":
        host, labeling = parse_host_file(args.file)
        image, mapping = digraph_to_bipartite(host)
        values = transport_labeling(labeling, image, mapping).values if labeling else None
        if args.json:
            payload = host_to_json(image)
            if values is not None:
                payload["values"] = list(values)
            out.write(_dump(payload))
        else:
            out.write(serialize_host(image, values))
    elif args.mode == "matrix":
        labeling = _require_labeling(args.file)
        if args.symmetric:
            matrix = applications.labeling_to_symmetric(labeling)
        else:
            matrix = applications.labeling_to_semimagic(labeling)
        if args.json:
            out.write(_dump({"order": matrix.order, "entries": [list(r) for r in matrix.entries]}))
        else:
            out.write(serialize_matrix(matrix.entries))
    elif args.mode == "labeling":
        grid = parse_matrix_file(args.file)
        matrix = applications.SquareMatrix(grid)
        if args.target == "pi":
            host = complete_digraph(matrix.order)
            labeling = applications.semimagic_to_labeling(matrix, host)
        elif args.target == "knn":
            from .model import complete_bipartite

            host = complete_bipartite(matrix.order, matrix.order)
            labeling = applications.semimagic_to_labeling(matrix, host)
        else:
            labeling = applications.symmetric_to_labeling(matrix)
            host = labeling.host
        if args.json:
            payload = host_to_json(host)
            payload["values"] = list(labeling.values)
            payload["magic_sum"] = labeling.magic_sum
            out.write(_dump(payload))
        else:
            out.write(serialize_host(host, labeling.values))
    return EXIT_OK


def cmd_check(args, out):
    host, _ = _load_host(args)
    positive, zero_edges = is_positive(host)
    reduced = host if positive else positive_part(host)
    qp = fit_quasipolynomial(host)
    if reduced.directed:
        image, _ = digraph_to_bipartite(reduced)
        components = bipartite_component_count(image)
    else:
        components = bipartite_component_count(reduced)
    expected = -1 if reduced.edge_count == 0 else expected_degree(reduced)
    report = {
        "kind": host.kind,
        "vertices": host.vertex_count,
        "edges": host.edge_count,
        "positive": positive,
        "zero_edges": sorted(zero_edges),
        "bipartite_components": components,
        "expected_degree": expected,
        "fitted_degree": qp.degree,
        "degree_match": qp.degree == expected,
        "delta_case": qp.delta,
    }
    if args.json:
        out.write(_dump(report))
    else:
        for key in (
            "kind",
            "vertices",
            "edges",
            "positive",
            "zero_edges",
            "bipartite_components",
            "expected_degree",
            "fitted_degree",
            "degree_match",
            "delta_case",
        ):
            value = report[key]
            if isinstance(value, bool):
                value = str(value).lower()
            out.write(f"{key}: {value}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="magiclat", description=__doc__)
    parser.add_argument("--threads", type=int, default=1, metavar="N",
                        help="tuning only; never changes results")
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        sub = commands.add_parser(name, **kwargs)
        sub.set_defaults(func=func, injected_host=None)
        return sub

    sub = add("hilbert", cmd_hilbert, help="minimal Hilbert basis of the labeling cone")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--json", action="store_true")

    sub = add("count", cmd_count, help="number of magic labelings of one magic sum")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--sum", type=int, required=True)
    sub.add_argument("--json", action="store_true")

    sub = add("ehrhart", cmd_ehrhart, help="fit the counting quasi-polynomial")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--json", action="store_true")

    sub = add("faces", cmd_faces, help="enumerate the faces of the labeling polytope")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--dim", type=int, default=None)
    sub.add_argument("--json", action="store_true")

    sub = add("edge-graph", cmd_edge_graph, help="vertex adjacency graph of the polytope")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--dot", action="store_true")
    sub.add_argument("--json", action="store_true")

    sub = add("poset", cmd_poset, help="Hasse diagram of the face lattice")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--dot", action="store_true")
    sub.add_argument("--json", action="store_true")

    sub = add("classes", cmd_classes, help="isomorphism classes of faces of one dimension")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--dim", type=int, required=True)
    sub.add_argument("--json", action="store_true")

    sub = add("birkhoff", None, help="build the complete digraph and forward a subcommand")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("rest", nargs=argparse.REMAINDER)
    sub.set_defaults(func="birkhoff", injected_host=None)

    sub = add("matchings", cmd_matchings, help="perfect matchings, or all labelings up to a sum")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--max", type=int, default=None)
    sub.add_argument("--json", action="store_true")

    sub = add("factorize", cmd_factorize, help="factor a labeling into magic factors")
    sub.add_argument("file", nargs="?")
    sub.add_argument("labelfile")
    sub.add_argument("--sums", default=None)
    sub.add_argument("--json", action="store_true")

    sub = add("cayley", cmd_cayley, help="Cayley digraph of a group multiplication table")
    sub.add_argument("tablefile")
    sub.add_argument("--json", action="store_true")

    sub = add("convert", cmd_convert, help="digraph<->bipartite and labeling<->matrix maps")
    sub.add_argument("mode", choices=["bipartite", "matrix", "labeling"])
    sub.add_argument("file")
    sub.add_argument("--symmetric", action="store_true",
                     help="matrix mode: treat the host as a complete general graph")
    sub.add_argument("--target", choices=["pi", "knn", "gamma"], default="pi",
                     help="labeling mode: host family to build")
    sub.add_argument("--json", action="store_true")

    sub = add("check", cmd_check, help="positivity and degree-formula diagnostics")
    sub.add_argument("file", nargs="?")
    sub.add_argument("--json", action="store_true")

    return parser


def _dispatch(args, out, parser):
    if args.func == "birkhoff":
        return cmd_birkhoff(args, out, parser)
    return args.func(args, out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise InputError("--threads must be at least 1")
        return _dispatch(args, out, parser)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MagiclatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
