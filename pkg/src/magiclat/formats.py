"""Text formats: edge lists, group multiplication tables, matrix grids, JSON.

Edge-list format: the first nonblank line is ``graph`` or ``digraph``; every
following nonblank line whose first character is not ``#`` is either

* ``u v``   one edge (``u u`` is a loop; directed lines mean u -> v),
* ``u v k`` one edge labeled with the nonnegative integer k, or
* ``u``     a vertex declaration (used for isolated vertices).

Vertices are declared implicitly in order of first appearance.  Either every
edge line carries a label or none does.
"""

from __future__ import annotations

from .errors import InputError
from .model import Digraph, Graph, Labeling


def parse_host(text: str, source: str = "<input>"):
    """Parse an edge list; returns (host, labeling-or-None)."""
    kind = None
    vertices: list = []
    seen = set()
    edges = []
    labels = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if kind is None:
            if line not in ("graph", "digraph"):
                raise InputError(f"{source}:{lineno}: expected 'graph' or 'digraph', got {line!r}")
            kind = line
            continue
        tokens = line.split()
        if len(tokens) > 3:
            raise InputError(f"{source}:{lineno}: too many fields: {line!r}")
        for tok in tokens[:2]:
            if tok not in seen:
                seen.add(tok)
                vertices.append(tok)
        if len(tokens) == 1:
            continue
        edges.append((tokens[0], tokens[1]))
        if len(tokens) == 3:
            try:
                label = int(tokens[2])
            except ValueError:
                raise InputError(f"{source}:{lineno}: label is not an integer: {tokens[2]!r}") from None
            if label < 0:
                raise InputError(f"{source}:{lineno}: labels must be nonnegative")
            labels.append(label)
        else:
            labels.append(None)
    if kind is None:
        raise InputError(f"{source}: empty input, expected a 'graph' or 'digraph' line")
    if not vertices:
        raise InputError(f"{source}: no vertices declared")
    labeled = [x for x in labels if x is not None]
    if labeled and len(labeled) != len(labels):
        raise InputError(f"{source}: mix of labeled and unlabeled edge lines")
    host = Graph(vertices, edges) if kind == "graph" else Digraph(vertices, edges)
    if not labeled:
        return host, None
    values = [0] * host.edge_count
    for canonical_idx, input_idx in enumerate(host.input_order):
        values[canonical_idx] = labels[input_idx]
    return host, Labeling(host, values)


def parse_host_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_host(fh.read(), source=path)


def serialize_host(host, values=None) -> str:
    """Edge-list text for a host, with labels when values are given."""
    lines = [host.kind]
    covered = {a for pair in host.edges for a in pair}
    for i, v in enumerate(host.vertices):
        if i not in covered:
            lines.append(str(v))
    for e in range(host.edge_count):
        u, v = host.edge_tokens(e)
        if values is None:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {values[e]}")
    return "\n".join(lines) + "\n"


def parse_group_table(text: str, source: str = "<input>") -> tuple[tuple[int, ...], ...]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise InputError(f"{source}:{lineno}: table entries must be integers") from None
    if not rows:
        raise InputError(f"{source}: empty multiplication table")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError(f"{source}: table must be square ({n} rows)")
    return tuple(rows)


def parse_group_table_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_table(fh.read(), source=path)


def parse_matrix(text: str, source: str = "<input>") -> tuple[tuple[int, ...], ...]:
    """n lines of n nonnegative integers."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise InputError(f"{source}:{lineno}: matrix entries must be integers") from None
        if any(x < 0 for x in row):
            raise InputError(f"{source}:{lineno}: matrix entries must be nonnegative")
        rows.append(row)
    if not rows:
        raise InputError(f"{source}: empty matrix")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError(f"{source}: matrix must be square ({n} rows)")
    return tuple(rows)


def parse_matrix_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read(), source=path)


def serialize_matrix(entries) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in entries) + "\n"


def host_to_json(host) -> dict:
    return {
        "kind": host.kind,
        "vertices": [str(v) for v in host.vertices],
        "edges": [[str(u), str(v)] for u, v in (host.edge_tokens(e) for e in range(host.edge_count))],
    }
