"""Canonical forms for small multigraphs and multidigraphs.

Two hosts (or support subgraphs) are isomorphic exactly when they share a
canonical key.  The key is the lexicographically smallest sorted edge
multiset over all vertex orderings compatible with an iteratively refined
invariant partition (loop counts, degrees, then neighbor invariant
multisets), after dropping isolated vertices.  Backtracking only permutes
within invariant classes, which keeps the search tiny at the sizes faces
produce.
"""

from __future__ import annotations

import itertools


def _refine(n, neighbor_lists, initial):
    """Iterate neighbor-multiset refinement; returns per-vertex class ranks."""
    signature = list(initial)
    while True:
        ranks = {sig: k for k, sig in enumerate(sorted(set(signature)))}
        coded = [ranks[sig] for sig in signature]
        refined = [
            (coded[v], tuple(sorted(coded[w] for w in neighbor_lists[v])))
            for v in range(n)
        ]
        new_ranks = {sig: k for k, sig in enumerate(sorted(set(refined)))}
        new_coded = [new_ranks[sig] for sig in refined]
        if new_coded == coded:
            return coded
        signature = refined


def canonical_key(host, support=None):
    """Hashable isomorphism key of a host or of one of its support subgraphs.

    Isolated vertices are dropped; loops and edge multiplicities are
    respected; vertex identities are not.
    """
    edge_indices = sorted(support) if support is not None else range(host.edge_count)
    raw_edges = [host.edges[e] for e in edge_indices]
    used = sorted({v for pair in raw_edges for v in pair})
    remap = {v: i for i, v in enumerate(used)}
    n = len(used)
    edges = [(remap[a], remap[b]) for a, b in raw_edges]
    directed = host.directed

    loops = [0] * n
    if directed:
        out_deg = [0] * n
        in_deg = [0] * n
        out_nb = [[] for _ in range(n)]
        in_nb = [[] for _ in range(n)]
        for a, b in edges:
            if a == b:
                loops[a] += 1
            else:
                out_deg[a] += 1
                in_deg[b] += 1
                out_nb[a].append(b)
                in_nb[b].append(a)
        initial = [(loops[v], out_deg[v], in_deg[v]) for v in range(n)]
        neighbor_lists = [out_nb[v] + in_nb[v] for v in range(n)]
    else:
        degree = [0] * n
        neighbors = [[] for _ in range(n)]
        for a, b in edges:
            if a == b:
                loops[a] += 1
            else:
                degree[a] += 1
                degree[b] += 1
                neighbors[a].append(b)
                neighbors[b].append(a)
        initial = [(loops[v], degree[v]) for v in range(n)]
        neighbor_lists = neighbors

    coded = _refine(n, neighbor_lists, initial)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(coded[v], []).append(v)
    ordered_classes = [classes[k] for k in sorted(classes)]

    best = None
    for perm_parts in itertools.product(
        *(itertools.permutations(cls) for cls in ordered_classes)
    ):
        position = {}
        pos = 0
        for part in perm_parts:
            for v in part:
                position[v] = pos
                pos += 1
        if directed:
            encoded = sorted((position[a], position[b]) for a, b in edges)
        else:
            encoded = sorted(
                (min(position[a], position[b]), max(position[a], position[b]))
                for a, b in edges
            )
        candidate = tuple(encoded)
        if best is None or candidate < best:
            best = candidate
    return (host.kind, n, best)
