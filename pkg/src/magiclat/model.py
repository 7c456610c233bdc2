"""Graphs, digraphs, edge labelings, and the linear systems behind magic sums.

Vertices are opaque hashable tokens; all arithmetic uses dense integer indices
in declaration order.  Edges (loops and parallel edges allowed) are stored in
a canonical order fixed at construction time, so labeling vectors stay
comparable across every operation in the package:

* graphs: sorted by (min endpoint index, max endpoint index, insertion index)
* digraphs: sorted by (initial index, terminal index, insertion index)

A labeling is *magic* with magic sum r when every vertex's incident-edge sum
equals r (loops count once); on a digraph both the out-sum and the in-sum of
every vertex must equal r (a loop feeds both).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import GroupTableError, InputError, StructureError


class _Host:
    """Shared machinery for Graph and Digraph."""

    kind = ""
    directed = False
    __slots__ = ("vertices", "edges", "input_order", "_index", "_hash")

    def __init__(self, vertices: Iterable, edges: Iterable = ()):
        vs = tuple(vertices)
        index = {}
        for i, v in enumerate(vs):
            if v in index:
                raise InputError(f"duplicate vertex token {v!r}")
            index[v] = i
        keyed = []
        for pos, edge in enumerate(edges):
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise InputError(f"edge #{pos} is not a pair: {edge!r}") from None
            try:
                iu, iv = index[u], index[v]
            except KeyError as exc:
                raise InputError(f"edge endpoint {exc.args[0]!r} is not a declared vertex") from None
            keyed.append(self._canonical_pair(iu, iv) + (pos,))
        keyed.sort()
        self.vertices = vs
        self.edges = tuple((a, b) for a, b, _ in keyed)
        self.input_order = tuple(p for _, _, p in keyed)
        self._index = index
        self._hash = None

    @staticmethod
    def _canonical_pair(iu: int, iv: int) -> tuple[int, int]:
        raise NotImplementedError

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertex_index(self, token) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise StructureError(f"{token!r} is not a vertex of this host") from None

    def edge_tokens(self, e: int) -> tuple:
        a, b = self.edges[e]
        return (self.vertices[a], self.vertices[b])

    def slot_count(self) -> int:
        """Number of sum constraints: one per vertex, two (out/in) on digraphs."""
        return (2 if self.directed else 1) * len(self.vertices)

    def edge_slots(self, e: int) -> tuple[int, ...]:
        """Indices of the vertex-sum slots edge e feeds, each exactly once."""
        a, b = self.edges[e]
        if self.directed:
            return (a, len(self.vertices) + b)
        return (a,) if a == b else (a, b)

    def vertex_sum_rows(self) -> tuple[tuple[int, ...], ...]:
        """One row per sum slot, one column per edge; loops contribute once."""
        rows = [[0] * len(self.edges) for _ in range(self.slot_count())]
        for e in range(len(self.edges)):
            for s in self.edge_slots(e):
                rows[s][e] += 1
        return tuple(tuple(r) for r in rows)

    def subgraph(self, edge_indices: Iterable[int]):
        """Same vertices, only the given edges (original canonical order kept)."""
        kept = sorted(set(edge_indices))
        if kept and not (0 <= kept[0] and kept[-1] < len(self.edges)):
            raise StructureError("edge index out of range")
        pairs = [self.edge_tokens(e) for e in kept]
        return type(self)(self.vertices, pairs)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.kind, self.vertices, self.edges))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self.vertex_count} vertices, {self.edge_count} edges)"


class Graph(_Host):
    kind = "graph"
    directed = False
    __slots__ = ()

    @staticmethod
    def _canonical_pair(iu, iv):
        return (iu, iv) if iu <= iv else (iv, iu)


class Digraph(_Host):
    kind = "digraph"
    directed = True
    __slots__ = ()

    @staticmethod
    def _canonical_pair(iu, iv):
        return (iu, iv)


_UNSET = object()


class Labeling:
    """A vector of nonnegative integer edge labels on a fixed host."""

    __slots__ = ("host", "values", "_magic")

    def __init__(self, host, values: Sequence[int]):
        vals = []
        for v in values:
            iv = int(v)
            if iv != v or iv < 0:
                raise InputError("labels must be nonnegative integers")
            vals.append(iv)
        vals = tuple(vals)
        if len(vals) != host.edge_count:
            raise InputError(
                f"labeling has {len(vals)} values but host has {host.edge_count} edges"
            )
        self.host = host
        self.values = vals
        self._magic = _UNSET

    def vertex_sums(self) -> tuple[int, ...]:
        sums = [0] * self.host.slot_count()
        for e, val in enumerate(self.values):
            if val:
                for s in self.host.edge_slots(e):
                    sums[s] += val
        return tuple(sums)

    @property
    def magic_sum(self) -> Optional[int]:
        """The common vertex sum if this labeling is magic, else None."""
        if self._magic is _UNSET:
            sums = self.vertex_sums()
            if not sums:
                self._magic = 0
            else:
                self._magic = sums[0] if all(s == sums[0] for s in sums) else None
        return self._magic

    @property
    def is_magic(self) -> bool:
        return self.magic_sum is not None

    @property
    def support(self) -> frozenset[int]:
        return frozenset(e for e, v in enumerate(self.values) if v)

    def __eq__(self, other):
        return (
            isinstance(other, Labeling)
            and self.host == other.host
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.host, self.values))

    def __repr__(self):
        return f"Labeling({self.values}, magic_sum={self.magic_sum})"


@dataclass(frozen=True)
class ConstraintSystem:
    """Integer matrix whose nonnegative kernel vectors are the magic labelings."""

    host: Graph | Digraph
    matrix: tuple[tuple[int, ...], ...]

    @property
    def host_kind(self) -> str:
        return self.host.kind


def build_constraints(host: Graph | Digraph) -> ConstraintSystem:
    """Homogeneous system expressing "all vertex sums are equal".

    Graph rows: vertex-i sum minus vertex-1 sum for i = 2..n (n-1 rows).
    Digraph rows: out_i - out_1 for i = 2..n, then in_i - out_1 for i = 1..n
    (2n-1 rows).  A nonnegative integer vector is a magic labeling exactly
    when the matrix sends it to zero.
    """
    if host.vertex_count == 0:
        raise InputError("host has no vertices")
    rows = host.vertex_sum_rows()
    n = host.vertex_count
    base = rows[0]
    diff_rows = []
    if host.directed:
        for i in range(1, n):
            diff_rows.append(tuple(a - b for a, b in zip(rows[i], base)))
        for i in range(n, 2 * n):
            diff_rows.append(tuple(a - b for a, b in zip(rows[i], base)))
    else:
        for i in range(1, n):
            diff_rows.append(tuple(a - b for a, b in zip(rows[i], base)))
    return ConstraintSystem(host=host, matrix=tuple(diff_rows))


def magic_sum(labeling: Labeling) -> Optional[int]:
    """Common vertex sum of a magic labeling, or None if it is not magic."""
    return labeling.magic_sum


def digraph_to_bipartite(d: Digraph) -> tuple[Graph, tuple[int, ...]]:
    """Bipartite image of a digraph plus the edge bijection.

    The image has vertices a:v and b:v for every vertex v, and an edge
    {a:u, b:v} for every edge u->v (loops become ordinary edges).  The
    returned mapping sends each digraph edge index to the index of its image
    edge; transporting labels along it preserves magicness and magic sum in
    both directions.
    """
    if not isinstance(d, Digraph):
        raise StructureError("digraph_to_bipartite expects a digraph")
    side_a = tuple(f"a:{v}" for v in d.vertices)
    side_b = tuple(f"b:{v}" for v in d.vertices)
    pairs = [(side_a[u], side_b[v]) for u, v in d.edges]
    image = Graph(side_a + side_b, pairs)
    mapping = [0] * d.edge_count
    for image_idx, source_idx in enumerate(image.input_order):
        mapping[source_idx] = image_idx
    return image, tuple(mapping)


def transport_labeling(labeling: Labeling, target, edge_map: Sequence[int]) -> Labeling:
    """Copy labels along an edge bijection (source index -> target index)."""
    if len(edge_map) != labeling.host.edge_count or len(edge_map) != target.edge_count:
        raise StructureError("edge bijection does not match the two hosts")
    values = [0] * target.edge_count
    for src, dst in enumerate(edge_map):
        values[dst] = labeling.values[src]
    return Labeling(target, values)


def invert_edge_map(edge_map: Sequence[int]) -> tuple[int, ...]:
    inverse = [0] * len(edge_map)
    for src, dst in enumerate(edge_map):
        inverse[dst] = src
    return tuple(inverse)


def lift_labeling(labeling: Labeling, target) -> Labeling:
    """Extend a labeling of a subgraph by zeros on the remaining edges.

    Vertices are matched by position, so the subgraph must have exactly as
    many vertices as the target; edges are matched by endpoint index pair,
    parallel edges by multiplicity in canonical order.  The lifted labeling
    keeps the original magic sum because no vertex gains label mass.
    """
    sub = labeling.host
    if type(sub) is not type(target):
        raise StructureError("subgraph and target must both be graphs or both digraphs")
    if sub.vertex_count != target.vertex_count:
        raise StructureError("subgraph must span the same vertices as the target")
    available: dict[tuple[int, int], list[int]] = {}
    for e, pair in enumerate(target.edges):
        available.setdefault(pair, []).append(e)
    values = [0] * target.edge_count
    for e, pair in enumerate(sub.edges):
        slots = available.get(pair)
        if not slots:
            u, v = sub.edge_tokens(e)
            raise StructureError(f"edge {u!r}-{v!r} of the subgraph is not an edge of the target")
        values[slots.pop(0)] = labeling.values[e]
    return Labeling(target, values)


# ---------------------------------------------------------------------------
# named families


def _check_order(n: int) -> int:
    n = int(n)
    if n < 1:
        raise InputError("family order must be at least 1")
    return n


def complete_graph(n: int) -> Graph:
    """K_n: every unordered pair of distinct vertices, no loops."""
    n = _check_order(n)
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Graph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} on vertex classes a1..am and b1..bn."""
    m, n = _check_order(m), _check_order(n)
    side_a = tuple(f"a{i}" for i in range(1, m + 1))
    side_b = tuple(f"b{j}" for j in range(1, n + 1))
    return Graph(side_a + side_b, [(a, b) for a in side_a for b in side_b])


def complete_general_graph(n: int) -> Graph:
    """All pairs i <= j including a loop at every vertex; n(n+1)/2 edges."""
    n = _check_order(n)
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Graph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i, n)])


def complete_digraph(n: int) -> Digraph:
    """Edge i->j for every ordered pair including i=j; n^2 edges."""
    n = _check_order(n)
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Digraph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(n)])


def directed_cycle(n: int) -> Digraph:
    """v1 -> v2 -> ... -> vn -> v1 (a single loop when n = 1)."""
    n = _check_order(n)
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Digraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def cycle_graph(n: int) -> Graph:
    """Undirected n-cycle; n must be at least 3."""
    n = _check_order(n)
    if n < 3:
        raise InputError("an undirected cycle needs at least 3 vertices")
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def is_complete_digraph(host) -> bool:
    if not isinstance(host, Digraph):
        return False
    n = host.vertex_count
    return sorted(host.edges) == [(i, j) for i in range(n) for j in range(n)]


def is_complete_general_graph(host) -> bool:
    if not isinstance(host, Graph):
        return False
    n = host.vertex_count
    return sorted(host.edges) == [(i, j) for i in range(n) for j in range(i, n)]


def complete_bipartite_order(host) -> Optional[int]:
    """n when the host is K_{n,n} with the first n vertices on one side."""
    if not isinstance(host, Graph) or host.vertex_count % 2:
        return None
    n = host.vertex_count // 2
    if sorted(host.edges) == [(i, n + j) for i in range(n) for j in range(n)]:
        return n
    return None


# ---------------------------------------------------------------------------
# Cayley group digraphs


def _validate_group_table(table: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Check the group axioms; return the inverse of each element (0-based)."""
    n = len(table)
    for i, row in enumerate(table):
        for j, entry in enumerate(row):
            if not 1 <= entry <= n:
                raise GroupTableError(
                    f"closure: entry {entry} at row {i + 1}, column {j + 1} is not in 1..{n}"
                )
    for j in range(n):
        if table[n - 1][j] != j + 1 or table[j][n - 1] != j + 1:
            raise GroupTableError(
                f"identity: the last element must be the identity, but it fails on element {j + 1}"
            )
    inverses = []
    for i in range(n):
        inv = next((j for j in range(n) if table[i][j] == n), None)
        if inv is None:
            raise GroupTableError(f"inverse: element {i + 1} has no inverse")
        inverses.append(inv)
    for i in range(n):
        for j in range(n):
            ij = table[i][j] - 1
            for k in range(n):
                jk = table[j][k] - 1
                if table[ij][k] != table[i][jk]:
                    raise GroupTableError(
                        f"associativity: (g{i + 1} g{j + 1}) g{k + 1} != g{i + 1} (g{j + 1} g{k + 1})"
                    )
    return tuple(inverses)


def cayley_digraph(mult_table: Sequence[Sequence[int]]) -> tuple[Digraph, Labeling]:
    """Cayley digraph of a group given by its multiplication table.

    The table holds 1-based element indices with row i, column j equal to the
    index of g_i * g_j; the identity must be the last element.  Every ordered
    pair of distinct vertices i -> j carries the label alpha determined by
    g_alpha = g_j * g_i^{-1}.  The returned labeling is magic with magic sum
    n(n-1)/2.
    """
    table = tuple(tuple(int(x) for x in row) for row in mult_table)
    n = len(table)
    if n == 0:
        raise InputError("empty multiplication table")
    if any(len(row) != n for row in table):
        raise InputError("multiplication table must be square")
    inverses = _validate_group_table(table)
    vs = tuple(f"g{i}" for i in range(1, n + 1))
    pairs = []
    labels = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            pairs.append((vs[i], vs[j]))
            labels.append(table[j][inverses[i]])
    digraph = Digraph(vs, pairs)
    values = [0] * digraph.edge_count
    for canonical_idx, input_idx in enumerate(digraph.input_order):
        values[canonical_idx] = labels[input_idx]
    return digraph, Labeling(digraph, values)


def is_eulerian(d: Digraph) -> bool:
    """True exactly when labeling every edge with 1 gives a magic labeling."""
    if not isinstance(d, Digraph):
        raise StructureError("is_eulerian expects a digraph")
    return Labeling(d, (1,) * d.edge_count).is_magic
