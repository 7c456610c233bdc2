"""Matchings, factorizations, and magic-square conversions.

Perfect matchings of a graph are exactly the magic labelings of sum 1, which
are exactly the Hilbert-basis elements of sum 1.  Labelings of the complete
digraph (or of K_{n,n}) correspond entry-by-entry to square matrices with
equal row and column sums; labelings of the complete general graph
correspond to the symmetric ones, the loop at vertex i carrying the diagonal
entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, InputError, StructureError
from .ehrhart import count_magic, enumerate_magic
from .hilbert import basis_of
from .model import (
    Graph,
    Labeling,
    complete_bipartite_order,
    complete_general_graph,
    is_complete_digraph,
    is_complete_general_graph,
)


@dataclass(frozen=True)
class SquareMatrix:
    """Square grid of nonnegative integers."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        normalized = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", normalized)
        n = len(normalized)
        if n == 0:
            raise InputError("matrix must have at least one row")
        if any(len(row) != n for row in normalized):
            raise InputError("matrix must be square")
        if any(x < 0 for row in normalized for x in row):
            raise InputError("matrix entries must be nonnegative")

    @property
    def order(self) -> int:
        return len(self.entries)

    def semimagic_sum(self):
        """Common row/column sum when semi-magic, else None."""
        target = sum(self.entries[0])
        for row in self.entries:
            if sum(row) != target:
                return None
        for j in range(self.order):
            if sum(row[j] for row in self.entries) != target:
                return None
        return target

    @property
    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.order)
            for j in range(i + 1, self.order)
        )


def perfect_matchings(g: Graph, *, max_edges=None) -> list[Labeling]:
    """Hilbert-basis elements of magic sum 1; count cross-checked against the
    number of magic labelings of sum 1."""
    hb = basis_of(g, max_edges=max_edges)
    matchings = [l for l in hb.elements if l.magic_sum == 1]
    direct = count_magic(g, 1)
    if len(matchings) != direct:
        raise ConsistencyError(
            f"{len(matchings)} sum-1 basis elements but {direct} magic labelings of sum 1"
        )
    return matchings


def n_matchings(g, n: int, *, volume_cap=None) -> list[Labeling]:
    """All magic labelings with magic sum at most n (labels never exceed the
    magic sum, so they lie in 0..n automatically); includes the zero labeling."""
    n = int(n)
    if n < 0:
        raise InputError("n must be nonnegative")
    out = []
    for r in range(n + 1):
        out.extend(enumerate_magic(g, r, volume_cap=volume_cap))
    return out


def factorize(labeling: Labeling, parts) -> list[Labeling]:
    """Split a labeling along pairwise disjoint edge sets covering its support.

    Factor i agrees with the labeling on part i and is zero elsewhere; the
    factors sum to the input and have pairwise disjoint supports.
    """
    part_sets = [frozenset(int(e) for e in p) for p in parts]
    q = labeling.host.edge_count
    seen: set[int] = set()
    for p in part_sets:
        if any(e < 0 or e >= q for e in p):
            raise StructureError("part contains an edge index out of range")
        if p & seen:
            raise StructureError("parts overlap")
        seen |= p
    if not labeling.support <= seen:
        raise StructureError("parts do not cover the support of the labeling")
    factors = []
    for p in part_sets:
        factors.append(
            Labeling(labeling.host, tuple(v if e in p else 0 for e, v in enumerate(labeling.values)))
        )
    return factors


def magic_factorizations(labeling: Labeling, sums=None) -> list[list[Labeling]]:
    """All decompositions of a labeling into magic factors with disjoint
    supports (an exact-cover search over the magic restrictions of the
    labeling to support subsets).

    With ``sums`` given, the factors match the prescribed magic sums in
    order; otherwise every factorization into two or more nonzero magic
    factors is returned.  Each factorization is reported once.
    """
    host = labeling.host
    support = sorted(labeling.support)
    if not support:
        return []
    candidates = []  # (bitmask over `support`, magic sum)
    for mask in range(1, 1 << len(support)):
        values = [0] * host.edge_count
        for pos, e in enumerate(support):
            if mask >> pos & 1:
                values[e] = labeling.values[e]
        factor = Labeling(host, values)
        if factor.is_magic:
            candidates.append((mask, factor))
    full = (1 << len(support)) - 1

    covers: list[list[Labeling]] = []

    def extend(mask_so_far, chosen):
        if mask_so_far == full:
            covers.append(list(chosen))
            return
        # always cover the lowest uncovered edge: each partition is found once
        uncovered = ~mask_so_far & full
        lowest_bit = uncovered & -uncovered
        for mask, factor in candidates:
            if mask & lowest_bit and not mask & mask_so_far:
                extend(mask_so_far | mask, chosen + [factor])

    extend(0, [])

    results = []
    if sums is None:
        for cover in covers:
            if len(cover) >= 2:
                results.append(sorted(cover, key=lambda f: (f.magic_sum, f.values)))
    else:
        sums = [int(s) for s in sums]
        for cover in covers:
            if len(cover) != len(sums):
                continue
            if sorted(f.magic_sum for f in cover) != sorted(sums):
                continue
            pool = sorted(cover, key=lambda f: (f.magic_sum, f.values))
            arranged = []
            for want in sums:
                pick = next(f for f in pool if f.magic_sum == want)
                pool.remove(pick)
                arranged.append(pick)
            results.append(arranged)
    results.sort(key=lambda fac: [f.values for f in fac])
    return results


# ---------------------------------------------------------------------------
# matrix conversions


def labeling_to_semimagic(labeling: Labeling) -> SquareMatrix:
    """Entry (i, j) is the label of edge i->j (complete digraph host) or of
    edge {a_i, b_j} (complete bipartite host)."""
    host = labeling.host
    if is_complete_digraph(host):
        n = host.vertex_count
    else:
        n = complete_bipartite_order(host)
        if n is None:
            raise StructureError(
                "host must be a complete digraph with loops or a complete bipartite graph K_{n,n}"
            )
    rows = tuple(
        tuple(labeling.values[i * n + j] for j in range(n)) for i in range(n)
    )
    return SquareMatrix(rows)


def semimagic_to_labeling(matrix: SquareMatrix, target) -> Labeling:
    """Inverse of labeling_to_semimagic onto the given host."""
    n = matrix.order
    if is_complete_digraph(target):
        if target.vertex_count != n:
            raise StructureError("matrix order does not match the digraph")
    elif complete_bipartite_order(target) == n:
        pass
    else:
        raise StructureError("target must be a complete digraph or K_{n,n} of matching order")
    values = [0] * target.edge_count
    for i in range(n):
        for j in range(n):
            values[i * n + j] = matrix.entries[i][j]
    return Labeling(target, values)


def labeling_to_symmetric(labeling: Labeling) -> SquareMatrix:
    """Diagonal entry i is the loop label at vertex i; entry (i, j) = (j, i)
    is the label of edge {i, j} (complete general graph host)."""
    host = labeling.host
    if not is_complete_general_graph(host):
        raise StructureError("host must be a complete general graph")
    n = host.vertex_count
    position = {pair: e for e, pair in enumerate(host.edges)}
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = labeling.values[position[(i, j)]]
            rows[i][j] = value
            rows[j][i] = value
    return SquareMatrix(tuple(tuple(r) for r in rows))


def symmetric_to_labeling(matrix: SquareMatrix, target=None) -> Labeling:
    """Inverse of labeling_to_symmetric; the matrix must be symmetric."""
    if not matrix.is_symmetric:
        raise StructureError("matrix is not symmetric")
    n = matrix.order
    if target is None:
        target = complete_general_graph(n)
    if not is_complete_general_graph(target) or target.vertex_count != n:
        raise StructureError("target must be a complete general graph of matching order")
    values = [0] * target.edge_count
    for e, (i, j) in enumerate(target.edges):
        values[e] = matrix.entries[i][j]
    return Labeling(target, values)
