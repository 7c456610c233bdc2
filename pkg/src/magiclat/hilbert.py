"""Minimal Hilbert bases of magic-labeling cones.

The cone is the nonnegative kernel of the constraint matrix; its minimal
Hilbert basis is the set of irreducible magic labelings.  We compute it by
breadth-first minimal-solution completion for homogeneous linear Diophantine
systems: candidates grow by unit increments, a coordinate may only grow when
the scalar product of its column with the current defect is negative, and
anything componentwise above an already-found solution is pruned.  The
frontier empties after finitely many levels and the surviving vectors are
exactly the componentwise-minimal nonzero solutions.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ConsistencyError, ResourceLimitError, StructureError
from .limits import effective_max_edges
from .model import (
    ConstraintSystem,
    Digraph,
    Graph,
    Labeling,
    build_constraints,
    is_complete_digraph,
    is_complete_general_graph,
    lift_labeling,
)


class HilbertBasis:
    """Deduplicated, canonically ordered set of irreducible magic labelings."""

    __slots__ = ("host", "elements")

    def __init__(self, host, elements):
        self.host = host
        self.elements = tuple(
            sorted(elements, key=lambda l: (l.magic_sum, l.values))
        )

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"HilbertBasis({self.host!r}, {len(self.elements)} elements)"

    def to_json(self) -> dict:
        from .formats import host_to_json

        return {
            "host": host_to_json(self.host),
            "elements": [
                {"values": list(l.values), "magic_sum": l.magic_sum} for l in self.elements
            ],
        }


def _minimal_kernel_vectors(matrix, width):
    """All componentwise-minimal nonzero vectors of {x >= 0 : matrix x = 0}."""
    columns = [tuple(row[j] for row in matrix) for j in range(width)]
    gram = [
        tuple(sum(a * b for a, b in zip(columns[i], columns[j])) for j in range(width))
        for i in range(width)
    ]
    minimals: list[tuple[int, ...]] = []

    def dominated(vec) -> bool:
        return any(all(v >= m for v, m in zip(vec, sol)) for sol in minimals)

    frontier = {tuple(int(i == j) for j in range(width)) for i in range(width)}
    while frontier:
        survivors = []
        for vec in sorted(frontier):
            if dominated(vec):
                continue
            defect_dots = [0] * width
            for i, v in enumerate(vec):
                if v:
                    row = gram[i]
                    for j in range(width):
                        defect_dots[j] += v * row[j]
            if sum(v * g for v, g in zip(vec, defect_dots)) == 0:
                minimals.append(vec)
            else:
                survivors.append((vec, defect_dots))
        next_frontier = set()
        for vec, defect_dots in survivors:
            for j in range(width):
                if defect_dots[j] < 0:
                    child = vec[:j] + (vec[j] + 1,) + vec[j + 1 :]
                    if child not in next_frontier and not dominated(child):
                        next_frontier.add(child)
        frontier = next_frontier
    return minimals


@lru_cache(maxsize=256)
def _basis_cached(host, cap: int) -> HilbertBasis:
    if host.edge_count > cap:
        raise ResourceLimitError(
            f"host has {host.edge_count} edges, above the cap of {cap}; "
            "raise MAGICLAT_MAX_EDGES to override"
        )
    system = build_constraints(host)
    vectors = _minimal_kernel_vectors(system.matrix, host.edge_count)
    elements = [Labeling(host, vec) for vec in vectors]
    for l in elements:
        if l.magic_sum is None or l.magic_sum < 1:
            raise ConsistencyError("completion produced a non-magic basis vector")
    if host.directed and any(l.magic_sum != 1 for l in elements):
        raise ConsistencyError("a digraph Hilbert-basis element has magic sum above 1")
    return HilbertBasis(host, elements)


def hilbert_basis(cs: ConstraintSystem, *, max_edges=None) -> HilbertBasis:
    """Minimal Hilbert basis of the cone described by a constraint system.

    Refuses hosts with more edges than the configured cap (default 20,
    overridable per call or via MAGICLAT_MAX_EDGES) rather than running an
    unbounded search.
    """
    return _basis_cached(cs.host, effective_max_edges(max_edges))


def basis_of(host, *, max_edges=None) -> HilbertBasis:
    """Convenience wrapper: Hilbert basis straight from a host."""
    return _basis_cached(host, effective_max_edges(max_edges))


def is_irreducible(labeling: Labeling, hb: HilbertBasis) -> bool:
    """True when the labeling is an element of the minimal Hilbert basis."""
    if labeling.host != hb.host:
        raise StructureError("labeling and basis have different hosts")
    return labeling in set(hb.elements)


def extreme_rays(hb: HilbertBasis) -> list[Labeling]:
    """Basis elements with support minimal among all basis elements.

    These span the one-dimensional faces of the cone.  For graph hosts every
    ray must be an irreducible 2-matching, so magic sums are checked to lie
    in {1, 2} with labels at most 2.
    """
    supports = [l.support for l in hb.elements]
    rays = []
    for i, l in enumerate(hb.elements):
        if any(j != i and supports[j] <= supports[i] for j in range(len(supports))):
            continue
        rays.append(l)
    if not hb.host.directed:
        for ray in rays:
            if ray.magic_sum not in (1, 2) or any(v > 2 for v in ray.values):
                raise ConsistencyError(
                    f"graph extreme ray has magic sum {ray.magic_sum}, expected 1 or 2"
                )
    return rays


def is_positive(host, *, max_edges=None) -> tuple[bool, frozenset[int]]:
    """Whether every edge carries a positive label in some magic labeling.

    Returns (flag, zero edge set): the second component is exactly the set
    of edges labeled 0 in every magic labeling, i.e. the edges missing from
    all Hilbert-basis supports.
    """
    hb = basis_of(host, max_edges=max_edges)
    covered = set()
    for l in hb.elements:
        covered |= l.support
    return len(covered) == host.edge_count, frozenset(range(host.edge_count)) - covered


def positive_part(host, *, max_edges=None):
    """Delete the always-zero edges; keeps every vertex.

    Magic labelings of the result are in bijection with those of the input,
    with equal magic sums.
    """
    flag, zero_edges = is_positive(host, max_edges=max_edges)
    if flag:
        return host
    return host.subgraph(set(range(host.edge_count)) - zero_edges)


def decompose(labeling: Labeling, hb: HilbertBasis) -> list[tuple[Labeling, int]]:
    """Express a magic labeling as a nonnegative integer combination of basis
    elements (greedy over the canonical order, with backtracking).

    Decompositions are not unique; any valid certificate is returned.
    """
    if labeling.host != hb.host:
        raise StructureError("labeling and basis have different hosts")
    if not labeling.is_magic:
        raise StructureError("only magic labelings decompose over the basis")
    elements = hb.elements

    def search(remaining, k):
        if not any(remaining):
            return []
        if k == len(elements):
            return None
        vals = elements[k].values
        limit = min(remaining[e] // vals[e] for e in range(len(vals)) if vals[e])
        for mult in range(limit, -1, -1):
            rest = tuple(r - mult * v for r, v in zip(remaining, vals))
            tail = search(rest, k + 1)
            if tail is not None:
                return ([(elements[k], mult)] if mult else []) + tail
        return None

    result = search(labeling.values, 0)
    if result is None:
        raise ConsistencyError("magic labeling failed to decompose over the Hilbert basis")
    return result


def verify_lift_property(sub, ambient, *, max_edges=None) -> bool:
    """Check that the lifted basis of a spanning subgraph sits inside the
    ambient basis (ambient must be a complete general graph or complete
    digraph on the same number of vertices)."""
    if isinstance(ambient, Digraph):
        if not is_complete_digraph(ambient):
            raise StructureError("ambient digraph must be a complete digraph with loops")
    elif isinstance(ambient, Graph):
        if not is_complete_general_graph(ambient):
            raise StructureError("ambient graph must be a complete general graph")
    else:
        raise StructureError("ambient must be a graph or digraph")
    if type(sub) is not type(ambient) or sub.vertex_count != ambient.vertex_count:
        raise StructureError("subgraph must span the same vertices as the ambient host")
    sub_basis = basis_of(sub, max_edges=max_edges)
    big_basis = set(basis_of(ambient, max_edges=max_edges).elements)
    return all(lift_labeling(l, ambient) in big_basis for l in sub_basis)
