"""Face lattice of the polytope of magic labelings.

Every face is the set of labelings vanishing on some edge set, and is
canonically identified with its positive support subgraph.  Faces are
generated as the closed sets of the closure operator on extreme-ray subsets
(a ray belongs to the closure when its support lies inside the union of the
chosen supports): breadth-first joins starting from singletons enumerate
every closed set exactly once per support.  Dimensions are computed twice,
from the subgraph degree formula and from the rank of the vertex-sum matrix
restricted to the support, and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConsistencyError, InputError, ResourceLimitError
from .ehrhart import bipartite_component_count
from .formats import host_to_json
from .hilbert import basis_of, extreme_rays, positive_part
from .isomorph import canonical_key
from .limits import DEFAULT_MAX_RAYS
from .linalg import int_rank
from .model import (
    Digraph,
    Graph,
    complete_bipartite,
    complete_general_graph,
    digraph_to_bipartite,
)


@dataclass(frozen=True)
class PolytopeVertex:
    """Exact rational coordinates of a polytope vertex, one per edge."""

    coordinates: tuple[Fraction, ...]


@dataclass(frozen=True)
class Face:
    """A face keyed by its support: the edges not forced to zero on it."""

    support: frozenset[int]
    dim: int
    ray_indices: tuple[int, ...]


class FacePoset:
    """All faces sorted by (dimension, support), plus the Hasse diagram."""

    __slots__ = ("host", "rays", "faces", "cover_edges")

    def __init__(self, host, rays, faces, cover_edges):
        self.host = host
        self.rays = tuple(rays)
        self.faces = tuple(faces)
        self.cover_edges = tuple(cover_edges)

    @property
    def dimension(self) -> int:
        return max(f.dim for f in self.faces)

    def faces_of_dim(self, d: int) -> list[Face]:
        return [f for f in self.faces if f.dim == d]

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by dimension 0..dim-1 (vertices first, facets last)."""
        top = self.dimension
        return tuple(len(self.faces_of_dim(d)) for d in range(top))

    def zero_set(self, face: Face) -> frozenset[int]:
        return frozenset(range(self.host.edge_count)) - face.support


def face_dimension(support, host) -> int:
    """Dimension of the face supported on the given edge set.

    Computed both as q' - n + b' (graphs) or q' - 2n + b' (digraphs) on the
    support subgraph, and as q' minus the rank of the vertex-sum matrix
    restricted to the support columns (the affine hull of the face is the
    solution set of "every vertex sum equals 1" over those columns).  The
    two must agree.
    """
    support = sorted(set(support))
    sub = host.subgraph(support)
    q = len(support)
    n = host.vertex_count
    if isinstance(host, Digraph):
        image, _ = digraph_to_bipartite(sub)
        by_formula = q - 2 * n + bipartite_component_count(image)
    else:
        by_formula = q - n + bipartite_component_count(sub)
    rows = sub.vertex_sum_rows()
    by_rank = q - int_rank(rows)
    if by_formula != by_rank:
        raise ConsistencyError(
            f"face dimension mismatch on support {support}: "
            f"formula gives {by_formula}, rank gives {by_rank}"
        )
    return by_formula


def enumerate_faces(host, *, max_rays=None, max_edges=None) -> FacePoset:
    """Face poset of the polytope of magic labelings of the host.

    Non-positive hosts are reduced to their positive part first (the
    polytopes coincide).  Includes the empty face (dimension -1) and the
    full polytope, which is the unique maximal face.
    """
    host = positive_part(host, max_edges=max_edges)
    rays = extreme_rays(basis_of(host, max_edges=max_edges))
    cap = DEFAULT_MAX_RAYS if max_rays is None else int(max_rays)
    if len(rays) > cap:
        raise ResourceLimitError(f"{len(rays)} extreme rays exceed the cap of {cap}")
    ray_supports = [ray.support for ray in rays]

    def close(union: frozenset[int]) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(ray_supports) if s <= union)

    closed: dict[frozenset[int], tuple[int, ...]] = {frozenset(): ()}
    frontier = []
    for s in ray_supports:
        if s not in closed:
            closed[s] = close(s)
            frontier.append(s)
    while frontier:
        fresh = []
        for union in frontier:
            for s in ray_supports:
                if s <= union:
                    continue
                bigger = union | s
                if bigger not in closed:
                    closed[bigger] = close(bigger)
                    fresh.append(bigger)
        frontier = fresh

    faces = []
    for support, members in closed.items():
        dim = -1 if not support else face_dimension(support, host)
        faces.append(Face(support=support, dim=dim, ray_indices=members))
    faces.sort(key=lambda f: (f.dim, sorted(f.support)))

    full = [f for f in faces if f.dim == faces[-1].dim]
    if len(full) != 1 or full[0].support != frozenset(range(host.edge_count)):
        raise ConsistencyError("the full polytope is not the unique maximal face")

    covers = []
    for i, low in enumerate(faces):
        for j, high in enumerate(faces):
            if high.dim == low.dim + 1 and low.support < high.support:
                covers.append((i, j))
    return FacePoset(host, rays, faces, covers)


def polytope_vertices(host, *, max_edges=None) -> list[PolytopeVertex]:
    """Extreme rays scaled to magic sum 1, deduplicated."""
    rays = extreme_rays(basis_of(host, max_edges=max_edges))
    seen = []
    for ray in rays:
        vertex = PolytopeVertex(tuple(Fraction(v, ray.magic_sum) for v in ray.values))
        if vertex not in seen:
            seen.append(vertex)
    return seen


def vertex_of_face(poset: FacePoset, face: Face) -> PolytopeVertex:
    """Coordinates of a dimension-0 face."""
    if face.dim != 0 or len(face.ray_indices) != 1:
        raise InputError("vertex_of_face expects a dimension-0 face")
    ray = poset.rays[face.ray_indices[0]]
    return PolytopeVertex(tuple(Fraction(v, ray.magic_sum) for v in ray.values))


def edge_graph(poset: FacePoset) -> Graph:
    """Graph on the polytope vertices with one edge per 1-dimensional face."""
    vertex_faces = poset.faces_of_dim(0)
    tokens = tuple(f"p{i}" for i in range(len(vertex_faces)))
    support_to_token = {f.support: t for f, t in zip(vertex_faces, tokens)}
    pairs = []
    for face in poset.faces_of_dim(1):
        ends = [support_to_token[v.support] for v in vertex_faces if v.support <= face.support]
        if len(ends) != 2:
            raise ConsistencyError("a 1-dimensional face must contain exactly 2 vertices")
        pairs.append((ends[0], ends[1]))
    return Graph(tokens, pairs)


def support_key(host, support) -> tuple:
    """Isomorphism key of a face's support subgraph.

    Support subdigraphs are compared through their bipartite images (initial
    and terminal roles permute independently), which is the equivalence that
    actually governs the polytopes: all permutation supports of the complete
    digraph are one class.  Graph supports are compared directly.  Isolated
    vertices never count.
    """
    if isinstance(host, Digraph):
        image, _ = digraph_to_bipartite(host.subgraph(support))
        return canonical_key(image)
    return canonical_key(host, support)


def isomorphism_classes(poset: FacePoset, dim: int) -> list[tuple[Face, int]]:
    """Partition the faces of one dimension by isomorphism of their support
    subgraphs (see support_key); returns one representative per class with
    the class size, in order of first appearance."""
    grouped: dict[tuple, list[Face]] = {}
    order: list[tuple] = []
    for face in poset.faces_of_dim(dim):
        key = support_key(poset.host, face.support)
        if key not in grouped:
            grouped[key] = []
            order.append(key)
        grouped[key].append(face)
    return [(grouped[key][0], len(grouped[key])) for key in order]


def birkhoff_faces_in_gamma(n: int, *, max_rays=None, max_edges=None) -> list[Face]:
    """Faces of the complete general graph on 2n vertices whose support is a
    complete bipartite graph K_{n,n}; there are C(2n-1, n) of them and each
    has dimension (n-1)^2."""
    n = int(n)
    if n < 1:
        raise InputError("n must be at least 1")
    host = complete_general_graph(2 * n)
    poset = enumerate_faces(host, max_rays=max_rays, max_edges=max_edges)
    target = canonical_key(complete_bipartite(n, n))
    found = [
        face
        for face in poset.faces
        if len(face.support) == n * n and canonical_key(host, face.support) == target
    ]
    expected = comb(2 * n - 1, n)
    if len(found) != expected:
        raise ConsistencyError(
            f"found {len(found)} bipartite faces, expected C(2n-1,n) = {expected}"
        )
    want_dim = (n - 1) ** 2
    for face in found:
        if face.dim != want_dim:
            raise ConsistencyError(f"bipartite face has dimension {face.dim}, expected {want_dim}")
    return found


# ---------------------------------------------------------------------------
# exports


def poset_to_json(poset: FacePoset) -> dict:
    class_ids: dict[frozenset, int] = {}
    for d in range(-1, poset.dimension + 1):
        seen: dict[tuple, int] = {}
        for face in poset.faces_of_dim(d):
            key = support_key(poset.host, face.support)
            class_ids[face.support] = seen.setdefault(key, len(seen))
    return {
        "host": host_to_json(poset.host),
        "dimension": poset.dimension,
        "f_vector": list(poset.f_vector()),
        "faces": [
            {
                "dim": f.dim,
                "support": sorted(f.support),
                "edges": [
                    [str(t) for t in poset.host.edge_tokens(e)] for e in sorted(f.support)
                ],
                "class": class_ids[f.support],
            }
            for f in poset.faces
        ],
        "covers": list(map(list, poset.cover_edges)),
    }


def edge_graph_to_json(poset: FacePoset) -> dict:
    vertex_faces = poset.faces_of_dim(0)
    graph = edge_graph(poset)
    return {
        "vertices": [
            {
                "id": f"p{i}",
                "coordinates": [str(c) for c in vertex_of_face(poset, face).coordinates],
            }
            for i, face in enumerate(vertex_faces)
        ],
        "edges": [[str(u), str(v)] for u, v in (graph.edge_tokens(e) for e in range(graph.edge_count))],
    }


def edge_graph_to_dot(poset: FacePoset) -> str:
    vertex_faces = poset.faces_of_dim(0)
    graph = edge_graph(poset)
    lines = ["graph edge_graph {", "  node [shape=box];"]
    for i, face in enumerate(vertex_faces):
        coords = ", ".join(str(c) for c in vertex_of_face(poset, face).coordinates)
        lines.append(f'  p{i} [label="({coords})"];')
    for e in range(graph.edge_count):
        u, v = graph.edge_tokens(e)
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dot(poset: FacePoset) -> str:
    """Hasse diagram in DOT form, one rank per dimension."""
    lines = ["digraph face_poset {", "  rankdir=BT;", "  node [shape=box];"]
    for i, face in enumerate(poset.faces):
        label = "{" + ",".join(str(e) for e in sorted(face.support)) + "}"
        lines.append(f'  f{i} [label="dim {face.dim}: {label}"];')
    top = poset.dimension
    for d in range(-1, top + 1):
        members = [i for i, f in enumerate(poset.faces) if f.dim == d]
        if members:
            lines.append("  { rank=same; " + " ".join(f"f{i};" for i in members) + " }")
    for low, high in poset.cover_edges:
        lines.append(f"  f{low} -> f{high};")
    lines.append("}")
    return "\n".join(lines) + "\n"
