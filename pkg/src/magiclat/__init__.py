"""magiclat: exact enumeration of magic labelings of graphs and digraphs.

A magic labeling assigns a nonnegative integer to every edge so that each
vertex's incident-label sum hits one common magic sum (loops count once; on
digraphs the out-sum and in-sum must both hit it).  The package computes,
in exact arithmetic throughout:

* the minimal Hilbert basis and extreme rays of the cone of magic labelings,
* exact counts by magic sum and the period-2 Ehrhart quasi-polynomial,
* the face lattice of the polytope of magic labelings (the Birkhoff
  polytope, for complete digraphs), with isomorphism classes of faces,
* perfect matchings, factorizations, and magic-square conversions.
"""

from .applications import (
    SquareMatrix,
    factorize,
    labeling_to_semimagic,
    labeling_to_symmetric,
    magic_factorizations,
    n_matchings,
    perfect_matchings,
    semimagic_to_labeling,
    symmetric_to_labeling,
)
from .ehrhart import (
    QuasiPolynomial,
    bipartite_component_count,
    count_magic,
    enumerate_magic,
    expected_degree,
    fit_quasipolynomial,
)
from .errors import (
    ConsistencyError,
    GroupTableError,
    InputError,
    MagiclatError,
    ResourceLimitError,
    StructureError,
)
from .faces import (
    Face,
    FacePoset,
    PolytopeVertex,
    birkhoff_faces_in_gamma,
    edge_graph,
    enumerate_faces,
    face_dimension,
    isomorphism_classes,
    polytope_vertices,
)
from .hilbert import (
    HilbertBasis,
    basis_of,
    decompose,
    extreme_rays,
    hilbert_basis,
    is_irreducible,
    is_positive,
    positive_part,
    verify_lift_property,
)
from .model import (
    ConstraintSystem,
    Digraph,
    Graph,
    Labeling,
    build_constraints,
    cayley_digraph,
    complete_bipartite,
    complete_digraph,
    complete_general_graph,
    complete_graph,
    cycle_graph,
    digraph_to_bipartite,
    directed_cycle,
    invert_edge_map,
    is_eulerian,
    lift_labeling,
    magic_sum,
    transport_labeling,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "ConstraintSystem",
    "Digraph",
    "Face",
    "FacePoset",
    "Graph",
    "GroupTableError",
    "HilbertBasis",
    "InputError",
    "Labeling",
    "MagiclatError",
    "PolytopeVertex",
    "QuasiPolynomial",
    "ResourceLimitError",
    "SquareMatrix",
    "StructureError",
    "basis_of",
    "bipartite_component_count",
    "birkhoff_faces_in_gamma",
    "build_constraints",
    "cayley_digraph",
    "complete_bipartite",
    "complete_digraph",
    "complete_general_graph",
    "complete_graph",
    "count_magic",
    "cycle_graph",
    "decompose",
    "digraph_to_bipartite",
    "directed_cycle",
    "edge_graph",
    "enumerate_faces",
    "enumerate_magic",
    "expected_degree",
    "extreme_rays",
    "face_dimension",
    "factorize",
    "fit_quasipolynomial",
    "hilbert_basis",
    "invert_edge_map",
    "is_eulerian",
    "is_irreducible",
    "is_positive",
    "isomorphism_classes",
    "labeling_to_semimagic",
    "labeling_to_symmetric",
    "lift_labeling",
    "magic_factorizations",
    "magic_sum",
    "n_matchings",
    "perfect_matchings",
    "polytope_vertices",
    "positive_part",
    "semimagic_to_labeling",
    "symmetric_to_labeling",
    "transport_labeling",
    "verify_lift_property",
]
