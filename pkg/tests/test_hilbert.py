"""Cone engine: minimal Hilbert bases, extreme rays, positivity, decomposition."""


import pytest

from conftest import k4_minus_edge, path3
from oracles import (
    brute_labelings_up_to,
    minimal_magic_oracle,
    support_minimal_vectors,
)

from magiclat import (
    Digraph,
    Graph,
    Labeling,
    ResourceLimitError,
    StructureError,
    basis_of,
    build_constraints,
    complete_bipartite,
    complete_digraph,
    complete_general_graph,
    complete_graph,
    cycle_graph,
    decompose,
    digraph_to_bipartite,
    directed_cycle,
    extreme_rays,
    hilbert_basis,
    is_irreducible,
    is_positive,
    lift_labeling,
    positive_part,
    transport_labeling,
    verify_lift_property,
)

# (host builder, oracle magic-sum bound) pairs: the bound is checked to cover
# the whole computed basis before asserting set equality with the oracle.
ORACLE_HOSTS = [
    (complete_graph(3), 6),
    (complete_graph(4), 4),
    (complete_graph(5), 2),
    (cycle_graph(4), 3),
    (cycle_graph(5), 4),
    (complete_bipartite(2, 2), 3),
    (complete_general_graph(2), 3),
    (complete_general_graph(3), 4),
    (complete_digraph(2), 3),
    (complete_digraph(3), 2),
    (directed_cycle(3), 2),
]


def test_k3_basis_frozen():
    hb = basis_of(complete_graph(3))
    assert [(l.values, l.magic_sum) for l in hb] == [((1, 1, 1), 2)]


def test_parallel_edge_graph_basis():
    # loop at a feeds a; both parallel a-b edges are forced to zero by c
    host = Graph(("a", "b", "c"), (("a", "a"), ("a", "b"), ("a", "b"), ("b", "c")))
    hb = basis_of(host)
    assert all(l.magic_sum <= 4 for l in hb)
    assert sorted(l.values for l in hb) == minimal_magic_oracle(host, 4)
    assert [l.values for l in hb] == [(1, 0, 0, 1)]


def test_parallel_arc_digraph_basis():
    host = Digraph(("u", "v"), (("u", "v"), ("u", "v"), ("v", "u")))
    hb = basis_of(host)
    assert sorted(l.values for l in hb) == [(0, 1, 1), (1, 0, 1)]
    assert sorted(l.values for l in hb) == minimal_magic_oracle(host, 3)


def test_triangle_plus_edge_has_mixed_ray():
    # disjoint triangle and single edge: the only generator pairs an odd
    # cycle of unit labels with one edge labeled 2
    host = Graph(
        ("v1", "v2", "v3", "v4", "v5"),
        (("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v4", "v5")),
    )
    hb = basis_of(host)
    assert [(l.values, l.magic_sum) for l in hb] == [((1, 1, 1, 2), 2)]
    assert sorted(l.values for l in hb) == minimal_magic_oracle(host, 4)
    assert [l.values for l in extreme_rays(hb)] == [(1, 1, 1, 2)]


def test_path_basis_empty():
    assert len(basis_of(path3())) == 0


def test_pi2_basis_is_both_permutations():
    hb = basis_of(complete_digraph(2))
    assert [l.values for l in hb] == [(0, 1, 1, 0), (1, 0, 0, 1)]
    assert all(l.magic_sum == 1 for l in hb)


@pytest.mark.parametrize("host,bound", ORACLE_HOSTS, ids=lambda x: repr(x))
def test_basis_matches_brute_force_oracle(host, bound):
    hb = basis_of(host)
    assert all(l.magic_sum <= bound for l in hb), "oracle bound must cover the basis"
    assert sorted(l.values for l in hb) == minimal_magic_oracle(host, bound)


def test_basis_minimality_no_dominance(graph_zoo, digraph_zoo):
    for host in list(graph_zoo.values()) + list(digraph_zoo.values()):
        elements = basis_of(host).elements
        for a in elements:
            for b in elements:
                if a is not b:
                    assert not all(x <= y for x, y in zip(a.values, b.values))


def test_basis_canonical_order(graph_zoo):
    for host in graph_zoo.values():
        keys = [(l.magic_sum, l.values) for l in basis_of(host)]
        assert keys == sorted(keys)


def test_digraph_basis_all_sum_one(digraph_zoo):
    for host in digraph_zoo.values():
        assert all(l.magic_sum == 1 for l in basis_of(host))


def test_basis_agrees_with_bipartite_image(digraph_zoo):
    for name in ("Pi2", "Pi3", "DC3"):
        host = digraph_zoo[name]
        image, mapping = digraph_to_bipartite(host)
        transported = {
            transport_labeling(l, image, mapping).values for l in basis_of(host)
        }
        assert transported == {l.values for l in basis_of(image)}


def test_basis_invariant_under_vertex_relabeling():
    k4 = complete_graph(4)
    shuffled = Graph(("v3", "v1", "v4", "v2"), [k4.edge_tokens(e) for e in range(6)])
    # map each edge of the shuffled host back to its index in k4
    back = {frozenset(shuffled.edge_tokens(e)): e for e in range(shuffled.edge_count)}
    relabeled = set()
    for l in basis_of(shuffled):
        values = [0] * 6
        for e in range(6):
            values[back[frozenset(k4.edge_tokens(e))]] = l.values[e]
        relabeled.add(tuple(values))
    assert relabeled == {l.values for l in basis_of(k4)}


def test_is_irreducible_examples():
    k3 = complete_graph(3)
    hb = basis_of(k3)
    assert is_irreducible(Labeling(k3, (1, 1, 1)), hb)
    assert not is_irreducible(Labeling(k3, (2, 2, 2)), hb)
    assert not is_irreducible(Labeling(k3, (0, 0, 0)), hb)
    with pytest.raises(StructureError):
        is_irreducible(Labeling(complete_graph(4), (0,) * 6), hb)


# ---------------------------------------------------------------------------
# extreme rays


def test_k3_single_ray():
    hb = basis_of(complete_graph(3))
    assert [l.values for l in extreme_rays(hb)] == [(1, 1, 1)]


def test_pi3_all_six_rays():
    hb = basis_of(complete_digraph(3))
    assert len(extreme_rays(hb)) == 6


def test_gamma3_five_rays_frozen():
    # edge order of Gamma_3: loop1, 12, 13, loop2, 23, loop3
    hb = basis_of(complete_general_graph(3))
    rays = extreme_rays(hb)
    assert sorted(l.values for l in rays) == [
        (0, 0, 1, 1, 0, 0),  # loop at v2 + edge 13
        (0, 1, 0, 0, 0, 1),  # loop at v3 + edge 12
        (0, 1, 1, 0, 1, 0),  # triangle, magic sum 2
        (1, 0, 0, 0, 1, 0),  # loop at v1 + edge 23
        (1, 0, 0, 1, 0, 1),  # all three loops
    ]
    assert sorted(l.magic_sum for l in rays) == [1, 1, 1, 1, 2]


def test_rays_match_support_minimal_oracle(graph_zoo, digraph_zoo):
    for host in list(graph_zoo.values()) + list(digraph_zoo.values()):
        hb = basis_of(host)
        rays = sorted(l.values for l in extreme_rays(hb))
        assert rays == support_minimal_vectors([l.values for l in hb])


def test_graph_ray_sums_in_1_2(graph_zoo):
    for host in graph_zoo.values():
        for ray in extreme_rays(basis_of(host)):
            assert ray.magic_sum in (1, 2)


# ---------------------------------------------------------------------------
# positivity


def test_positive_examples(graph_zoo):
    assert is_positive(graph_zoo["K3"]) == (True, frozenset())
    assert is_positive(graph_zoo["K4"]) == (True, frozenset())
    flag, zeros = is_positive(path3())
    assert not flag and zeros == frozenset({0, 1})


def test_k4_minus_edge_forces_opposite_edge():
    host = k4_minus_edge()
    flag, zeros = is_positive(host)
    assert not flag
    # the remaining edge disjoint from the removed one is always zero
    assert zeros == frozenset({host.edges.index((0, 1))})
    reduced = positive_part(host)
    assert reduced.edge_count == 4
    assert sorted(reduced.edges) == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_positive_part_identity_on_positive(graph_zoo):
    k3 = graph_zoo["K3"]
    assert positive_part(k3) == k3


def test_positive_part_of_path_is_edgeless():
    reduced = positive_part(path3())
    assert reduced.edge_count == 0
    assert reduced.vertex_count == 3


# ---------------------------------------------------------------------------
# decomposition


def test_decompose_k3_multiple():
    k3 = complete_graph(3)
    hb = basis_of(k3)
    assert decompose(Labeling(k3, (3, 3, 3)), hb) == [(hb.elements[0], 3)]
    assert decompose(Labeling(k3, (0, 0, 0)), hb) == []


def test_decompose_pi3_sum3_into_three_permutations():
    pi3 = complete_digraph(3)
    hb = basis_of(pi3)
    ones = Labeling(pi3, (1,) * 9)
    parts = decompose(ones, hb)
    assert sum(mult for _, mult in parts) == 3
    total = [0] * 9
    for element, mult in parts:
        total = [t + mult * v for t, v in zip(total, element.values)]
    assert tuple(total) == ones.values


def test_decompose_rejects_non_magic():
    k3 = complete_graph(3)
    with pytest.raises(StructureError):
        decompose(Labeling(k3, (1, 0, 0)), basis_of(k3))


def test_every_small_magic_labeling_decomposes(graph_zoo, digraph_zoo):
    hosts = [h for h in list(graph_zoo.values()) + list(digraph_zoo.values()) if h.edge_count <= 9]
    for host in hosts:
        hb = basis_of(host)
        for labeling in brute_labelings_up_to(host, 3 if host.edge_count > 6 else 4):
            parts = decompose(labeling, hb)
            total = [0] * host.edge_count
            for element, mult in parts:
                total = [t + mult * v for t, v in zip(total, element.values)]
            assert tuple(total) == labeling.values


# ---------------------------------------------------------------------------
# lifting into complete hosts


def test_lift_property_k3_into_gamma3():
    assert verify_lift_property(complete_graph(3), complete_general_graph(3))


def test_lift_property_k22_into_gamma4():
    k22 = complete_bipartite(2, 2)
    assert verify_lift_property(k22, complete_general_graph(4))


def test_lift_property_directed_cycle_into_pi3():
    assert verify_lift_property(directed_cycle(3), complete_digraph(3))


def test_lift_property_rejects_mismatched_orders():
    with pytest.raises(StructureError):
        verify_lift_property(complete_digraph(2), complete_digraph(3))
    with pytest.raises(StructureError):
        verify_lift_property(complete_graph(3), complete_graph(3))


def test_basis_elements_lift_into_ambient_basis():
    gamma4 = complete_general_graph(4)
    big = set(basis_of(gamma4).elements)
    for l in basis_of(complete_bipartite(2, 2)):
        assert lift_labeling(l, gamma4) in big


# ---------------------------------------------------------------------------
# caps and serialization


def test_edge_cap_refusal():
    big = complete_graph(7)  # 21 edges
    with pytest.raises(ResourceLimitError):
        basis_of(big)
    with pytest.raises(ResourceLimitError):
        hilbert_basis(build_constraints(big))


def test_edge_cap_override(monkeypatch):
    host = complete_graph(3)
    with pytest.raises(ResourceLimitError):
        basis_of(host, max_edges=2)
    monkeypatch.setenv("MAGICLAT_MAX_EDGES", "2")
    with pytest.raises(ResourceLimitError):
        basis_of(host)


def test_basis_json_shape():
    payload = basis_of(complete_digraph(2)).to_json()
    assert payload["host"]["kind"] == "digraph"
    assert payload["elements"] == [
        {"values": [0, 1, 1, 0], "magic_sum": 1},
        {"values": [1, 0, 0, 1], "magic_sum": 1},
    ]
