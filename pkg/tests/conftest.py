"""Shared fixture hosts for the test suite."""

import random

import pytest

from magiclat import (
    Digraph,
    Graph,
    complete_bipartite,
    complete_digraph,
    complete_general_graph,
    complete_graph,
    cycle_graph,
    directed_cycle,
)


def path3() -> Graph:
    return Graph(("a", "b", "c"), (("a", "b"), ("b", "c")))


def k4_minus_edge() -> Graph:
    k4 = complete_graph(4)
    return k4.subgraph([e for e, pair in enumerate(k4.edges) if pair != (2, 3)])


def single_arc() -> Digraph:
    return Digraph(("u", "v"), (("u", "v"),))


def two_cycle() -> Digraph:
    return directed_cycle(2)


def random_eulerian_digraphs(count=3, max_edges=10):
    """Seeded unions of directed cycles (classically Eulerian), q <= max_edges."""
    rng = random.Random(20260810)
    hosts = []
    while len(hosts) < count:
        n = rng.choice([3, 4, 5])
        vs = tuple(f"v{i}" for i in range(1, n + 1))
        edges = []
        for _ in range(rng.randint(1, 3)):
            k = rng.randint(2, n)
            if len(edges) + k > max_edges:
                break
            cycle = rng.sample(range(n), k)
            edges.extend((vs[a], vs[b]) for a, b in zip(cycle, cycle[1:] + cycle[:1]))
        if edges:
            hosts.append(Digraph(vs, edges))
    return hosts


def positive_graph_fixtures():
    return {
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K22": complete_bipartite(2, 2),
        "Gamma3": complete_general_graph(3),
    }


def digraph_fixtures():
    hosts = {
        "Pi2": complete_digraph(2),
        "Pi3": complete_digraph(3),
        "DC3": directed_cycle(3),
        "DC4": directed_cycle(4),
        "DC5": directed_cycle(5),
        "TwoCycle": two_cycle(),
    }
    for i, host in enumerate(random_eulerian_digraphs()):
        hosts[f"Euler{i}"] = host
    return hosts


@pytest.fixture
def graph_zoo():
    zoo = positive_graph_fixtures()
    zoo["path3"] = path3()
    zoo["K4minus"] = k4_minus_edge()
    return zoo


@pytest.fixture
def digraph_zoo():
    return digraph_fixtures()
