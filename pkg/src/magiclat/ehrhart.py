"""Exact counting of magic labelings and quasi-polynomial fitting.

The counting function H(r) of a positive host is either the indicator of
r = 0 (when the reduced host has no edges) or a period-2 quasi-polynomial
H(r) = I(r) + (-1)^r J(r) whose degree is q - n + b for graphs and
q - 2n + b for digraphs, with b the number of bipartite connected
components (measured on the bipartite image for digraphs).  Counts come
from a depth-first search over edges in canonical order; the fit solves two
exact Vandermonde systems, one through the even samples and one through the
odd ones, and cross-validates at two fresh sample points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConsistencyError, InputError, ResourceLimitError
from .hilbert import positive_part
from .linalg import solve_unique
from .limits import DEFAULT_MAX_VOLUME
from .model import Digraph, Graph, Labeling, digraph_to_bipartite


def _check_volume(host, r, volume_cap):
    cap = DEFAULT_MAX_VOLUME if volume_cap is None else int(volume_cap)
    if (r + 1) ** host.edge_count > cap:
        raise ResourceLimitError(
            f"search volume (r+1)^q = {r + 1}^{host.edge_count} exceeds the cap of {cap}"
        )


def _dfs_plan(host, r):
    """Per-edge slot lists and completion points for the counting search.

    Returns None when some vertex-sum slot is touched by no edge while
    r > 0 (every labeling then misses the magic sum at that slot).
    """
    q = host.edge_count
    slots = [host.edge_slots(e) for e in range(q)]
    last_touch = {}
    for e in range(q):
        for s in slots[e]:
            last_touch[s] = e
    if r > 0 and len(last_touch) < host.slot_count():
        return None
    completions = [[] for _ in range(q)]
    for s, e in last_touch.items():
        completions[e].append(s)
    return slots, completions


def count_magic(host, r: int, *, volume_cap=None) -> int:
    """Number of magic labelings of the host with magic sum exactly r.

    Depth-first search over edges in canonical order, assigning each label
    from 0 upward, pruning as soon as a partial vertex sum exceeds r and
    forcing the label whenever an edge completes a vertex.  Exact
    arbitrary-precision result.
    """
    r = int(r)
    if r < 0:
        raise InputError("magic sum must be nonnegative")
    _check_volume(host, r, volume_cap)
    q = host.edge_count
    if q == 0:
        return 1 if r == 0 else 0
    plan = _dfs_plan(host, r)
    if plan is None:
        return 0
    slots, completions = plan
    sums = [0] * host.slot_count()

    def rec(e: int) -> int:
        if e == q:
            return 1
        here = slots[e]
        limit = min(r - sums[s] for s in here)
        if limit < 0:
            return 0
        finished = completions[e]
        if finished:
            forced = {r - sums[s] for s in finished}
            if len(forced) > 1:
                return 0
            val = forced.pop()
            if val < 0 or val > limit:
                return 0
            for s in here:
                sums[s] += val
            total = rec(e + 1)
            for s in here:
                sums[s] -= val
            return total
        total = 0
        for val in range(limit + 1):
            for s in here:
                sums[s] += val
            total += rec(e + 1)
            for s in here:
                sums[s] -= val
        return total

    return rec(0)


def enumerate_magic(host, r: int, *, volume_cap=None):
    """Yield the value vectors of all magic labelings of magic sum r."""
    r = int(r)
    if r < 0:
        raise InputError("magic sum must be nonnegative")
    _check_volume(host, r, volume_cap)
    q = host.edge_count
    if q == 0:
        if r == 0:
            yield Labeling(host, ())
        return
    plan = _dfs_plan(host, r)
    if plan is None:
        return
    slots, completions = plan
    sums = [0] * host.slot_count()
    values = [0] * q

    def rec(e: int):
        if e == q:
            yield Labeling(host, tuple(values))
            return
        here = slots[e]
        limit = min(r - sums[s] for s in here)
        if limit < 0:
            return
        finished = completions[e]
        candidates = range(limit + 1)
        if finished:
            forced = {r - sums[s] for s in finished}
            if len(forced) > 1:
                return
            val = forced.pop()
            if val < 0 or val > limit:
                return
            candidates = (val,)
        for val in candidates:
            values[e] = val
            for s in here:
                sums[s] += val
            yield from rec(e + 1)
            for s in here:
                sums[s] -= val
            values[e] = 0

    yield from rec(0)


def bipartite_component_count(g: Graph) -> int:
    """Number of connected components admitting a proper 2-coloring.

    A loop makes its component non-bipartite; an isolated vertex counts as a
    bipartite component.
    """
    if not isinstance(g, Graph):
        raise InputError("bipartite_component_count expects an undirected graph")
    n = g.vertex_count
    adjacency = [[] for _ in range(n)]
    looped = [False] * n
    for a, b in g.edges:
        if a == b:
            looped[a] = True
        else:
            adjacency[a].append(b)
            adjacency[b].append(a)
    color = [-1] * n
    bipartite_count = 0
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        members = []
        two_colorable = True
        while stack:
            v = stack.pop()
            members.append(v)
            for w in adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    two_colorable = False
        if two_colorable and not any(looped[v] for v in members):
            bipartite_count += 1
    return bipartite_count


@dataclass(frozen=True)
class QuasiPolynomial:
    """H(r) = I(r) + (-1)^r J(r), or the indicator of r = 0 when delta is set.

    Coefficient lists start with the constant term; a zero polynomial is the
    empty list.  ``samples`` are the exact counts used for fitting and
    validation.
    """

    i_coeffs: tuple[Fraction, ...]
    j_coeffs: tuple[Fraction, ...]
    delta: bool = False
    samples: tuple[int, ...] = field(default=())

    @property
    def degree(self) -> int:
        if self.delta:
            return -1
        return max(len(self.i_coeffs), len(self.j_coeffs)) - 1

    def evaluate(self, r: int) -> int:
        if r < 0:
            raise InputError("quasi-polynomials are evaluated at nonnegative integers")
        if self.delta:
            return 1 if r == 0 else 0
        total = _poly_eval(self.i_coeffs, r)
        if self.j_coeffs:
            j = _poly_eval(self.j_coeffs, r)
            total = total + j if r % 2 == 0 else total - j
        if total.denominator != 1 or total < 0:
            raise ConsistencyError(f"quasi-polynomial value at {r} is not a nonnegative integer")
        return int(total)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "I": [str(c) for c in self.i_coeffs],
            "J": [str(c) for c in self.j_coeffs],
            "delta_case": self.delta,
            "samples": {str(r): str(v) for r, v in enumerate(self.samples)},
        }


def _poly_eval(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _interpolate(xs, ys) -> list[Fraction]:
    rows = [[x**k for k in range(len(xs))] for x in xs]
    return solve_unique(rows, ys)


def _trim(coeffs) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def expected_degree(host) -> int:
    """q - n + b for graphs, q - 2n + b for digraphs (b from the bipartite image)."""
    q = host.edge_count
    n = host.vertex_count
    if isinstance(host, Digraph):
        image, _ = digraph_to_bipartite(host)
        return q - 2 * n + bipartite_component_count(image)
    return q - n + bipartite_component_count(host)


def fit_quasipolynomial(host, *, max_edges=None, volume_cap=None) -> QuasiPolynomial:
    """Fit the period-2 quasi-polynomial counting magic labelings by sum.

    Non-positive hosts are first reduced to their positive part; a reduction
    with no edges left is the distinguished r = 0 indicator case.  Otherwise
    H is sampled at r = 0..2d+1 where d is the expected degree, the even and
    odd interleaves are interpolated exactly, and the fit is validated
    against fresh counts at 2d+2 and 2d+3.
    """
    reduced = positive_part(host, max_edges=max_edges)
    if reduced.edge_count == 0:
        samples = tuple(count_magic(reduced, r) for r in range(4))
        return QuasiPolynomial((), (), delta=True, samples=samples)
    d = expected_degree(reduced)
    if d < 0:
        raise ConsistencyError(f"expected degree {d} is negative on a positive host")
    samples = tuple(count_magic(reduced, r, volume_cap=volume_cap) for r in range(2 * d + 4))
    even = _interpolate(list(range(0, 2 * d + 2, 2)), [samples[r] for r in range(0, 2 * d + 2, 2)])
    odd = _interpolate(list(range(1, 2 * d + 3, 2)), [samples[r] for r in range(1, 2 * d + 3, 2)])
    check_even = _poly_eval(even, 2 * d + 2)
    check_odd = _poly_eval(odd, 2 * d + 3)
    if check_even != samples[2 * d + 2] or check_odd != samples[2 * d + 3]:
        raise ConsistencyError("quasi-polynomial fit failed validation at fresh sample points")
    i_coeffs = _trim((e + o) / 2 for e, o in zip(even, odd))
    j_coeffs = _trim((e - o) / 2 for e, o in zip(even, odd))
    return QuasiPolynomial(i_coeffs, j_coeffs, delta=False, samples=samples)
