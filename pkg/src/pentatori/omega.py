"""Strip decomposition, counting polynomial, and the CI index.

Opposite edges of every even ring in the basis are paired; the transitive
closure of those pairs partitions the edge set into strips.  The counting
polynomial records strip sizes, Omega(x) = sum m(s) x^s, and the CI index
follows from its derivatives at 1:

    CI = Omega'(1)^2 - (Omega'(1) + Omega''(1)) = e^2 - sum(s_i^2)

All arithmetic is exact (Python integers), so values like CI of the
12-cell array are computed without overflow.

The codistance relation offers an independent cut decomposition: edges
e = uv, f = xy are codistant when d(v,x) = d(v,y)+1 = d(u,x)+1 = d(u,y)
under one of the four endpoint labelings.  Both decompositions are
reported; they agree on partial cubes but not in general.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .polymap import MapError, SimpleGraph, as_graph
from .ringbasis import RingBasis, chordless_cycles

Edge = tuple[int, int]


@dataclass(frozen=True)
class OmegaPolynomial:
    """Counting polynomial with integer coefficients, sparse in s."""

    terms: tuple[tuple[int, int], ...]

    @staticmethod
    def from_sizes(sizes: Iterable[int]) -> "OmegaPolynomial":
        c = Counter(sizes)
        return OmegaPolynomial(tuple(sorted(c.items())))

    def __post_init__(self):
        object.__setattr__(
            self, "terms", tuple(sorted((s, m) for s, m in self.terms if m))
        )
        for s, m in self.terms:
            if s < 1 or m < 1:
                raise MapError(f"invalid polynomial term {m}x^{s}")

    def coefficient(self, s: int) -> int:
        return dict(self.terms).get(s, 0)

    def derivative_at_one(self, order: int = 1) -> int:
        """k-th derivative evaluated at x = 1, exactly."""
        if order < 0:
            raise MapError("derivative order must be >= 0")
        total = 0
        for s, m in self.terms:
            factor = 1
            for i in range(order):
                factor *= s - i
            total += m * factor
        return total

    def text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}x^{s}" for s, m in self.terms)

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.text()


@dataclass(frozen=True)
class StripPartition:
    """Edge classes produced by the opposite-edge closure."""

    classes: tuple[tuple[Edge, ...], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def polynomial(self) -> OmegaPolynomial:
        return OmegaPolynomial.from_sizes(self.sizes())


def op_pairs(basis: RingBasis) -> tuple[tuple[Edge, Edge], ...]:
    """Opposite-edge pairs: k pairs for each 2k-ring, none for odd rings."""
    pairs = set()
    for ring in basis.rings:
        k = ring.size
        if k % 2:
            continue
        edges = ring.edges()
        half = k // 2
        for i in range(half):
            a, b = edges[i], edges[i + half]
            pairs.add((a, b) if a <= b else (b, a))
    return tuple(sorted(pairs))


def strip_partition(graph, basis: RingBasis) -> StripPartition:
    """Partition the edge set by the transitive closure of opposite pairs.

    Edges in no even ring stay as singleton strips, so the classes always
    cover the edge set exactly.
    """
    g = as_graph(graph)
    index = {e: i for i, e in enumerate(g.edges)}
    parent = list(range(len(g.edges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in op_pairs(basis):
        if a not in index or b not in index:
            raise MapError(f"ring edge {a if a not in index else b} not in graph")
        ra, rb = find(index[a]), find(index[b])
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[Edge]] = {}
    for e, i in index.items():
        groups.setdefault(find(i), []).append(e)
    classes = tuple(sorted(tuple(sorted(c)) for c in groups.values()))
    return StripPartition(classes)


def omega(graph, rmax: int = 6, basis: Optional[RingBasis] = None) -> OmegaPolynomial:
    """Counting polynomial of the strip sizes at the given ring-size cap."""
    g = as_graph(graph)
    if basis is None:
        basis = chordless_cycles(g, rmax)
    elif basis.rmax != rmax:
        basis = basis.restrict(rmax)
    return strip_partition(g, basis).polynomial()


def derivative_at_one(poly: OmegaPolynomial, order: int = 1) -> int:
    return poly.derivative_at_one(order)


def ci(poly: OmegaPolynomial) -> int:
    """CI index from the polynomial's first two derivatives at 1."""
    d1 = poly.derivative_at_one(1)
    d2 = poly.derivative_at_one(2)
    return d1 * d1 - (d1 + d2)


def codistant(graph, e: Edge, f: Edge) -> bool:
    """Whether two edges are codistant (reflexive and symmetric)."""
    g = as_graph(graph)
    u, v = e
    x, y = f
    du = g.distances_from(u)
    dv = g.distances_from(v)
    return _co_from_tables(du, dv, x, y)


def _co_from_tables(du, dv, x: int, y: int) -> bool:
    for a, b in ((x, y), (y, x)):
        if dv[a] == dv[b] + 1 == du[a] + 1 == du[b]:
            return True
        if du[a] == du[b] + 1 == dv[a] + 1 == dv[b]:
            return True
    return False


@dataclass(frozen=True)
class CoCuts:
    """Edge classes under the codistance relation."""

    classes: tuple[tuple[Edge, ...], ...]
    transitive: bool


def co_cuts(graph) -> CoCuts:
    """Codistance classes plus a flag telling whether they are equivalence
    classes (the relation need not be transitive in general)."""
    g = as_graph(graph)
    if not g.is_connected:
        raise MapError("codistance needs a connected graph")
    dist = [g.distances_from(v) for v in range(g.vertex_count)]
    edges = g.edges
    ne = len(edges)
    related: list[set[int]] = [set() for _ in range(ne)]
    parent = list(range(ne))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(ne):
        u, v = edges[i]
        du, dv = dist[u], dist[v]
        related[i].add(i)
        for j in range(i + 1, ne):
            x, y = edges[j]
            if _co_from_tables(du, dv, x, y):
                related[i].add(j)
                related[j].add(i)
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    components: dict[int, set[int]] = {}
    for i in range(ne):
        components.setdefault(find(i), set()).add(i)
    transitive = all(
        related[i] == components[find(i)] for i in range(ne)
    )
    classes = tuple(
        sorted(tuple(edges[i] for i in sorted(c)) for c in components.values())
    )
    return CoCuts(classes, transitive)
