"""Ring basis: chordless simple cycles up to a size cap.

The rings feeding the strip machinery are the *induced* cycles of the
graph: simple cycles with no chord.  This keeps every pentagonal face, the
triangular junctions and ports, and the hexagonal girdles of each
tetrapod, while excluding composite perimeters.

Enumeration is a DFS over induced paths, emitting each cycle exactly once
in canonical form (smallest vertex first, then the smaller neighbour).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .polymap import MapError, SimpleGraph, as_graph

RMAX_MIN = 3
RMAX_MAX = 12


@dataclass(frozen=True, order=True)
class Ring:
    """A chordless cycle stored in canonical vertex order."""

    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        k = len(vs)
        return tuple(
            (vs[i], vs[(i + 1) % k]) if vs[i] < vs[(i + 1) % k] else (vs[(i + 1) % k], vs[i])
            for i in range(k)
        )


@dataclass(frozen=True)
class RingBasis:
    rmax: int
    rings: tuple[Ring, ...]

    def restrict(self, rmax: int) -> "RingBasis":
        if rmax > self.rmax:
            raise MapError(f"cannot widen basis from rmax={self.rmax} to {rmax}")
        _check_rmax(rmax)
        return RingBasis(rmax, tuple(r for r in self.rings if r.size <= rmax))

    def census(self) -> dict[int, int]:
        return dict(sorted(Counter(r.size for r in self.rings).items()))


def _check_rmax(rmax: int) -> None:
    if not RMAX_MIN <= rmax <= RMAX_MAX:
        raise MapError(f"rmax must be in [{RMAX_MIN}, {RMAX_MAX}], got {rmax}")


def chordless_cycles(graph, rmax: int) -> RingBasis:
    """All chordless cycles of size <= rmax, canonical and sorted.

    The graph must be simple and connected.  A cycle is emitted as
    (s, a, ..., b) where s is its smallest vertex and a < b, which is the
    lexicographically minimal rotation/reflection.
    """
    g = as_graph(graph)
    _check_rmax(rmax)
    if not g.is_connected:
        raise MapError("ring enumeration requires a connected graph")
    adj = g.adjacency
    adjset = [frozenset(a) for a in adj]
    found: list[tuple[int, ...]] = []

    for s in range(g.vertex_count):
        path = [s]
        on_path = {s}

        def grow():
            last = path[-1]
            depth = len(path)
            for w in adj[last]:
                if w <= s or w in on_path:
                    continue
                hits = adjset[w] & on_path
                if len(hits) == 1:
                    # hits == {last}: the path stays induced.
                    if depth <= rmax - 2:
                        path.append(w)
                        on_path.add(w)
                        grow()
                        on_path.discard(w)
                        path.pop()
                elif len(hits) == 2 and s in hits and last in hits and depth >= 2:
                    if path[1] < w:
                        found.append(tuple(path) + (w,))

        grow()
    rings = tuple(Ring(t) for t in sorted(found, key=lambda t: (len(t), t)))
    return RingBasis(rmax, rings)


def ring_size_census(basis: RingBasis) -> dict[int, int]:
    """Ring counts keyed by size, ascending."""
    return basis.census()
