"""Rotation-system maps for oriented polyhedral surfaces.

A map is a simple graph plus, for every vertex, the cyclic order of its
neighbours on an oriented surface.  Faces are the orbits of the next-dart
permutation.  A map may designate some orbits as *open ports*: boundary
rings that are deliberately not counted as faces (they are the gluing
sites used by the assembly layer).

Everything here is exact integer combinatorics; no geometry is stored.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence


class MapError(ValueError):
    """Raised when a rotation system, walk, or count is inconsistent."""


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def least_rotation(walk: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation of a cyclic sequence.

    Orientation is preserved: reflections are *not* considered, so two
    walks are equal only if they traverse the same darts.
    """
    t = tuple(walk)
    return min(t[i:] + t[:i] for i in range(len(t)))


def undirected_cycle_key(walk: Sequence[int]) -> tuple[int, ...]:
    """Canonical form of a cyclic sequence up to rotation and reflection."""
    t = tuple(walk)
    return min(least_rotation(t), least_rotation(t[::-1]))


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected simple graph on dense vertex ids 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def from_edges(vertex_count: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        seen = set()
        for a, b in edges:
            if a == b:
                raise MapError(f"self-loop at vertex {a}")
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise MapError(f"edge ({a}, {b}) outside vertex range")
            seen.add(canonical_edge(a, b))
        return SimpleGraph(vertex_count, tuple(sorted(seen)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(sorted(n)) for n in nbrs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def distances_from(self, source: int) -> list[int]:
        """BFS distance to every vertex; -1 where unreachable."""
        dist = [-1] * self.vertex_count
        dist[source] = 0
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                dv = dist[v]
                for w in self.adjacency[v]:
                    if dist[w] < 0:
                        dist[w] = dv + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    @cached_property
    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return all(d >= 0 for d in self.distances_from(0))


def as_graph(obj) -> SimpleGraph:
    """Coerce a SimpleGraph, CombMap, or iterable of edge pairs to a graph."""
    if isinstance(obj, SimpleGraph):
        return obj
    if isinstance(obj, CombMap):
        return obj.graph
    pairs = [tuple(p) for p in obj]
    if not pairs:
        raise MapError("empty edge list")
    n = max(max(a, b) for a, b in pairs) + 1
    return SimpleGraph.from_edges(n, pairs)


@dataclass(frozen=True)
class CombMap:
    """Immutable oriented map: rotation system plus open ports.

    rotation[v] is the cyclic tuple of neighbours of v.  Face traversal
    follows the next-dart rule: arriving at v from u, leave along the
    neighbour after u in rotation[v].
    """

    vertex_count: int
    rotation: tuple[tuple[int, ...], ...]
    open_ports: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if len(self.rotation) != self.vertex_count:
            raise MapError("rotation table size differs from vertex count")
        nbr_sets = []
        for v, ring in enumerate(self.rotation):
            s = set(ring)
            if len(s) != len(ring):
                raise MapError(f"repeated neighbour in rotation at vertex {v}")
            if v in s:
                raise MapError(f"self-loop at vertex {v}")
            for u in ring:
                if not 0 <= u < self.vertex_count:
                    raise MapError(f"neighbour {u} out of range at vertex {v}")
            nbr_sets.append(s)
        for v, s in enumerate(nbr_sets):
            for u in s:
                if v not in nbr_sets[u]:
                    raise MapError(f"dart ({v}, {u}) has no reverse")
        ports = tuple(sorted(least_rotation(p) for p in self.open_ports))
        object.__setattr__(self, "open_ports", ports)
        if len(set(ports)) != len(ports):
            raise MapError("duplicate open port")
        orbit_set = set(self._orbit_walks)
        for p in ports:
            if p not in orbit_set:
                raise MapError(f"open port {p} is not a face orbit of the map")

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = set()
        for v, ring in enumerate(self.rotation):
            for u in ring:
                out.add(canonical_edge(u, v))
        return tuple(sorted(out))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.vertex_count, self.edges)

    @cached_property
    def _next_in_rotation(self) -> tuple[dict, ...]:
        table = []
        for ring in self.rotation:
            d = len(ring)
            table.append({ring[i]: ring[(i + 1) % d] for i in range(d)})
        return tuple(table)

    @cached_property
    def _orbit_walks(self) -> tuple[tuple[int, ...], ...]:
        """All orbits of the next-dart permutation, canonicalized."""
        nxt = self._next_in_rotation
        seen: set[tuple[int, int]] = set()
        walks = []
        for u in range(self.vertex_count):
            for v in self.rotation[u]:
                if (u, v) in seen:
                    continue
                walk = []
                cur = (u, v)
                while cur not in seen:
                    seen.add(cur)
                    walk.append(cur[0])
                    a, b = cur
                    cur = (b, nxt[b][a])
                walks.append(least_rotation(walk))
        return tuple(sorted(walks, key=lambda w: (len(w), w)))

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Traced face walks, excluding open ports."""
        ports = set(self.open_ports)
        return tuple(w for w in self._orbit_walks if w not in ports)

    @classmethod
    def from_faces(
        cls,
        vertex_count: int,
        faces: Iterable[Sequence[int]],
        open_walks: Iterable[Sequence[int]] = (),
    ) -> "CombMap":
        """Build the rotation system from a full list of oriented walks.

        Every dart must be used exactly once across faces plus open_walks,
        and the corners at each vertex must chain into a single cycle.
        """
        faces = [tuple(f) for f in faces]
        opens = [tuple(w) for w in open_walks]
        succ: list[dict[int, int]] = [dict() for _ in range(vertex_count)]
        for walk in faces + opens:
            k = len(walk)
            if k < 3:
                raise MapError(f"walk {walk} is shorter than a triangle")
            for i in range(k):
                p, v, q = walk[i - 1], walk[i], walk[(i + 1) % k]
                if p in succ[v]:
                    raise MapError(f"dart ({p}, {v}) used by two walks")
                succ[v][p] = q
        rotation = []
        for v in range(vertex_count):
            corners = succ[v]
            if not corners:
                rotation.append(())
                continue
            start = min(corners)
            ring = [start]
            try:
                cur = corners[start]
                while cur != start:
                    ring.append(cur)
                    cur = corners[cur]
            except KeyError as exc:
                raise MapError(f"missing reverse dart at vertex {v}") from exc
            if len(ring) != len(corners):
                raise MapError(f"corners at vertex {v} do not form one cycle")
            rotation.append(tuple(ring))
        return cls(vertex_count, tuple(rotation), tuple(opens))


@dataclass(frozen=True)
class CountSummary:
    """Vertex/edge/face counts with both genus conventions."""

    v: int
    e: int
    f5: int
    f_all: int
    ports: int
    genus_paper: Optional[int]
    genus_embedding: Optional[int]
    tt: Optional[int] = None


def trace_faces(m: CombMap) -> tuple[tuple[int, ...], ...]:
    """Face walks of a map (open ports excluded)."""
    return m.faces()


def genus_paper(v: int, e: int, f5: int) -> int:
    """Genus from v - e + f5 = 2(1 - g), counting pentagonal faces only.

    This is the convention used throughout the multi-torus family, where
    open rings and hollows are ignored.  Raises MapError on odd Euler sum.
    """
    chi = v - e + f5
    if chi % 2:
        raise MapError(f"odd Euler sum v - e + f5 = {chi}")
    return 1 - chi // 2


def euler_genus_closed(m: CombMap) -> int:
    """Embedding genus with every orbit (ports included) counted as a face."""
    chi = m.vertex_count - m.edge_count + len(m._orbit_walks)
    if chi % 2:
        raise MapError(f"odd Euler characteristic {chi}")
    return 1 - chi // 2


def degree_histogram(m: CombMap) -> dict[int, int]:
    return dict(Counter(len(ring) for ring in m.rotation))


def summarize(m: CombMap, tt: Optional[int] = None) -> CountSummary:
    faces = m.faces()
    f5 = sum(1 for f in faces if len(f) == 5)
    chi5 = m.vertex_count - m.edge_count + f5
    gp = None if chi5 % 2 else 1 - chi5 // 2
    return CountSummary(
        v=m.vertex_count,
        e=m.edge_count,
        f5=f5,
        f_all=len(faces),
        ports=len(m.open_ports),
        genus_paper=gp,
        genus_embedding=euler_genus_closed(m),
        tt=tt,
    )


def seed_tetrahedron() -> CombMap:
    """Spherical tetrahedron map on vertices 0..3."""
    return CombMap.from_faces(
        4,
        [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)],
    )


def _dodecahedron_faces() -> list[tuple[int, ...]]:
    # Layered labels: bottom 0..4, lower belt 5..9, upper belt 10..14, top 15..19.
    faces: list[tuple[int, ...]] = [(0, 1, 2, 3, 4)]
    for i in range(5):
        j = (i + 1) % 5
        faces.append((i, 5 + i, 10 + i, 5 + j, j))
        faces.append((15 + i, 15 + j, 10 + j, 5 + j, 10 + i))
    faces.append((19, 18, 17, 16, 15))
    return faces


def seed_dodecahedron() -> CombMap:
    """Spherical dodecahedron map on vertices 0..19."""
    return CombMap.from_faces(20, _dodecahedron_faces())
