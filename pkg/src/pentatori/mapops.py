"""Map operations: quad subdivision, selective truncation, face opening.

The monomer pipeline composes the three operations on a tetrahedron seed:
quad-subdivide every face, cut off the four face-centre vertices, then
open the four cut triangles into ports.  The result is the tetrapodal
all-pentagon unit used by the assembly layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .polymap import CombMap, MapError, canonical_edge, least_rotation, seed_tetrahedron

ORIGINAL = "original-vertex"
MIDPOINT = "edge-midpoint"
CENTER = "face-center"


@dataclass(frozen=True)
class VertexSelection:
    """A set of vertex ids with a tag recording where they came from."""

    ids: tuple[int, ...]
    provenance: str

    def __post_init__(self):
        object.__setattr__(self, "ids", tuple(sorted(set(self.ids))))


def p4_quadrangulate(m: CombMap) -> CombMap:
    """Quad subdivision: one new vertex per edge and per face.

    Each face centre is joined to the midpoints of its face and each
    original edge is split through its midpoint, so every face of the
    result is a quad (original vertex, midpoint, centre, midpoint).
    New ids follow the originals: midpoints in sorted-edge order, then
    centres in traced-face order.
    """
    if m.open_ports:
        raise MapError("quad subdivision requires a closed map")
    v = m.vertex_count
    edge_ids = {e: v + i for i, e in enumerate(m.edges)}
    faces = m.faces()
    center_base = v + len(m.edges)
    quads = []
    for fi, walk in enumerate(faces):
        c = center_base + fi
        k = len(walk)
        for i in range(k):
            a, b = walk[i], walk[(i + 1) % k]
            p = walk[i - 1]
            quads.append((a, edge_ids[canonical_edge(a, b)], c, edge_ids[canonical_edge(p, a)]))
    return CombMap.from_faces(center_base + len(faces), quads)


def p4_selection(original: CombMap, provenance: str) -> VertexSelection:
    """Vertex ids of one provenance class inside p4_quadrangulate(original)."""
    v = original.vertex_count
    e = original.edge_count
    f = len(original.faces())
    if provenance == ORIGINAL:
        return VertexSelection(tuple(range(v)), ORIGINAL)
    if provenance == MIDPOINT:
        return VertexSelection(tuple(range(v, v + e)), MIDPOINT)
    if provenance == CENTER:
        return VertexSelection(tuple(range(v + e, v + e + f)), CENTER)
    raise MapError(f"unknown provenance {provenance!r}")


def _truncate_with_faces(
    m: CombMap, sel: VertexSelection
) -> tuple[CombMap, tuple[tuple[int, ...], ...]]:
    """Truncate selected vertices; also return the new cut-face walks."""
    chosen = set(sel.ids)
    if not chosen:
        return m, ()
    for s in chosen:
        if not 0 <= s < m.vertex_count:
            raise MapError(f"selected vertex {s} out of range")
        for u in m.rotation[s]:
            if u in chosen:
                raise MapError(f"selected vertices {s} and {u} are adjacent")

    # Dense relabel: survivors keep their order, cut-ring vertices appended
    # per selected vertex in rotation-slot order.
    new_id = {}
    nxt = 0
    for v in range(m.vertex_count):
        if v not in chosen:
            new_id[v] = nxt
            nxt += 1
    ring_id: dict[int, list[int]] = {}
    for s in sorted(chosen):
        ring_id[s] = list(range(nxt, nxt + len(m.rotation[s])))
        nxt += len(m.rotation[s])

    def rewrite(walk: Sequence[int]) -> tuple[int, ...]:
        out: list[int] = []
        k = len(walk)
        for i in range(k):
            v = walk[i]
            if v not in chosen:
                out.append(new_id[v])
                continue
            p, q = walk[i - 1], walk[(i + 1) % k]
            slots = m.rotation[v]
            a = slots.index(p)
            if slots[(a + 1) % len(slots)] != q:
                raise MapError("face walk disagrees with rotation at selected vertex")
            ring = ring_id[v]
            out.append(ring[a])
            out.append(ring[(a + 1) % len(slots)])
        return tuple(out)

    new_faces = [rewrite(f) for f in m.faces()]
    for s in sorted(chosen):
        new_faces.append(tuple(reversed(ring_id[s])))
    new_ports = [rewrite(p) for p in m.open_ports]
    cut_walks = tuple(least_rotation(tuple(reversed(ring_id[s]))) for s in sorted(chosen))
    return CombMap.from_faces(nxt, new_faces, new_ports), cut_walks


def truncate_vertices(m: CombMap, sel: VertexSelection) -> CombMap:
    """Replace each selected vertex of degree d by a d-ring of new vertices.

    Selected vertices must be pairwise non-adjacent.  Counts change by
    v' = v - k + sum(d), e' = e + sum(d), f' = f + k, and every face
    incident to a selected vertex gains one vertex.
    """
    new_map, _ = _truncate_with_faces(m, sel)
    return new_map


def open_faces(m: CombMap, walks: Iterable[Sequence[int]]) -> CombMap:
    """Mark the given face walks as open ports (match up to rotation)."""
    wanted = [least_rotation(tuple(w)) for w in walks]
    faces = set(m.faces())
    for w in wanted:
        if w not in faces:
            raise MapError(f"walk {w} is not a closed face of the map")
    return CombMap(m.vertex_count, m.rotation, m.open_ports + tuple(wanted))


@dataclass(frozen=True)
class Monomer:
    """Tetrapodal all-pentagon unit: 22 vertices, 36 edges, 12 pentagons,
    and 4 oriented triangular ports."""

    map: CombMap

    @property
    def ports(self) -> tuple[tuple[int, ...], ...]:
        return self.map.open_ports

    def __post_init__(self):
        if len(self.ports) != 4 or any(len(p) != 3 for p in self.ports):
            raise MapError("monomer needs exactly 4 triangular ports")
        for p in self.ports:
            for v in p:
                if len(self.map.rotation[v]) != 3:
                    raise MapError("port vertices must have degree 3 before fusion")


@lru_cache(maxsize=1)
def build_monomer() -> Monomer:
    """Tetrahedron -> quad subdivision -> cut face centres -> open the cuts."""
    t = seed_tetrahedron()
    q = p4_quadrangulate(t)
    centers = p4_selection(t, CENTER)
    cut, cut_walks = _truncate_with_faces(q, centers)
    return Monomer(open_faces(cut, cut_walks))
