"""Monomer fusion and skeleton-driven assembly of multi-torus structures.

A skeleton is a simple graph of monomer positions (degree <= 4) with an
injective slot assignment per position.  Assembly places one tetrapod on
every position and fuses ports pairwise along skeleton edges.  Each fusion
identifies two oriented port triangles vertex-by-vertex with reversed
orientation, removing 3 vertices and 3 edges; the junction triangle stays
in the graph as a closed 3-ring that is no longer a face.

Skeleton generators cover four families: dendrimer growth stages over
one dodecahedral unit, the full unit, linear and cyclic chains of
face-sharing units, and the 12-cell super-dodecahedron array.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .mapops import Monomer, build_monomer
from .polymap import (
    CombMap,
    CountSummary,
    MapError,
    SimpleGraph,
    canonical_edge,
    least_rotation,
    seed_dodecahedron,
    undirected_cycle_key,
)


class SkeletonError(ValueError):
    """Raised for invalid skeletons or inconsistent identifications."""


MAX_SLOTS = 4

# Growth order of dendrimer stages over the dodecahedral unit skeleton
# (layered labels as in polymap). Positions 2..11 attach to exactly one
# placed neighbour; positions 12..17 attach to exactly two, each closing
# one pentagonal super-ring, which yields (m - 1) + max(0, m - 11) edges.
_DENDRIMER_ORDER = (0, 1, 2, 3, 5, 6, 7, 8, 13, 9, 18, 10, 11, 12, 17, 16, 15)


@dataclass(frozen=True)
class Skeleton:
    """Monomer positions, fusion edges, optional super-faces and joints."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    slots: tuple[tuple[int, ...], ...]
    faces: Optional[tuple[tuple[int, ...], ...]] = None
    double_joints: Optional[int] = None
    triple_joints: Optional[int] = None

    @staticmethod
    def from_edges(
        vertex_count: int,
        edges: Iterable[Sequence[int]],
        faces: Optional[Iterable[Sequence[int]]] = None,
        slots: Optional[Sequence[Sequence[int]]] = None,
        double_joints: Optional[int] = None,
        triple_joints: Optional[int] = None,
    ) -> "Skeleton":
        g = SimpleGraph.from_edges(vertex_count, [tuple(e) for e in edges])
        slot_table = (
            tuple(tuple(s) for s in slots) if slots is not None else g.adjacency
        )
        face_table = (
            tuple(sorted(undirected_cycle_key(f) for f in faces))
            if faces is not None
            else None
        )
        return Skeleton(
            vertex_count, g.edges, slot_table, face_table, double_joints, triple_joints
        )

    def __post_init__(self):
        g = self.graph
        if len(self.slots) != self.vertex_count:
            raise SkeletonError("slot table size differs from position count")
        for v, assigned in enumerate(self.slots):
            if len(assigned) > MAX_SLOTS:
                raise SkeletonError(f"position {v} exceeds {MAX_SLOTS} ports")
            if len(set(assigned)) != len(assigned):
                raise SkeletonError(f"slot conflict at position {v}")
            if set(assigned) != set(g.adjacency[v]):
                raise SkeletonError(f"slots at position {v} disagree with edges")
        if self.faces is not None:
            for f in self.faces:
                if len(f) != 5:
                    raise SkeletonError("super-faces must be pentagons")

    @property
    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.vertex_count, self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def slot_of(self, position: int, neighbour: int) -> int:
        try:
            return self.slots[position].index(neighbour)
        except ValueError as exc:
            raise SkeletonError(
                f"no slot for edge ({position}, {neighbour})"
            ) from exc


def _merge_rotation(
    rot_a: Sequence[int], pa_prev: int, pa_next: int,
    rot_b: Sequence[int], qb_prev: int, qb_next: int,
) -> tuple[int, ...]:
    """Interleave the rotations of two identified port vertices.

    On the A side the port corner arrives along {prev, v} and leaves along
    {v, next}; the merged rotation keeps all non-port corners of both
    sides and routes each old port dart into the other side's face.
    """
    def arc(rot: Sequence[int], prev: int, nxt: int) -> list[int]:
        i = rot.index(prev)
        d = len(rot)
        if rot[(i + 1) % d] != nxt:
            raise MapError("port walk disagrees with rotation at port vertex")
        out = []
        j = (i + 2) % d
        while rot[j % d] != prev:
            out.append(rot[j % d])
            j = (j + 1) % d
        return out

    rest_a = arc(rot_a, pa_prev, pa_next)
    rest_b = arc(rot_b, qb_prev, qb_next)
    return tuple([pa_next] + rest_a + [pa_prev] + rest_b)


def _fuse_all(
    vertex_count: int,
    rotation: list[tuple[int, ...]],
    ports: list[tuple[int, ...]],
    fusions: list[tuple[tuple[int, ...], tuple[int, ...], int]],
) -> CombMap:
    """Apply a batch of port fusions inside one combined vertex space."""
    parent = list(range(vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pair_info: dict[int, tuple] = {}
    used: set[int] = set()
    for wa, wb, twist in fusions:
        if len(wa) != 3 or len(wb) != 3:
            raise MapError("only triangular ports can be fused")
        if twist not in (0, 1, 2):
            raise MapError(f"twist must be 0, 1, or 2, got {twist}")
        for walk in (wa, wb):
            for x in walk:
                if x in used:
                    raise SkeletonError(f"port vertex {x} fused twice")
                used.add(x)
        for i in range(3):
            a = wa[i]
            b = wb[(twist - i) % 3]
            parent[find(a)] = find(b)
            j = (twist - i) % 3
            pair_info[a] = (wa[(i - 1) % 3], wa[(i + 1) % 3], b,
                            wb[(j - 1) % 3], wb[(j + 1) % 3])

    new_id: dict[int, int] = {}
    for v in range(vertex_count):
        r = find(v)
        if r not in new_id:
            new_id[r] = len(new_id)

    def relabel(v: int) -> int:
        return new_id[find(v)]

    partner_side = {info[2] for info in pair_info.values()}
    merged_rotation: list[tuple[int, ...] | None] = [None] * len(new_id)
    for v in range(vertex_count):
        if v in partner_side:
            continue  # handled from the other side of its fusion
        if v in pair_info:
            pa_prev, pa_next, b, qb_prev, qb_next = pair_info[v]
            ring = _merge_rotation(rotation[v], pa_prev, pa_next,
                                   rotation[b], qb_prev, qb_next)
        else:
            ring = rotation[v]
        out = tuple(relabel(u) for u in ring)
        if len(set(out)) != len(out):
            raise MapError("fusion would create a parallel edge")
        merged_rotation[relabel(v)] = out

    if any(r is None for r in merged_rotation):
        raise MapError("fusion left a vertex without a rotation")
    fused_walks = {least_rotation(w) for wa, wb, _ in fusions for w in (wa, wb)}
    remaining = [
        least_rotation(tuple(relabel(x) for x in p))
        for p in ports
        if least_rotation(p) not in fused_walks
    ]
    return CombMap(len(new_id), tuple(merged_rotation), tuple(remaining))


def fuse(a: CombMap, port_a: int, b: CombMap, port_b: int, twist: int = 0) -> CombMap:
    """Glue two maps along one triangular port each, orientation reversed.

    twist selects one of the three rotational alignments; counts are
    invariant under it.  Port indices refer to open_ports order.
    """
    if not 0 <= port_a < len(a.open_ports):
        raise MapError(f"map has no open port {port_a}")
    if not 0 <= port_b < len(b.open_ports):
        raise MapError(f"map has no open port {port_b}")
    off = a.vertex_count
    rotation = list(a.rotation) + [tuple(u + off for u in ring) for ring in b.rotation]
    ports = list(a.open_ports) + [tuple(x + off for x in p) for p in b.open_ports]
    wa = a.open_ports[port_a]
    wb = tuple(x + off for x in b.open_ports[port_b])
    return _fuse_all(off + b.vertex_count, rotation, ports, [(wa, wb, twist)])


def assemble(
    skeleton: Skeleton,
    twists: Optional[Mapping[tuple[int, int], int]] = None,
) -> CombMap:
    """One monomer per skeleton position, ports fused along skeleton edges.

    Resulting counts: v = 22n - 3E, e = 36n - 3E, f5 = 12n.
    """
    mono = build_monomer()
    step = mono.map.vertex_count
    n = skeleton.vertex_count
    rotation: list[tuple[int, ...]] = []
    for p in range(n):
        off = p * step
        rotation.extend(tuple(u + off for u in ring) for ring in mono.map.rotation)
    ports = [
        tuple(x + p * step for x in walk)
        for p in range(n)
        for walk in mono.ports
    ]
    fusions = []
    for p, q in skeleton.edges:
        wa = tuple(x + p * step for x in mono.ports[skeleton.slot_of(p, q)])
        wb = tuple(x + q * step for x in mono.ports[skeleton.slot_of(q, p)])
        twist = 0 if twists is None else twists.get((p, q), 0)
        fusions.append((wa, wb, twist))
    fused = _fuse_all(n * step, rotation, ports, fusions)
    if fused.vertex_count != 22 * n - 3 * skeleton.edge_count:
        raise MapError("assembled vertex count violates the fusion rule")
    if fused.edge_count != 36 * n - 3 * skeleton.edge_count:
        raise MapError("assembled edge count violates the fusion rule")
    return fused


def skeleton_U1() -> Skeleton:
    """The dodecahedral unit: 20 positions, 30 fusion edges, 12 super-faces."""
    d = seed_dodecahedron()
    return Skeleton.from_edges(20, d.edges, faces=d.faces())


def skeleton_dendrimer(m: int) -> Skeleton:
    """Growth stage m (1..17) of the dendrimer over the dodecahedral unit.

    Connections: (m - 1) + r(m) with r(m) = max(0, m - 11); from stage 12
    on, each added position also closes one pentagonal super-ring.
    """
    if not 1 <= m <= 17:
        raise SkeletonError(f"dendrimer stages cover 1..17, got {m}")
    keep = set(_DENDRIMER_ORDER[:m])
    relabel = {v: i for i, v in enumerate(_DENDRIMER_ORDER[:m])}
    d = seed_dodecahedron()
    edges = [
        (relabel[a], relabel[b])
        for a, b in d.edges
        if a in keep and b in keep
    ]
    sk = Skeleton.from_edges(m, edges)
    if sk.edge_count != (m - 1) + max(0, m - 11):
        raise SkeletonError("dendrimer growth order lost its edge-count rule")
    return sk


def _chain_cells(u: int, cyclic: bool) -> Skeleton:
    """Row (or ring) of dodecahedral cells, adjacent cells sharing a pentagon."""
    pos: dict = {}

    def pid(key) -> int:
        return pos.setdefault(key, len(pos))

    edges: set[tuple[int, int]] = set()
    faces: set[tuple[int, ...]] = set()

    def add_edge(a: int, b: int) -> None:
        edges.add(canonical_edge(a, b))

    def add_face(cycle: Sequence[int]) -> None:
        faces.add(undirected_cycle_key(cycle))

    first_bottom = [pid(("B", k)) for k in range(5)]
    bottom = first_bottom
    for c in range(u):
        if cyclic and c == u - 1:
            top = first_bottom
        else:
            top = [pid(("T", c, k)) for k in range(5)]
        low = [pid(("L", c, k)) for k in range(5)]
        upp = [pid(("U", c, k)) for k in range(5)]
        for k in range(5):
            j = (k + 1) % 5
            add_edge(bottom[k], bottom[j])
            add_edge(bottom[k], low[k])
            add_edge(low[k], upp[k])
            add_edge(upp[k], low[j])
            add_edge(upp[k], top[k])
            add_edge(top[k], top[j])
            add_face((bottom[k], low[k], upp[k], low[j], bottom[j]))
            add_face((top[k], top[j], upp[j], low[j], upp[k]))
        add_face(bottom)
        add_face(top)
        bottom = top
    return Skeleton.from_edges(
        len(pos),
        edges,
        faces=sorted(faces),
        double_joints=(u if cyclic else u - 1),
        triple_joints=0,
    )


def skeleton_chain(u: int) -> Skeleton:
    """u cells in a row: 15u + 5 positions, 25u + 5 fusion edges."""
    if u < 1:
        raise SkeletonError(f"chain needs at least one cell, got {u}")
    sk = _chain_cells(u, cyclic=False)
    if (sk.vertex_count, sk.edge_count) != (15 * u + 5, 25 * u + 5):
        raise SkeletonError("chain identification lost its count rule")
    return sk


def skeleton_cycle(u: int) -> Skeleton:
    """u cells in a closed ring: 15u positions, 25u fusion edges (u >= 6)."""
    if u < 6:
        raise SkeletonError(f"cyclic arrays start at 6 cells, got {u}")
    sk = _chain_cells(u, cyclic=True)
    if (sk.vertex_count, sk.edge_count) != (15 * u, 25 * u):
        raise SkeletonError("cyclic identification lost its count rule")
    return sk


def skeleton_12D() -> Skeleton:
    """Twelve dodecahedral cells around a virtual central dodecahedron.

    Adjacent cells (one per pair of adjacent central faces, 30 pairs)
    share a pentagonal face; the three cells around each central vertex
    (20 triples) share one edge.  Identification is keyed off the central
    labelling and checked against the count oracles 130/230/114.
    """
    central = seed_dodecahedron()
    pos: dict = {}

    def pid(key) -> int:
        return pos.setdefault(key, len(pos))

    edges: set[tuple[int, int]] = set()
    faces: set[tuple[int, ...]] = set()
    for fi, cyc in enumerate(central.faces()):
        b = [pid(("b", w)) for w in cyc]
        low = [pid(("l", w)) for w in cyc]
        upp = [pid(("u", canonical_edge(cyc[k], cyc[(k + 1) % 5]))) for k in range(5)]
        top = [pid(("t", fi, k)) for k in range(5)]
        for k in range(5):
            j = (k + 1) % 5
            edges.add(canonical_edge(b[k], b[j]))
            edges.add(canonical_edge(b[k], low[k]))
            edges.add(canonical_edge(low[k], upp[k]))
            edges.add(canonical_edge(upp[k], low[j]))
            edges.add(canonical_edge(upp[k], top[k]))
            edges.add(canonical_edge(top[k], top[j]))
            faces.add(undirected_cycle_key((b[k], low[k], upp[k], low[j], b[j])))
            faces.add(undirected_cycle_key((top[k], top[j], upp[j], low[j], upp[k])))
        faces.add(undirected_cycle_key(b))
        faces.add(undirected_cycle_key(top))
    if len(pos) != 130 or len(edges) != 230 or len(faces) != 114:
        raise SkeletonError(
            f"12-cell identification failed its oracles: "
            f"{len(pos)}/{len(edges)}/{len(faces)} != 130/230/114"
        )
    sk = Skeleton.from_edges(
        130, edges, faces=sorted(faces), double_joints=30, triple_joints=20
    )
    if max(len(s) for s in sk.slots) > 4 or sum(len(s) for s in sk.slots) != 460:
        raise SkeletonError("12-cell skeleton violates its degree oracle")
    return sk


@dataclass(frozen=True)
class StructureParams:
    """Family selector: dendrimer stage, linear/cyclic chain, or 12-cell array."""

    kind: str
    m: Optional[int] = None
    r: Optional[int] = None
    u: Optional[int] = None

    def __post_init__(self):
        if self.kind == "M":
            if self.m is None or not 1 <= self.m <= 17:
                raise SkeletonError(f"dendrimer stage must be 1..17, got {self.m}")
            if self.r != max(0, self.m - 11):
                raise SkeletonError(
                    f"stage {self.m} grows with r = {max(0, self.m - 11)}, got {self.r}"
                )
        elif self.kind == "Ulin":
            if self.u is None or self.u < 1:
                raise SkeletonError(f"linear chains need u >= 1, got {self.u}")
        elif self.kind == "Ucyc":
            if self.u is None or self.u < 6:
                raise SkeletonError(f"cyclic chains need u >= 6, got {self.u}")
        elif self.kind == "MT12U":
            if (self.m, self.r) != (None, None) or self.u not in (None, 12):
                raise SkeletonError("the 12-cell array takes no parameters")
            object.__setattr__(self, "u", 12)
        else:
            raise SkeletonError(f"unknown structure kind {self.kind!r}")

    @staticmethod
    def dendrimer(m: int) -> "StructureParams":
        return StructureParams("M", m=m, r=max(0, m - 11))

    @staticmethod
    def linear(u: int) -> "StructureParams":
        return StructureParams("Ulin", u=u)

    @staticmethod
    def cyclic(u: int) -> "StructureParams":
        return StructureParams("Ucyc", u=u)

    @staticmethod
    def mt12u() -> "StructureParams":
        return StructureParams("MT12U")

    def label(self) -> str:
        if self.kind == "M":
            return f"M({self.m},{self.r})"
        if self.kind == "Ulin":
            return f"Ulin({self.u})"
        if self.kind == "Ucyc":
            return f"Ucyc({self.u})"
        return "MT12U"


def predict_counts(params: StructureParams) -> CountSummary:
    """Closed-form monomer and vertex counts, with edges and faces implied.

    Uses tt and v formulas per family; e = 14 tt + v and f5 = 12 tt follow
    from the fusion rule.  Evaluated without building any graph.
    """
    if params.kind == "M":
        m = params.m
        tt = m
        v = 19 * m + 3 if m <= 11 else 16 * m + 36
    elif params.kind == "Ulin":
        tt = 15 * params.u + 5
        v = 255 * params.u + 95
    elif params.kind == "Ucyc":
        tt = 15 * params.u
        v = 255 * params.u
    else:
        u, d, t = 12, 30, 20
        tt = 20 * u - (5 * d - 2 * t)
        v = 5 * (5 * tt - 18 * u)
    e = 14 * tt + v
    f5 = 12 * tt
    fusion_edges = (22 * tt - v) // 3
    ports = 4 * tt - 2 * fusion_edges
    chi5 = v - e + f5
    chi_closed = chi5 + ports
    return CountSummary(
        v=v,
        e=e,
        f5=f5,
        f_all=f5,
        ports=ports,
        genus_paper=None if chi5 % 2 else 1 - chi5 // 2,
        genus_embedding=None if chi_closed % 2 else 1 - chi_closed // 2,
        tt=tt,
    )


@dataclass(frozen=True)
class AssembledStructure:
    params: StructureParams
    skeleton: Skeleton
    map: CombMap

    @property
    def tt(self) -> int:
        return self.skeleton.vertex_count


@lru_cache(maxsize=32)
def build_structure(params: StructureParams) -> AssembledStructure:
    """Skeleton plus assembled map for one family member."""
    if params.kind == "M":
        sk = skeleton_dendrimer(params.m)
    elif params.kind == "Ulin":
        sk = skeleton_chain(params.u)
    elif params.kind == "Ucyc":
        sk = skeleton_cycle(params.u)
    else:
        sk = skeleton_12D()
    return AssembledStructure(params, sk, assemble(sk))
