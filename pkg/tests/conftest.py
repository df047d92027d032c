import networkx as nx
import pytest

from pentatori.assembly import StructureParams, build_structure
from pentatori.mapops import build_monomer
from pentatori.polymap import CombMap, SimpleGraph
from pentatori.ringbasis import chordless_cycles


def sweep_params() -> tuple[StructureParams, ...]:
    """Every structure the closed forms cover."""
    out = [StructureParams.dendrimer(m) for m in range(1, 18)]
    out += [StructureParams.linear(u) for u in range(1, 7)]
    out += [StructureParams.cyclic(u) for u in (6, 7, 8)]
    out.append(StructureParams.mt12u())
    return tuple(out)


def to_nx(graph: SimpleGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    g.add_edges_from(graph.edges)
    return g


@pytest.fixture(scope="session")
def monomer():
    return build_monomer()


@pytest.fixture(scope="session")
def cube_map() -> CombMap:
    faces = [
        (0, 1, 2, 3),
        (7, 6, 5, 4),
        (0, 4, 5, 1),
        (1, 5, 6, 2),
        (2, 6, 7, 3),
        (3, 7, 4, 0),
    ]
    return CombMap.from_faces(8, faces)


@pytest.fixture(scope="session")
def petersen() -> SimpleGraph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return SimpleGraph.from_edges(10, edges)


@pytest.fixture(scope="session")
def built_structures():
    """label -> assembled structure, shared across the whole run."""
    return {p.label(): build_structure(p) for p in sweep_params()}


@pytest.fixture(scope="session")
def basis_at_8(built_structures):
    """label -> chordless rings up to size 8, computed once."""
    return {
        label: chordless_cycles(s.map.graph, 8)
        for label, s in built_structures.items()
    }
