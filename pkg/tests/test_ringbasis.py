import itertools
import random

import networkx as nx
import pytest

from pentatori.polymap import MapError, SimpleGraph, undirected_cycle_key
from pentatori.ringbasis import Ring, RingBasis, chordless_cycles

from conftest import to_nx


def naive_chordless(graph: SimpleGraph, rmax: int) -> set[tuple[int, ...]]:
    """Exhaustive reference: every vertex subset that induces a cycle."""
    adj = [set(a) for a in graph.adjacency]
    found = set()
    for size in range(3, rmax + 1):
        for combo in itertools.combinations(range(graph.vertex_count), size):
            inside = set(combo)
            if any(len(adj[v] & inside) != 2 for v in combo):
                continue
            # degree-2 induced subgraph; connected iff it is a single cycle
            walk = [combo[0]]
            prev = None
            while True:
                nxt = [w for w in adj[walk[-1]] & inside if w != prev]
                prev = walk[-1]
                walk.append(nxt[0])
                if walk[-1] == combo[0]:
                    break
            if len(walk) - 1 == size:
                found.add(undirected_cycle_key(walk[:-1]))
    return found


def nx_chordless(graph: SimpleGraph, rmax: int) -> set[tuple[int, ...]]:
    return {
        undirected_cycle_key(c)
        for c in nx.chordless_cycles(to_nx(graph), length_bound=rmax)
        if len(c) >= 3
    }


def random_connected_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    order = list(range(n))
    rng.shuffle(order)
    edges = set(zip(order, order[1:]))  # spanning path keeps it connected
    edges.update(
        (a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p
    )
    return SimpleGraph.from_edges(n, edges)


class TestEnumerator:
    def test_matches_exhaustive_reference_on_random_graphs(self):
        rng = random.Random(71)
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(4, 9), rng.uniform(0.2, 0.5))
            rmax = rng.randint(3, 9)
            ours = {r.vertices for r in chordless_cycles(g, rmax).rings}
            assert ours == naive_chordless(g, rmax)

    def test_matches_networkx_on_monomer(self, monomer):
        for rmax in (3, 5, 6, 8):
            basis = chordless_cycles(monomer.map.graph, rmax)
            ours = {undirected_cycle_key(r.vertices) for r in basis.rings}
            assert ours == nx_chordless(monomer.map.graph, rmax)

    def test_monomer_census(self, monomer):
        g = monomer.map.graph
        assert chordless_cycles(g, 5).census() == {3: 4, 5: 12}
        assert chordless_cycles(g, 6).census() == {3: 4, 5: 12, 6: 4}
        assert chordless_cycles(g, 8).census() == {3: 4, 5: 12, 6: 4, 7: 12, 8: 3}

    def test_dodecahedron_census(self):
        from pentatori.polymap import seed_dodecahedron

        g = seed_dodecahedron().graph
        assert chordless_cycles(g, 6).census() == {5: 12}

    def test_first_assembly_census(self, built_structures):
        g = built_structures["Ulin(1)"].map.graph
        census = chordless_cycles(g, 5).census()
        # 30 junction triangles + 20 port triangles survive the fusions
        assert census == {3: 50, 5: 240}

    def test_deterministic_order(self, monomer):
        g = monomer.map.graph
        a = chordless_cycles(g, 8)
        b = chordless_cycles(g, 8)
        assert a.rings == b.rings
        assert a.rings == tuple(
            sorted(a.rings, key=lambda r: (r.size, r.vertices))
        )

    def test_canonical_vertex_order(self, monomer):
        for ring in chordless_cycles(monomer.map.graph, 8).rings:
            w = ring.vertices
            assert w[0] == min(w)
            assert w[1] < w[-1]


class TestBasisApi:
    def test_bounds(self, monomer):
        g = monomer.map.graph
        for bad in (2, 13, 0, -1):
            with pytest.raises(MapError, match="rmax"):
                chordless_cycles(g, bad)

    def test_disconnected_graph_rejected(self):
        g = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
        with pytest.raises(MapError, match="connected"):
            chordless_cycles(g, 6)

    def test_restrict_narrows_only(self, monomer):
        basis = chordless_cycles(monomer.map.graph, 8)
        assert basis.restrict(5).census() == {3: 4, 5: 12}
        assert basis.restrict(8).rings == basis.rings
        with pytest.raises(MapError, match="widen"):
            basis.restrict(9)

    def test_ring_edges_wrap(self):
        r = Ring((0, 2, 5, 3))
        assert r.size == 4
        assert set(r.edges()) == {(0, 2), (2, 5), (3, 5), (0, 3)}

    def test_census_copies(self, monomer):
        basis = chordless_cycles(monomer.map.graph, 5)
        c = basis.census()
        c[3] = 99
        assert basis.census() == {3: 4, 5: 12}
