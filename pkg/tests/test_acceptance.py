"""End-to-end acceptance run: ten criteria, one printed line each."""

import contextlib
import json
import random
import string
import time

import pytest

from pentatori import cli
from pentatori.assembly import (
    StructureParams,
    build_structure,
    skeleton_12D,
)
from pentatori.closedform import CheckItem, ValidationReport, cross_validate, discrepancy_notes
from pentatori.dsl import ParseError, format_spec, parse
from pentatori.mapops import CENTER, p4_quadrangulate, p4_selection, truncate_vertices
from pentatori.mapops import build_monomer, open_faces
from pentatori.mapops import _truncate_with_faces
from pentatori.omega import ci, co_cuts, codistant, omega, strip_partition
from pentatori.polymap import SimpleGraph, degree_histogram, seed_tetrahedron, summarize
from pentatori.ringbasis import chordless_cycles

from conftest import sweep_params


@contextlib.contextmanager
def criterion(capsys, cid: str, detail: str):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"[acceptance] {cid} FAIL  {detail}")
        raise
    dt = time.perf_counter() - t0
    with capsys.disabled():
        print(f"[acceptance] {cid} PASS  {detail} ({dt:.2f}s)")


def test_c01_monomer_pipeline(capsys):
    with criterion(capsys, "c01", "monomer pipeline and counts"):
        t0 = time.perf_counter()
        seed = seed_tetrahedron()
        quad = p4_quadrangulate(seed)
        cut, walks = _truncate_with_faces(quad, p4_selection(seed, CENTER))
        mono = open_faces(cut, walks)
        took = time.perf_counter() - t0
        assert took < 1.0, f"pipeline took {took:.2f}s"
        s = summarize(mono)
        assert (s.v, s.e, s.f5, s.ports) == (22, 36, 12, 4)
        assert s.genus_paper == 2 and s.genus_embedding == 0
        assert degree_histogram(mono) == {3: 16, 4: 6}
        assert mono == build_monomer().map
        assert mono.open_ports == (
            (10, 12, 11),
            (13, 15, 14),
            (16, 18, 17),
            (19, 21, 20),
        )


def test_c02_assembled_counts(capsys):
    with criterion(capsys, "c02", "assembled structure counts"):
        t0 = time.perf_counter()
        expect_v = {
            "M(5,0)": 98,
            "M(12,1)": 228,
            "M(15,4)": 276,
            "M(17,6)": 308,
            "Ulin(1)": 350,
            "Ulin(2)": 605,
            "Ucyc(6)": 1530,
            "MT12U": 2170,
        }
        for label, v in expect_v.items():
            params = next(p for p in sweep_params() if p.label() == label)
            assert build_structure(params).map.vertex_count == v, label

        u1 = summarize(build_structure(StructureParams.linear(1)).map)
        assert (u1.v, u1.e, u1.f5) == (350, 630, 240)
        assert u1.genus_paper == 21

        big = summarize(build_structure(StructureParams.mt12u()).map, tt=130)
        assert (big.tt, big.v, big.e, big.f5) == (130, 2170, 3990, 1560)
        assert big.genus_paper == 131

        cyc = summarize(build_structure(StructureParams.cyclic(6)).map)
        assert cyc.v == 1530
        notes = discrepancy_notes(StructureParams.cyclic(6))
        assert notes and notes[0]["published"] == 1536

        sk = skeleton_12D()
        assert (sk.vertex_count, sk.edge_count, len(sk.faces)) == (130, 230, 114)

        took = time.perf_counter() - t0
        assert took < 10.0, f"counts took {took:.2f}s"


RMAX5_TABLE = {
    "M(1,0)": ("36x^1", 1260),
    "M(3,0)": ("102x^1", 10302),
    "M(4,0)": ("135x^1", 18090),
    "M(5,0)": ("168x^1", 28056),
    "Ulin(1)": ("630x^1", 396270),
    "Ulin(3)": ("1560x^1", 2432040),
    "Ulin(4)": ("2025x^1", 4098600),
    "Ucyc(6)": ("2790x^1", 7781310),
    "MT12U": ("3990x^1", 15916110),
}

RMAX6_TABLE = {
    "M(1,0)": ("24x^1 + 4x^3", 1236),
    "M(5,0)": ("108x^1 + 20x^3", 27936),
    "M(17,6)": ("342x^1 + 68x^3", 297162),
    "Ulin(1)": ("390x^1 + 80x^3", 395790),
    "Ulin(3)": ("960x^1 + 200x^3", 2430840),
    "Ulin(4)": ("1245x^1 + 260x^3", 4097040),
    "Ucyc(6)": ("1710x^1 + 360x^3", 7779150),
    "MT12U": ("2430x^1 + 520x^3", 15912990),
}


def _check_table(table: dict, rmax: int, budget_small: float, budget_large: float):
    by_label = {p.label(): p for p in sweep_params()}
    for label, (text, ci_value) in table.items():
        g = build_structure(by_label[label]).map.graph
        t0 = time.perf_counter()
        poly = omega(g, rmax=rmax)
        took = time.perf_counter() - t0
        budget = budget_large if label == "MT12U" else budget_small
        assert took < budget, f"{label} rmax={rmax} took {took:.2f}s"
        assert poly.text() == text, (label, rmax, poly.text())
        assert ci(poly) == ci_value, (label, rmax, ci(poly))


def test_c03_strip_polynomials_pentagon_rings(capsys):
    with criterion(capsys, "c03", "strip polynomials, pentagon rings only"):
        _check_table(RMAX5_TABLE, 5, budget_small=5.0, budget_large=60.0)


def test_c04_strip_polynomials_with_hexagon_rings(capsys):
    with criterion(capsys, "c04", "strip polynomials with size-6 rings"):
        t0 = time.perf_counter()
        _check_table(RMAX6_TABLE, 6, budget_small=5.0, budget_large=60.0)
        took = time.perf_counter() - t0
        assert took < 300.0, f"table took {took:.2f}s"


def test_c05_closed_form_cross_validation(capsys, built_structures, basis_at_8):
    with criterion(capsys, "c05", "closed forms vs construction, full sweep"):
        for params in sweep_params():
            for rmax in (5, 6):
                report = cross_validate(params, rmax=rmax)
                assert report.passed, (params.label(), rmax, report.failures())


def test_c06_partition_exactness(capsys, built_structures, basis_at_8):
    with criterion(capsys, "c06", "strip classes partition every edge set"):
        for label, built in built_structures.items():
            g = built.map.graph
            wide = basis_at_8[label]
            for rmax in range(3, 9):
                part = strip_partition(g, wide.restrict(rmax))
                edges = sorted(e for cls in part.classes for e in cls)
                assert edges == sorted(g.edges), (label, rmax)
                poly = part.polynomial()
                assert poly.derivative_at_one(1) == g.edge_count, (label, rmax)


def test_c07_index_identity_two_routes(capsys, built_structures, basis_at_8):
    with criterion(capsys, "c07", "index identity on random graphs and all structures"):
        rng = random.Random(33)
        checked = 0
        while checked < 100:
            n = rng.randint(4, 11)
            order = list(range(n))
            rng.shuffle(order)
            edges = set(zip(order, order[1:]))
            for a in range(n):
                for b in range(a + 1, n):
                    if rng.random() < 0.25:
                        edges.add((a, b))
            g = SimpleGraph.from_edges(n, edges)
            part = strip_partition(g, chordless_cycles(g, 6))
            assert ci(part.polynomial()) == g.edge_count**2 - sum(
                s * s for s in part.sizes()
            )
            checked += 1
        for label, built in built_structures.items():
            g = built.map.graph
            for rmax in (5, 6):
                part = strip_partition(g, basis_at_8[label].restrict(rmax))
                assert ci(part.polynomial()) == g.edge_count**2 - sum(
                    s * s for s in part.sizes()
                ), (label, rmax)


def test_c08_codistance_reference(capsys, cube_map, petersen, monomer):
    with criterion(capsys, "c08", "codistance classes vs brute force"):
        def brute(g: SimpleGraph):
            rel = {
                (e, f): codistant(g, e, f)
                for e in g.edges
                for f in g.edges
            }
            parent = {e: e for e in g.edges}

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for (e, f), ok in rel.items():
                if ok:
                    re, rf = find(e), find(f)
                    if re != rf:
                        parent[re] = rf
            comps = {}
            for e in g.edges:
                comps.setdefault(find(e), set()).add(e)
            classes = {frozenset(c) for c in comps.values()}
            transitive = all(
                {f for f in g.edges if rel[(e, f)]} == comp
                for comp in classes
                for e in comp
            )
            return classes, transitive

        graphs = {
            "C4": SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
            "C5": SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]),
            "C6": SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)]),
            "cube": cube_map.graph,
            "petersen": petersen,
            "monomer": monomer.map.graph,
        }
        for name, g in graphs.items():
            got = co_cuts(g)
            classes, transitive = brute(g)
            assert {frozenset(c) for c in got.classes} == classes, name
            assert got.transitive == transitive, name
        mono = co_cuts(monomer.map.graph)
        assert sorted(len(c) for c in mono.classes) == [1] * 24 + [3] * 4
        assert mono.transitive


def test_c09_cyclic_chain_reports_both_counts(capsys):
    with criterion(capsys, "c09", "cyclic chain exposes published figure"):
        code = cli.main(["counts", "Ucyc(6)"])
        out = capsys.readouterr().out
        assert code == 0
        assert "v: 1530" in out and "1536" in out
        code = cli.main(["counts", "Ucyc(6)", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["v"] == 1530
        note = payload["notes"][0]
        assert note["code"] == "published-v-discrepancy"
        assert note["constructed"] == 1530 and note["published"] == 1536


def test_c10_parser_and_exit_codes(capsys, monkeypatch):
    with criterion(capsys, "c10", "spec language round-trip, fuzz, exit codes"):
        rng = random.Random(7)
        forms = ["MT12U", "tt", "T", "D", "P4(T)", "TrsC(P4(T))", "Op(TrsC(P4(T)))"]
        forms += [f"M({m},{max(0, m - 11)})" for m in range(1, 18)]
        forms += [f"Ulin({rng.randint(1, 99)})" for _ in range(40)]
        forms += [f"Ucyc({rng.randint(6, 99)})" for _ in range(40)]
        forms += ["P4(P4(D))", "TrsC(P4(P4(T)))", "Op(TrsC(P4(D)))"]
        for text in forms:
            ast = parse(text)
            assert parse(format_spec(ast)) == ast, text

        alphabet = string.ascii_letters + string.digits + "(), \t"
        for _ in range(300):
            junk = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 25)))
            try:
                parse(junk)
            except ParseError:
                pass

        assert cli.main(["verify", "M(3,0)"]) == 0
        capsys.readouterr()
        assert cli.main(["counts", "M(2,)"]) == 2
        capsys.readouterr()
        assert cli.main(["counts", "Ucyc(2)"]) == 2
        capsys.readouterr()

        broken = ValidationReport(
            label="M(3,0)", rmax=6, items=(CheckItem("v", 1, 2),)
        )
        monkeypatch.setattr(cli, "cross_validate", lambda params, rmax: broken)
        assert cli.main(["verify", "M(3,0)"]) == 1
        capsys.readouterr()
        monkeypatch.setattr(
            cli, "realize", lambda spec: (_ for _ in ()).throw(RuntimeError("boom"))
        )
        assert cli.main(["counts", "M(1,0)"]) == 3
        capsys.readouterr()
