"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 bad usage or bad input,
3 internal failure.  Output goes to stdout (or --out FILE); nothing else is
read or written, no environment variables, no network.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .assembly import SkeletonError, StructureParams, build_structure
from .closedform import cross_validate, discrepancy_notes
from .dsl import (
    E_CHAIN,
    NamedStructure,
    OperationChain,
    ParseError,
    StructureSpec,
    format_spec,
    parse,
)
from .mapops import (
    CENTER,
    _truncate_with_faces,
    build_monomer,
    open_faces,
    p4_quadrangulate,
    p4_selection,
)
from .omega import ci, co_cuts, omega
from .polymap import CombMap, MapError, SimpleGraph, seed_dodecahedron, seed_tetrahedron, summarize
from .ringbasis import RMAX_MAX, RMAX_MIN, chordless_cycles


@dataclass(frozen=True)
class Realized:
    """A structure spec resolved to an actual graph (and map, when one exists)."""

    label: str
    graph: SimpleGraph
    map: Optional[CombMap] = None
    params: Optional[StructureParams] = None
    tt: Optional[int] = None


def evaluate_chain(chain: OperationChain) -> CombMap:
    """Apply the operation chain innermost-first; parse() already vetted it."""
    m = seed_tetrahedron() if chain.seed == "T" else seed_dodecahedron()
    centers = None
    cuts = None
    for op in reversed(chain.ops):
        if op == "P4":
            before = m
            m = p4_quadrangulate(m)
            centers = p4_selection(before, CENTER)
            cuts = None
        elif op == "TrsC":
            if centers is None:
                raise ParseError("TrsC needs a P4 directly below it", E_CHAIN, 0)
            m, cuts = _truncate_with_faces(m, centers)
            centers = None
        else:
            if cuts is None:
                raise ParseError("Op needs a TrsC directly below it", E_CHAIN, 0)
            m = open_faces(m, cuts)
            cuts = None
    return m


def realize(spec: StructureSpec) -> Realized:
    if isinstance(spec, OperationChain):
        m = evaluate_chain(spec)
        return Realized(label=format_spec(spec), graph=m.graph, map=m)
    if spec.kind == "tt":
        m = build_monomer().map
        return Realized(label="tt", graph=m.graph, map=m, tt=1)
    if spec.kind == "M":
        params = StructureParams.dendrimer(spec.args[0])
    elif spec.kind == "Ulin":
        params = StructureParams.linear(spec.args[0])
    elif spec.kind == "Ucyc":
        params = StructureParams.cyclic(spec.args[0])
    else:
        params = StructureParams.mt12u()
    built = build_structure(params)
    return Realized(
        label=params.label(),
        graph=built.map.graph,
        map=built.map,
        params=params,
        tt=built.tt,
    )


def _load_edge_list(path: str) -> SimpleGraph:
    """Read the edge-list format written by `generate --export edgelist`."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}", "io", 0)
    rows = []
    for lineno, line in enumerate(raw.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(
                f"{path}:{lineno}: expected two integers, got {body!r}", "io", 0
            )
        rows.append((int(parts[0]), int(parts[1])))
    if not rows:
        raise ParseError(f"{path}: empty edge list", "io", 0)
    (v, e), edges = rows[0], rows[1:]
    if len(edges) != e:
        raise ParseError(
            f"{path}: header promises {e} edges, found {len(edges)}", "io", 0
        )
    try:
        return SimpleGraph.from_edges(v, edges)
    except MapError as exc:
        raise ParseError(f"{path}: {exc}", "io", 0)


def _realize_arg(spec_text: Optional[str], edges_path: Optional[str]) -> Realized:
    if edges_path is not None:
        return Realized(label=edges_path, graph=_load_edge_list(edges_path))
    return realize(parse(spec_text))


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _counts_payload(r: Realized) -> tuple[dict, tuple[dict, ...]]:
    notes = discrepancy_notes(r.params) if r.params is not None else ()
    s = summarize(r.map, tt=r.tt)
    payload = {
        "structure": r.label,
        "tt": s.tt,
        "v": s.v,
        "e": s.e,
        "f5": s.f5,
        "faces": s.f_all,
        "ports": s.ports,
        "genus": s.genus_paper,
        "genus_embedding": s.genus_embedding,
    }
    if notes:
        payload["notes"] = [dict(n) for n in notes]
    return payload, notes


def cmd_generate(args) -> int:
    r = realize(parse(args.spec))
    m = r.map
    edges = sorted(m.edges)
    if args.export == "edgelist":
        lines = [f"{m.vertex_count} {len(edges)}"]
        lines += [f"{a} {b}" for a, b in edges]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = {
            "structure": r.label,
            "v": m.vertex_count,
            "e": len(edges),
            "edges": [list(ed) for ed in edges],
            "rotation": [list(ring) for ring in m.rotation],
            "open_ports": [list(p) for p in m.open_ports],
        }
        _emit(_json_text(payload), args.out)
    return 0


def cmd_counts(args) -> int:
    r = realize(parse(args.spec))
    payload, notes = _counts_payload(r)
    if args.json:
        _emit(_json_text(payload), args.out)
        return 0
    lines = [f"structure: {r.label}"]
    if payload["tt"] is not None:
        lines.append(f"tt: {payload['tt']}")
    lines.append(f"v: {payload['v']}")
    lines.append(f"e: {payload['e']}")
    lines.append(f"f5: {payload['f5']}")
    lines.append(f"faces: {payload['faces']}")
    lines.append(f"ports: {payload['ports']}")
    gp = payload["genus"]
    lines.append(f"genus (pentagon count): {'n/a' if gp is None else gp}")
    lines.append(f"genus (embedding): {payload['genus_embedding']}")
    for note in notes:
        lines.append(
            f"note: published tables give {note['quantity']} = {note['published']}; "
            f"this construction gives {note['constructed']}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _omega_payload(r: Realized, rmax: int) -> dict:
    poly = omega(r.graph, rmax=rmax)
    if r.map is not None:
        s = summarize(r.map)
        f5, genus = s.f5, s.genus_paper
    else:
        f5 = genus = None
    return {
        "structure": r.label,
        "rmax": rmax,
        "v": r.graph.vertex_count,
        "e": r.graph.edge_count,
        "f5": f5,
        "genus": genus,
        "omega": [[s_, m_] for s_, m_ in poly.terms],
        "ci": ci(poly),
    }


def cmd_omega(args) -> int:
    r = _realize_arg(args.spec, args.edges)
    payload = _omega_payload(r, args.rmax)
    if args.json:
        _emit(_json_text(payload), args.out)
    else:
        terms = " + ".join(f"{m_}x^{s_}" for s_, m_ in payload["omega"]) or "0"
        _emit(terms + "\n", args.out)
    return 0


def cmd_ci(args) -> int:
    r = _realize_arg(args.spec, args.edges)
    payload = _omega_payload(r, args.rmax)
    if args.json:
        _emit(_json_text(payload), args.out)
    else:
        _emit(f"{payload['ci']}\n", args.out)
    return 0


def cmd_rings(args) -> int:
    r = _realize_arg(args.spec, args.edges)
    basis = chordless_cycles(r.graph, args.rmax)
    census = basis.census()
    if args.json:
        payload = {
            "structure": r.label,
            "rmax": args.rmax,
            "census": [[size, census[size]] for size in sorted(census)],
            "total": len(basis.rings),
        }
        _emit(_json_text(payload), args.out)
        return 0
    lines = [f"{size}: {census[size]}" for size in sorted(census)]
    lines.append(f"total: {len(basis.rings)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_cuts(args) -> int:
    r = _realize_arg(args.spec, args.edges)
    cuts = co_cuts(r.graph)
    sizes: dict[int, int] = {}
    for cls in cuts.classes:
        sizes[len(cls)] = sizes.get(len(cls), 0) + 1
    if args.json:
        payload = {
            "structure": r.label,
            "classes": [[list(ed) for ed in cls] for cls in cuts.classes],
            "sizes": [[size, sizes[size]] for size in sorted(sizes)],
            "transitive": cuts.transitive,
        }
        _emit(_json_text(payload), args.out)
        return 0
    lines = [f"classes: {len(cuts.classes)}"]
    lines.append("sizes: " + ", ".join(f"{n} x {sizes[n]}" for n in sorted(sizes)))
    lines.append(f"transitive: {'yes' if cuts.transitive else 'no'}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    spec = parse(args.spec)
    if isinstance(spec, OperationChain) or spec.kind == "tt":
        raise ParseError(
            "verify needs a named assembled structure (M, Ulin, Ucyc, MT12U)",
            "usage",
            0,
        )
    r = realize(spec)
    report = cross_validate(r.params, rmax=args.rmax)
    lines = []
    for item in report.items:
        if item.ok:
            lines.append(f"ok {item.name}: {item.computed}")
        else:
            lines.append(
                f"MISMATCH {item.name}: computed {item.computed}, "
                f"expected {item.expected}"
            )
    for note in report.notes:
        lines.append(f"note: {note['detail']}")
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(f"{verdict} {report.label} rmax={report.rmax} ({len(report.items)} checks)")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.passed else 1


def cmd_report(args) -> int:
    from .report import write_report

    written = write_report(args.out_dir)
    sys.stdout.write("\n".join(written) + "\n")
    return 0


def _add_rmax(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--rmax",
        type=int,
        default=6,
        metavar="N",
        help=f"largest ring size used for strips ({RMAX_MIN}..{RMAX_MAX}, default 6)",
    )


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("spec", nargs="?", help="structure spec, e.g. M(5,0) or Op(TrsC(P4(T)))")
    p.add_argument("--edges", metavar="FILE", help="edge-list file instead of a spec")


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pentatori",
        description="Assemble all-pentagon multi-tori and compute strip-based indices.",
    )
    sub = top.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("generate", help="build a structure and export its map")
    p.add_argument("spec", help="structure spec, e.g. M(5,0) or Op(TrsC(P4(T)))")
    p.add_argument(
        "--export", choices=("edgelist", "json"), default="edgelist", help="output format"
    )
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("counts", help="vertex/edge/face counts and genus")
    p.add_argument("spec", help="structure spec")
    _add_io(p)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("omega", help="strip-counting polynomial")
    _add_graph_source(p)
    _add_rmax(p)
    _add_io(p)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("ci", help="strip-based topological index")
    _add_graph_source(p)
    _add_rmax(p)
    _add_io(p)
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("rings", help="chordless ring census")
    _add_graph_source(p)
    _add_rmax(p)
    _add_io(p)
    p.set_defaults(func=cmd_rings)

    p = sub.add_parser("cuts", help="codistance edge classes")
    _add_graph_source(p)
    _add_io(p)
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("verify", help="check a structure against its closed forms")
    p.add_argument("spec", help="named structure spec (M, Ulin, Ucyc, MT12U)")
    p.add_argument("--rmax", type=int, default=6, choices=(5, 6), help="strip ring bound")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="write a summary table and figures")
    p.add_argument(
        "--out-dir", default="report", metavar="DIR", help="output directory (default: report)"
    )
    p.set_defaults(func=cmd_report)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "spec", "missing") is None and getattr(args, "edges", None) is None:
        sys.stderr.write(f"{parser.prog}: {args.command} needs a spec or --edges FILE\n")
        return 2
    if hasattr(args, "rmax") and not RMAX_MIN <= args.rmax <= RMAX_MAX:
        sys.stderr.write(f"{parser.prog}: --rmax must be {RMAX_MIN}..{RMAX_MAX}\n")
        return 2
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"{parser.prog}: {exc}\n")
        return 2
    except (MapError, SkeletonError) as exc:
        sys.stderr.write(f"{parser.prog}: internal error: {exc}\n")
        return 3
    except OSError as exc:
        sys.stderr.write(f"{parser.prog}: {exc}\n")
        return 2
    except Exception as exc:  # pragma: no cover - last resort
        sys.stderr.write(f"{parser.prog}: internal error: {exc!r}\n")
        return 3


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
