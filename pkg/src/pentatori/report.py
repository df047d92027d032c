"""Report generation: a delimited summary table plus rendered figures."""

from __future__ import annotations

import csv
import os
from typing import Iterable, Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .assembly import StructureParams, build_structure
from .closedform import cross_validate, discrepancy_notes
from .omega import ci, omega
from .polymap import summarize
from .ringbasis import chordless_cycles

RMAX_COLUMNS = (5, 6)


def default_sweep() -> tuple[StructureParams, ...]:
    out = [StructureParams.dendrimer(m) for m in range(1, 18)]
    out += [StructureParams.linear(u) for u in (1, 2, 3, 4)]
    out += [StructureParams.cyclic(u) for u in (6, 7, 8)]
    out.append(StructureParams.mt12u())
    return tuple(out)


def write_report(
    out_dir: str, structures: Optional[Iterable[StructureParams]] = None
) -> list[str]:
    """Write summary.csv and the figures into out_dir; returns written paths."""
    sweep = tuple(structures) if structures is not None else default_sweep()
    if not sweep:
        raise ValueError("empty structure sweep")
    os.makedirs(out_dir, exist_ok=True)
    written = []

    rows = []
    polys = {}
    for params in sweep:
        built = build_structure(params)
        s = summarize(built.map, tt=built.tt)
        basis = chordless_cycles(built.map.graph, 6)
        for rmax in RMAX_COLUMNS:
            poly = omega(built.map.graph, rmax=rmax, basis=basis)
            polys[(params.label(), rmax)] = poly
            report = cross_validate(params, rmax=rmax)
            notes = ";".join(n["code"] for n in discrepancy_notes(params))
            rows.append(
                [
                    params.label(),
                    rmax,
                    s.tt,
                    s.v,
                    s.e,
                    s.f5,
                    s.genus_paper,
                    poly.text(),
                    ci(poly),
                    "yes" if report.passed else "no",
                    notes,
                ]
            )

    csv_path = os.path.join(out_dir, "summary.csv")
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            [
                "structure",
                "rmax",
                "tt",
                "v",
                "e",
                "f5",
                "genus",
                "omega",
                "ci",
                "matches_closed_form",
                "notes",
            ]
        )
        writer.writerows(rows)
    written.append(csv_path)

    written.append(_fig_ci_growth(out_dir, sweep, polys))
    written.append(_fig_strip_composition(out_dir, sweep, polys))
    written.append(_fig_ring_census(out_dir, sweep))
    return [p for p in written if p is not None]


def _fig_ci_growth(out_dir, sweep, polys) -> str:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for rmax in RMAX_COLUMNS:
        labels = [p.label() for p in sweep]
        values = [ci(polys[(lab, rmax)]) for lab in labels]
        ax.plot(range(len(labels)), values, marker="o", label=f"rmax = {rmax}")
    ax.set_xticks(range(len(sweep)))
    ax.set_xticklabels([p.label() for p in sweep], rotation=75, fontsize=7)
    ax.set_yscale("log")
    ax.set_ylabel("strip index (log scale)")
    ax.set_title("Strip index growth across the sweep")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, "ci_growth.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _fig_strip_composition(out_dir, sweep, polys) -> str:
    labels = [p.label() for p in sweep]
    ones = [polys[(lab, 6)].coefficient(1) for lab in labels]
    threes = [polys[(lab, 6)].coefficient(3) for lab in labels]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = range(len(labels))
    ax.bar(xs, ones, label="strips of size 1")
    ax.bar(xs, threes, bottom=ones, label="strips of size 3")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=75, fontsize=7)
    ax.set_ylabel("strip count (rmax = 6)")
    ax.set_title("Strip partition composition")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, "strip_composition.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _fig_ring_census(out_dir, sweep) -> str:
    params = sweep[-1]
    built = build_structure(params)
    census = chordless_cycles(built.map.graph, 8).census()
    sizes = sorted(census)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar([str(s) for s in sizes], [census[s] for s in sizes])
    ax.set_xlabel("ring size")
    ax.set_ylabel("chordless rings")
    ax.set_title(f"Ring census of {params.label()} (sizes 3..8)")
    fig.tight_layout()
    path = os.path.join(out_dir, "ring_census.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
