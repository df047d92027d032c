"""Closed-form evaluators and graph-vs-formula cross validation.

The formulas here are evaluated directly from the family parameters and
never touch the graph engine, so agreement between the two routes is a
real consistency check rather than a tautology.

For the cyclic chains the published vertex-count table used 256u where
the constructed family gives 255u (already at u = 6: 1530 built versus
1536 tabulated).  The evaluators use 255u and every cyclic-chain report
carries a machine-readable note recording the published figure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .assembly import StructureParams, build_structure, predict_counts
from .omega import OmegaPolynomial, ci, omega
from .polymap import MapError, genus_paper, summarize

PUBLISHED_UCYC_V_PER_CELL = 256
CONSTRUCTED_UCYC_V_PER_CELL = 255

_MT_DOUBLE_JOINTS = 30
_MT_TRIPLE_JOINTS = 20


def _check_rmax(rmax: int) -> None:
    if rmax not in (5, 6):
        raise MapError(f"closed forms cover ring caps 5 and 6, got {rmax}")


def omega_closed(params: StructureParams, rmax: int) -> OmegaPolynomial:
    """Strip polynomial straight from the family parameters."""
    _check_rmax(rmax)
    k, m, r, u = params.kind, params.m, params.r, params.u
    d, t = _MT_DOUBLE_JOINTS, _MT_TRIPLE_JOINTS
    if rmax == 5:
        if k == "M":
            terms = {1: 36 * m - 3 * (m + r - 1)}
        elif k == "Ulin":
            terms = {1: 465 * u + 165}
        elif k == "Ucyc":
            terms = {1: 465 * u}
        else:
            terms = {1: 133 * d}
    else:
        if k == "M":
            terms = {1: 24 * m - 3 * (m + r - 1), 3: 4 * m}
        elif k == "Ulin":
            terms = {1: 285 * u + 105, 3: 60 * u + 20}
        elif k == "Ucyc":
            terms = {1: 285 * u, 3: 60 * u}
        else:
            terms = {1: 81 * d, 3: 26 * t}
    return OmegaPolynomial(tuple(sorted(terms.items())))


def ci_closed(params: StructureParams, rmax: int) -> int:
    """CI straight from the family parameters (factored forms)."""
    _check_rmax(rmax)
    k, m, r, u = params.kind, params.m, params.r, params.u
    if rmax == 5:
        if k == "M":
            return 3 * (11 * m - r + 1) * (33 * m - 3 * r + 2)
        if k == "Ulin":
            return 15 * (31 * u + 11) * (465 * u + 164)
        if k == "Ucyc":
            return 465 * u * (465 * u - 1)
        return ci(omega_closed(params, 5))
    if k == "M":
        return (33 * m - 3 * r + 3) ** 2 - 3 * (19 * m - r + 1)
    if k == "Ulin":
        return (465 * u + 165) ** 2 - 825 * u - 285
    if k == "Ucyc":
        return 75 * u * (2883 * u - 11)
    return ci(omega_closed(params, 6))


def counts_closed(params: StructureParams) -> tuple[int, int]:
    """(tt, v) from the family parameters."""
    c = predict_counts(params)
    return c.tt, c.v


@dataclass(frozen=True)
class CheckItem:
    name: str
    computed: object
    expected: object

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


@dataclass(frozen=True)
class FormulaResult:
    """Everything the closed forms predict for one structure."""

    label: str
    rmax: int
    tt: int
    v: int
    e: int
    f5: int
    genus: int
    omega: OmegaPolynomial
    ci: int


def evaluate_closed(params: StructureParams, rmax: int) -> FormulaResult:
    poly = omega_closed(params, rmax)
    tt, v = counts_closed(params)
    e = poly.derivative_at_one(1)
    f5 = 12 * tt
    return FormulaResult(
        label=params.label(),
        rmax=rmax,
        tt=tt,
        v=v,
        e=e,
        f5=f5,
        genus=genus_paper(v, e, f5),
        omega=poly,
        ci=ci_closed(params, rmax),
    )


@dataclass(frozen=True)
class ValidationReport:
    label: str
    rmax: int
    items: tuple[CheckItem, ...]
    notes: tuple[dict, ...] = ()

    @property
    def passed(self) -> bool:
        return all(item.ok for item in self.items)

    def failures(self) -> tuple[CheckItem, ...]:
        return tuple(item for item in self.items if not item.ok)


def discrepancy_notes(params: StructureParams) -> tuple[dict, ...]:
    """Known published-versus-constructed count mismatches for a family."""
    if params.kind == "Ucyc":
        return (
            {
                "code": "published-v-discrepancy",
                "quantity": "v",
                "constructed": CONSTRUCTED_UCYC_V_PER_CELL * params.u,
                "published": PUBLISHED_UCYC_V_PER_CELL * params.u,
                "detail": "published table scales v by 256 per cell; the"
                          " constructed family gives 255 per cell",
            },
        )
    return ()


def cross_validate(params: StructureParams, rmax: int = 6) -> ValidationReport:
    """Build the structure, compute counts/omega/CI, compare to formulas."""
    _check_rmax(rmax)
    built = build_structure(params)
    counted = summarize(built.map, tt=built.tt)
    poly = omega(built.map.graph, rmax)
    closed = evaluate_closed(params, rmax)
    items = (
        CheckItem("tt", counted.tt, closed.tt),
        CheckItem("v", counted.v, closed.v),
        CheckItem("e", counted.e, closed.e),
        CheckItem("f5", counted.f5, closed.f5),
        CheckItem("genus", counted.genus_paper, closed.genus),
        CheckItem("omega", poly.terms, closed.omega.terms),
        CheckItem("ci", ci(poly), closed.ci),
    )
    return ValidationReport(params.label(), rmax, items, discrepancy_notes(params))
