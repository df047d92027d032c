import pytest

from pentatori.assembly import StructureParams
from pentatori.closedform import (
    CheckItem,
    ci_closed,
    counts_closed,
    cross_validate,
    discrepancy_notes,
    evaluate_closed,
    omega_closed,
)
from pentatori.omega import ci, omega
from pentatori.polymap import MapError

from conftest import sweep_params


class TestClosedForms:
    def test_rmax_gate(self):
        p = StructureParams.dendrimer(1)
        for bad in (3, 4, 7, 8):
            with pytest.raises(MapError, match="closed forms"):
                omega_closed(p, bad)

    def test_monomer_polynomials(self):
        p = StructureParams.dendrimer(1)
        assert omega_closed(p, 5).text() == "36x^1"
        assert omega_closed(p, 6).text() == "24x^1 + 4x^3"
        assert ci_closed(p, 5) == 1260
        assert ci_closed(p, 6) == 1236

    def test_counts_closed_sample(self):
        assert counts_closed(StructureParams.dendrimer(5)) == (5, 98)
        assert counts_closed(StructureParams.dendrimer(12)) == (12, 228)
        assert counts_closed(StructureParams.linear(2)) == (35, 605)
        assert counts_closed(StructureParams.cyclic(6)) == (90, 1530)
        assert counts_closed(StructureParams.mt12u()) == (130, 2170)

    def test_ci_closed_agrees_with_its_polynomial(self):
        for params in sweep_params():
            for rmax in (5, 6):
                assert ci_closed(params, rmax) == ci(omega_closed(params, rmax)), (
                    params.label(),
                    rmax,
                )

    def test_evaluate_closed_fields(self):
        res = evaluate_closed(StructureParams.mt12u(), 6)
        assert res.label == "MT12U"
        assert (res.tt, res.v, res.e, res.f5) == (130, 2170, 3990, 1560)
        assert res.genus == 131
        assert res.omega.text() == "2430x^1 + 520x^3"
        assert res.ci == 15912990


class TestCrossValidation:
    def test_full_sweep_passes(self, built_structures, basis_at_8):
        for params in sweep_params():
            for rmax in (5, 6):
                report = cross_validate(params, rmax=rmax)
                assert report.passed, (params.label(), rmax, report.failures())

    def test_construction_disagrees_with_published_cyclic_counts(self):
        notes = discrepancy_notes(StructureParams.cyclic(6))
        assert len(notes) == 1
        note = notes[0]
        assert note["code"] == "published-v-discrepancy"
        assert note["constructed"] == 1530
        assert note["published"] == 1536
        report = cross_validate(StructureParams.cyclic(6))
        assert report.passed  # construction is self-consistent
        assert report.notes == notes

    def test_no_notes_elsewhere(self):
        assert discrepancy_notes(StructureParams.dendrimer(5)) == ()
        assert discrepancy_notes(StructureParams.mt12u()) == ()

    def test_mismatch_reporting_shape(self):
        bad = CheckItem("v", computed=1530, expected=1536)
        good = CheckItem("e", computed=2790, expected=2790)
        assert not bad.ok and good.ok

    def test_measured_side_matches_direct_computation(self, built_structures):
        built = built_structures["M(5,0)"]
        poly = omega(built.map.graph, rmax=6)
        res = evaluate_closed(built.params, 6)
        assert poly == res.omega
        assert ci(poly) == res.ci
