import pytest

from journal_axioms.core import classify
from journal_axioms.instances import example_4_1, tied_cycle
from journal_axioms.methods import flat, least_squares
from journal_axioms.search import FamilySpec, enumerate_problems, sweep_impossibility, sweep_violations


class TestEnumerate:
    def test_counts(self):
        assert len(list(enumerate_problems(FamilySpec(3)))) == 64
        assert len(list(enumerate_problems(FamilySpec(1)))) == 1

    def test_n4_contains_example(self):
        family = list(enumerate_problems(FamilySpec(4)))
        assert len(family) == 4096
        assert example_4_1() in family
        assert len(set(family)) == 4096

    def test_balanced_filter(self):
        family = list(enumerate_problems(FamilySpec(2, frozenset({"balanced"}))))
        assert len(family) == 4
        assert all(classify(p).balanced for p in family)

    def test_constraints_hold(self):
        spec = FamilySpec(3, frozenset({"balanced", "loopless"}))
        family = list(enumerate_problems(spec))
        assert family and all(spec.admits(p) for p in family)
        # in a 3-journal tournament balance means all three pairs present or all absent
        assert len(family) == 1 + 3**3

    def test_isomorphism_reduction(self):
        full = list(enumerate_problems(FamilySpec(3)))
        reduced = list(enumerate_problems(FamilySpec(3, up_to_isomorphism=True)))
        assert len(reduced) < len(full)
        assert reduced == list(enumerate_problems(FamilySpec(3, up_to_isomorphism=True)))

    def test_limits(self):
        with pytest.raises(ValueError):
            list(enumerate_problems(FamilySpec(6)))
        with pytest.raises(ValueError):
            FamilySpec(3, frozenset({"bogus"}))


class TestSweeps:
    def test_flat_ia_n3(self):
        assert sweep_violations(flat, FamilySpec(3), "ia-strict") == []

    def test_parallel_matches_serial(self):
        serial = sweep_violations(least_squares, FamilySpec(3), "ia-strict")
        parallel = sweep_violations(least_squares, FamilySpec(3), "ia-strict", workers=2)
        assert serial == parallel

    def test_small_family_has_no_certificates(self):
        assert sweep_impossibility(FamilySpec(2)) == []
        assert sweep_impossibility(FamilySpec(3)) == []

    @pytest.mark.slow
    def test_least_squares_ia_n4(self):
        reports = sweep_violations(least_squares, FamilySpec(4), "ia-strict")
        assert reports
        assert any(r.problem == example_4_1() for r in reports)

    @pytest.mark.slow
    def test_impossibility_n4(self):
        spec = FamilySpec(4, frozenset({"extremal", "unweighted", "loopless"}))
        certs = sweep_impossibility(spec)
        assert any(c.problem == example_4_1() and c.target == (0, 1) and c.merge == (2, 3) for c in certs)
        cycle = tied_cycle(4)
        assert not any(c.problem == cycle for c in certs)
