import pytest
from hypothesis import given, settings

from journal_axioms.axioms import (
    certify_impossibility,
    check_ia,
    check_sc_method,
    validate_certificate,
)
from journal_axioms.core import Problem
from journal_axioms.instances import tied_cycle
from journal_axioms.methods import flat, least_squares, net_sum
from journal_axioms.sc import WeakOrder

from conftest import half_grid_problems, tournament_problems


class TestIa:
    def test_least_squares_strict(self, ex41):
        vs = check_ia(least_squares, ex41, "strict")
        hit = [v for v in vs if v.merge == (2, 3) and v.pair == (0, 1)]
        assert len(hit) == 1
        assert (hit[0].before, hit[0].after) == (">", "=")

    def test_least_squares_weak_gap(self, ex41):
        vs = check_ia(least_squares, ex41, "weak")
        assert not [v for v in vs if v.merge == (2, 3) and set(v.pair) == {0, 1}]

    def test_flat(self, ex31, ex41):
        for p in (ex31, ex41):
            assert check_ia(flat, p, "strict") == []
            assert check_ia(flat, p, "weak") == []

    def test_too_small(self):
        with pytest.raises(ValueError):
            check_ia(flat, Problem.zeros(2))

    def test_weak_violation_shape(self):
        p = Problem.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        for v in check_ia(net_sum, p, "weak"):
            assert v.before in (">", "=") and v.after == "<"

    @settings(max_examples=40, deadline=None)
    @given(half_grid_problems(min_n=3, max_n=4))
    def test_weak_subset_of_strict(self, p):
        for method in (least_squares, net_sum):
            weak = {(v.merge, frozenset(v.pair)) for v in check_ia(method, p, "weak")}
            strict = {(v.merge, frozenset(v.pair)) for v in check_ia(method, p, "strict")}
            assert weak <= strict


class TestScMethod:
    def test_flat_fails(self, ex31):
        v = check_sc_method(flat, ex31)
        assert v is not None and v.pair == (0, 3)

    def test_least_squares_passes(self, ex31, ex41):
        assert check_sc_method(least_squares, ex31) is None
        assert check_sc_method(least_squares, ex41) is None

    @settings(max_examples=60, deadline=None)
    @given(tournament_problems(max_n=4))
    def test_least_squares_self_consistent(self, p):
        assert check_sc_method(least_squares, p) is None


class TestCertificate:
    def test_theorem(self, ex41):
        cert = certify_impossibility(ex41, ("J1", "J2"), ("J3", "J4"))
        assert cert is not None
        assert cert.before_relation == ">" and cert.after_relation == "="
        assert all(o.strictly_above(0, 1) for o in cert.before_set)
        assert cert.after_set == (WeakOrder(((0, 1, 2),)),)
        assert not cert.refutes_weak_ia
        assert validate_certificate(cert)

    def test_no_certificate_when_tied_before(self, ex31):
        assert certify_impossibility(ex31, ("J2", "J3"), ("J1", "J4")) is None

    def test_symmetric_cycle(self):
        p = tied_cycle(4)
        for target, merge in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((1, 2), (0, 3))):
            assert certify_impossibility(p, target, merge) is None

    def test_overlap(self, ex41):
        with pytest.raises(ValueError):
            certify_impossibility(ex41, ("J1", "J3"), ("J3", "J4"))

    def test_tampered_certificate_fails(self, ex41):
        import dataclasses

        cert = certify_impossibility(ex41, ("J1", "J2"), ("J3", "J4"))
        bad = dataclasses.replace(cert, before_set=cert.before_set[1:])
        assert not validate_certificate(bad)
