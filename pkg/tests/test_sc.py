import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from journal_axioms.core import Problem, aggregate
from journal_axioms.sc import (
    EnumerationLimitError,
    WeakOrder,
    enumerate_weak_orders,
    order_from_scores,
    sc_admissible,
    sc_admissible_set,
    sc_check_scores,
    sc_dominates,
    verify_witness,
)

from conftest import tournament_problems

TIE_ALL = WeakOrder(((0, 1, 2, 3),))


def ordered_bell(n):
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def brute_weak_orders(n):
    """Weak orders as rank vectors onto {0..k-1}, found by trying every map."""
    out = set()
    for ranks in itertools.product(range(n), repeat=n):
        if set(ranks) == set(range(max(ranks) + 1)):
            out.add(ranks)
    return out


def brute_admissible(p, order):
    """The axiom read literally for a single unweighted layer: try every bijection."""
    n = p.n
    comp = [[k for k in range(n) if k != i and p.c(i, k) + p.c(k, i) == 1] for i in range(n)]
    for i, j in itertools.permutations(range(n), 2):
        if len(comp[i]) != len(comp[j]):
            continue
        weak = strict = False
        for image in itertools.permutations(comp[j]):
            pairs = list(zip(comp[i], image))
            if all(p.c(i, k) >= p.c(j, g) and order.rank(k) <= order.rank(g) for k, g in pairs):
                weak = True
                if any(p.c(i, k) > p.c(j, g) or order.rank(k) < order.rank(g) for k, g in pairs):
                    strict = True
        if weak and order.rank(i) > order.rank(j):
            return False
        if strict and order.rank(i) >= order.rank(j):
            return False
    return True


class TestWeakOrders:
    @pytest.mark.parametrize("n, count", [(1, 1), (3, 13), (4, 75)])
    def test_counts(self, n, count):
        orders = list(enumerate_weak_orders(n))
        assert len(orders) == count == ordered_bell(n)
        assert len(set(orders)) == count
        assert {tuple(o.rank(k) for k in range(n)) for o in orders} == brute_weak_orders(n)

    def test_five(self):
        assert sum(1 for _ in enumerate_weak_orders(5)) == ordered_bell(5) == 541

    def test_limit(self):
        with pytest.raises(EnumerationLimitError):
            next(enumerate_weak_orders(8))

    def test_deterministic(self):
        assert list(enumerate_weak_orders(4)) == list(enumerate_weak_orders(4))

    def test_format(self):
        o = WeakOrder(((0,), (1, 2), (3,)))
        assert o.format(["J1", "J2", "J3", "J4"]) == "J1 ≻ (J2 ∼ J3) ≻ J4"

    def test_from_scores(self):
        assert order_from_scores([1, 0, 0, -1]) == WeakOrder(((0,), (1, 2), (3,)))
        assert order_from_scores([0.125, -0.125, 0.375, -0.375]) == WeakOrder(((2,), (0,), (1,), (3,)))
        assert order_from_scores([0.3, 0.3, 0.3]) == WeakOrder(((0, 1, 2),))
        assert order_from_scores([1.0, 1.0 + 1e-12]) == WeakOrder(((0, 1),))

    def test_invalid(self):
        with pytest.raises(ValueError):
            WeakOrder(((0,), (0, 1)))


class TestDominance:
    def test_rule_one(self, ex31):
        w = sc_dominates(ex31, "J1", "J4", TIE_ALL)
        assert w is not None and w.strict
        assert w.bijections == (((1, 1), (2, 2)),)
        assert verify_witness(ex31, w, TIE_ALL)

    def test_rule_five(self, ex31):
        for a, b in (("J2", "J3"), ("J3", "J2")):
            w = sc_dominates(ex31, a, b, TIE_ALL)
            assert w is not None and not w.strict

    def test_proof_item_b(self, ex41):
        w = sc_dominates(ex41, "J3", "J2", WeakOrder(((0, 1, 2, 3),)))
        assert w is not None and w.strict
        assert w.bijections == (((0, 0), (3, 3)),)

    def test_no_citations(self):
        p = Problem.zeros(2)
        o = WeakOrder(((0, 1),))
        for a, b in ((0, 1), (1, 0)):
            w = sc_dominates(p, a, b, o)
            assert w is not None and not w.strict

    def test_same_journal(self, ex31):
        with pytest.raises(ValueError):
            sc_dominates(ex31, 0, 0, TIE_ALL)

    @settings(max_examples=60, deadline=None)
    @given(tournament_problems(min_n=2), st.data())
    def test_witnesses_reverify(self, p, data):
        orders = list(enumerate_weak_orders(p.n))
        o = data.draw(st.sampled_from(orders))
        for i, j in itertools.permutations(range(p.n), 2):
            w = sc_dominates(p, i, j, o)
            if w is not None:
                assert verify_witness(p, w, o)


class TestAdmissible:
    def test_forced_ranking(self, ex31):
        assert sc_admissible(ex31, WeakOrder(((0,), (1, 2), (3,)))) is None

    def test_total_tie(self, ex31):
        v = sc_admissible(ex31, TIE_ALL)
        assert v.pair == (0, 3) and v.witness.strict and v.observed == "="

    def test_merged_strict_order(self, ex41_merged):
        v = sc_admissible(ex41_merged, WeakOrder(((0,), (1,), (2,))))
        assert v is not None and v.pair == (1, 0)

    def test_set_example_3_1(self, ex31):
        assert sc_admissible_set(ex31) == (WeakOrder(((0,), (1, 2), (3,))),)

    def test_set_merged(self, ex41_merged):
        assert sc_admissible_set(ex41_merged) == (WeakOrder(((0, 1, 2),)),)

    def test_set_single(self):
        assert sc_admissible_set(Problem.zeros(1)) == (WeakOrder(((0,),)),)

    def test_mutual_witnesses_force_tie(self, ex31):
        for o in sc_admissible_set(ex31):
            assert o.tied(1, 2)

    def test_example_4_1_halves(self, ex41):
        assert all(o.strictly_above(0, 1) for o in sc_admissible_set(ex41))
        merged = aggregate(ex41, "J3", "J4")
        assert all(o.tied(0, 1) for o in sc_admissible_set(merged))

    def test_scores(self, ex31, ex41):
        assert sc_check_scores(ex31, [1, 0, 0, -1]) is None
        v = sc_check_scores(ex31, [0, 0, 0, 0])
        assert v is not None and v.pair == (0, 3)
        assert sc_check_scores(ex41, [0.125, -0.125, 0.375, -0.375]) is None

    @settings(max_examples=80, deadline=None)
    @given(tournament_problems(max_n=4))
    def test_matches_brute_force(self, p):
        expected = tuple(o for o in enumerate_weak_orders(p.n) if brute_admissible(p, o))
        assert sc_admissible_set(p) == expected

    @settings(max_examples=30, deadline=None)
    @given(tournament_problems(min_n=2, max_n=4), st.randoms(use_true_random=False))
    def test_relabeling(self, p, rnd):
        perm = list(range(p.n))
        rnd.shuffle(perm)
        q = p.permuted(perm)
        assert set(sc_admissible_set(q)) == {o.permuted(perm) for o in sc_admissible_set(p)}


def test_weighted_pair_needs_decomposition():
    p = Problem.from_rows([[0, "3/2"], ["1/2", 0]])
    assert sc_admissible_set(p) == (WeakOrder(((0,), (1,))),)
    w = sc_dominates(p, 0, 1, WeakOrder(((0, 1),)))
    assert w.strict and len(w.decomposition) == 2
    assert verify_witness(p, w, WeakOrder(((0, 1),)))
