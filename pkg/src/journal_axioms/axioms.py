"""Invariance to aggregation, self-consistency of methods, and impossibility certificates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .core import Journal, Problem, aggregate, surviving_index
from .decomp import DEFAULT_BOUNDS, SearchBounds
from .methods import ScoringMethod, induced_order
from .sc import (
    DEFAULT_TIE_TOLERANCE,
    MAX_WEAK_ORDER_N,
    ScViolation,
    WeakOrder,
    dominance_table,
    sc_admissible_set,
    sc_check_scores,
)

IaMode = Literal["weak", "strict"]

REVERSE = {">": "<", "<": ">", "=": "="}


@dataclass(frozen=True)
class IaViolation:
    """Relation between ``pair`` (original indices) changed after merging ``merge``."""

    problem: Problem
    merge: tuple[int, int]
    pair: tuple[int, int]
    before: str
    after: str
    mode: str

    def describe(self) -> str:
        names = self.problem.journals
        i, j = self.merge
        k, l = self.pair
        return (
            f"merging {names[i]},{names[j]} turns {names[k]} {self.before} {names[l]} "
            f"into {names[k]} {self.after} {names[l]} ({self.mode} IA)"
        )


def check_ia(
    method: ScoringMethod,
    p: Problem,
    mode: IaMode = "strict",
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
) -> list[IaViolation]:
    """All aggregation violations of ``method`` on ``p``.

    ``weak`` flags ``f_k >= f_l`` turning into ``f_k < f_l`` (ordered pairs);
    ``strict`` flags any change among ``<``, ``=``, ``>`` (unordered pairs).
    """
    if mode not in ("weak", "strict"):
        raise ValueError(f"unknown IA mode {mode!r}")
    if p.n < 3:
        raise ValueError("aggregation checks need at least three journals")
    before = induced_order(method(p), tie_tolerance)
    found = []
    for i, j in itertools.combinations(range(p.n), 2):
        after = induced_order(method(aggregate(p, i, j)), tie_tolerance)
        rest = [k for k in range(p.n) if k not in (i, j)]
        pairs = itertools.combinations(rest, 2) if mode == "strict" else itertools.permutations(rest, 2)
        for k, l in pairs:
            rb = before.relation(k, l)
            ra = after.relation(surviving_index(i, j, k), surviving_index(i, j, l))
            if mode == "strict" and rb != ra or mode == "weak" and rb != "<" and ra == "<":
                found.append(IaViolation(p, (i, j), (k, l), rb, ra, mode))
    return found


def check_sc_method(
    method: ScoringMethod,
    p: Problem,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
) -> ScViolation | None:
    return sc_check_scores(p, method(p), tie_tolerance, bounds)


@dataclass(frozen=True)
class ImpossibilityCertificate:
    """Self-consistency fixes the target pair one way before a merge and another way after.

    A method satisfying self-consistency must pick an order from each set,
    so it changes the target relation and breaks strict-mode invariance to
    aggregation.  A reversed ``after`` relation also breaks the weak mode.
    """

    problem: Problem
    target: tuple[int, int]
    merge: tuple[int, int]
    before_set: tuple[WeakOrder, ...]
    after_set: tuple[WeakOrder, ...]
    before_relation: str
    after_relation: str

    @property
    def merged_problem(self) -> Problem:
        return aggregate(self.problem, *self.merge)

    @property
    def merged_target(self) -> tuple[int, int]:
        i, j = self.merge
        return tuple(surviving_index(i, j, k) for k in self.target)

    @property
    def refutes_weak_ia(self) -> bool:
        return self.after_relation == REVERSE[self.before_relation]

    def describe(self) -> str:
        names = self.problem.journals
        k, l = (names[t] for t in self.target)
        i, j = (names[t] for t in self.merge)
        return (
            f"every SC-admissible order has {k} {self.before_relation} {l} "
            f"({len(self.before_set)} orders); after merging {i},{j} every one has "
            f"{k} {self.after_relation} {l} ({len(self.after_set)} orders)"
        )


def _uniform_relation(orders, a: int, b: int) -> str | None:
    rels = {o.relation(a, b) for o in orders}
    return rels.pop() if len(rels) == 1 else None


def _certificate_from_sets(p, target, merge, before, after) -> ImpossibilityCertificate | None:
    if not before or not after:
        return None
    k, l = target
    rb = _uniform_relation(before, k, l)
    if rb not in (">", "<"):
        return None
    i, j = merge
    ra = _uniform_relation(after, surviving_index(i, j, k), surviving_index(i, j, l))
    if ra is None or ra == rb:
        return None
    return ImpossibilityCertificate(p, target, merge, before, after, rb, ra)


def _pairs(p: Problem, target, merge) -> tuple[tuple[int, int], tuple[int, int]]:
    k, l = (p.index(t) for t in target)
    i, j = sorted(p.index(t) for t in merge)
    if k == l or i == j:
        raise ValueError("target and merge must each name two different journals")
    if {k, l} & {i, j}:
        raise ValueError("target pair must be disjoint from the merged pair")
    return (k, l), (i, j)


def certify_impossibility(
    p: Problem,
    target: tuple[Journal, Journal],
    merge: tuple[Journal, Journal],
    bounds: SearchBounds = DEFAULT_BOUNDS,
    max_n: int = MAX_WEAK_ORDER_N,
) -> ImpossibilityCertificate | None:
    target, merge = _pairs(p, target, merge)
    before = sc_admissible_set(p, bounds, max_n)
    after = sc_admissible_set(aggregate(p, *merge), bounds, max_n)
    return _certificate_from_sets(p, target, merge, before, after)


def validate_certificate(
    cert: ImpossibilityCertificate, bounds: SearchBounds = DEFAULT_BOUNDS
) -> bool:
    """Recompute both admissible sets from scratch and re-check uniformity."""
    dominance_table.cache_clear()
    target, merge = _pairs(cert.problem, cert.target, cert.merge)
    if (target, merge) != (cert.target, cert.merge):
        return False
    before = sc_admissible_set(cert.problem, bounds)
    after = sc_admissible_set(aggregate(cert.problem, *merge), bounds)
    if set(before) != set(cert.before_set) or set(after) != set(cert.after_set):
        return False
    fresh = _certificate_from_sets(cert.problem, target, merge, before, after)
    return (
        fresh is not None
        and fresh.before_relation == cert.before_relation
        and fresh.after_relation == cert.after_relation
    )

