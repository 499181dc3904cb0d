"""Self-consistency: dominance witnesses, admissibility of weak orders.

Journal ``i`` dominates ``j`` under a candidate ranking when some
decomposition into unweighted layers admits, in every layer, a one-to-one
map ``g`` from the competitors of ``i`` onto those of ``j`` with
``c[i][k] >= c[j][g(k)]`` and ``k`` ranked weakly above ``g(k)``.  The
ranking being checked is the one the rank conditions refer to, so
admissibility is a fixed-point test.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from numbers import Rational
from typing import Iterator, Sequence

from .core import Journal, Problem
from .decomp import (
    DEFAULT_BOUNDS,
    Decomposition,
    SearchBounds,
    competitor_set,
    enumerate_decompositions,
    validate_decomposition,
)

MAX_WEAK_ORDER_N = 7
DEFAULT_TIE_TOLERANCE = 1e-8

PREFER = "≻"
TIE = "∼"


class EnumerationLimitError(ValueError):
    pass


@dataclass(frozen=True)
class WeakOrder:
    """Ordered partition of journal indices, best class first."""

    classes: tuple[tuple[int, ...], ...]
    _rank: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        classes = tuple(tuple(sorted(int(k) for k in c)) for c in self.classes)
        members = [k for c in classes for k in c]
        if any(not c for c in classes):
            raise ValueError("indifference classes must be nonempty")
        if sorted(members) != list(range(len(members))):
            raise ValueError(f"classes {classes} do not partition 0..{len(members) - 1}")
        rank = [0] * len(members)
        for r, c in enumerate(classes):
            for k in c:
                rank[k] = r
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def from_ranks(cls, ranks: Sequence[int]) -> WeakOrder:
        levels = sorted(set(ranks))
        return cls(tuple(tuple(k for k, r in enumerate(ranks) if r == lv) for lv in levels))

    @property
    def n(self) -> int:
        return len(self._rank)

    def rank(self, k: int) -> int:
        return self._rank[k]

    def weakly_above(self, a: int, b: int) -> bool:
        return self._rank[a] <= self._rank[b]

    def strictly_above(self, a: int, b: int) -> bool:
        return self._rank[a] < self._rank[b]

    def tied(self, a: int, b: int) -> bool:
        return self._rank[a] == self._rank[b]

    def relation(self, a: int, b: int) -> str:
        """One of ``'>'``, ``'='``, ``'<'`` describing ``a`` against ``b``."""
        ra, rb = self._rank[a], self._rank[b]
        return ">" if ra < rb else "=" if ra == rb else "<"

    def permuted(self, perm: Sequence[int]) -> WeakOrder:
        """The same ranking after relabeling new journal ``k`` = old ``perm[k]``."""
        inv = {old: new for new, old in enumerate(perm)}
        return WeakOrder(tuple(tuple(inv[k] for k in c) for c in self.classes))

    def format(self, journals: Sequence[str] | None = None) -> str:
        def name(k):
            return journals[k] if journals is not None else f"J{k + 1}"

        parts = []
        for c in self.classes:
            if len(c) == 1:
                parts.append(name(c[0]))
            else:
                parts.append("(" + f" {TIE} ".join(name(k) for k in c) + ")")
        return f" {PREFER} ".join(parts)

    def names(self, journals: Sequence[str]) -> list[list[str]]:
        return [[journals[k] for k in c] for c in self.classes]


def order_from_scores(scores: Sequence, tie_tolerance: float = DEFAULT_TIE_TOLERANCE) -> WeakOrder:
    """Sort descending; neighbours closer than ``tie_tolerance`` share a class.

    Exact (rational) scores are compared exactly.
    """
    values = list(scores)
    if all(isinstance(v, Rational) for v in values):
        tie_tolerance = 0
    idx = sorted(range(len(values)), key=lambda k: -values[k])
    classes: list[list[int]] = []
    prev = None
    for k in idx:
        if prev is not None and values[prev] - values[k] <= tie_tolerance:
            classes[-1].append(k)
        else:
            classes.append([k])
        prev = k
    return WeakOrder(tuple(tuple(c) for c in classes))


def enumerate_weak_orders(n: int, max_n: int = MAX_WEAK_ORDER_N) -> Iterator[WeakOrder]:
    """Every weak order on ``n`` journals exactly once (ordered Bell many)."""
    if n < 1:
        raise EnumerationLimitError("need at least one journal")
    if n > max_n:
        raise EnumerationLimitError(f"n={n} exceeds the weak-order enumeration maximum {max_n}")

    def ordered_partitions(rest: tuple[int, ...]):
        if not rest:
            yield ()
            return
        for size in range(1, len(rest) + 1):
            for first in itertools.combinations(rest, size):
                remaining = tuple(k for k in rest if k not in first)
                for tail in ordered_partitions(remaining):
                    yield (first,) + tail

    for classes in ordered_partitions(tuple(range(n))):
        yield WeakOrder(classes)


# -- dominance -----------------------------------------------------------------


@dataclass(frozen=True)
class _Candidate:
    pairs: tuple[tuple[int, int], ...]
    cite_strict: bool
    rank_pairs: tuple[tuple[int, int], ...]

    def admissible(self, order: WeakOrder) -> bool:
        return all(order.weakly_above(k, g) for k, g in self.rank_pairs)

    def strict_under(self, order: WeakOrder) -> bool:
        return self.cite_strict or any(order.strictly_above(k, g) for k, g in self.rank_pairs)


@dataclass(frozen=True)
class DominanceWitness:
    """A decomposition plus per-layer bijections certifying ``dominant`` over ``dominated``."""

    dominant: int
    dominated: int
    decomposition: Decomposition
    bijections: tuple[tuple[tuple[int, int], ...], ...]
    strict: bool

    @property
    def rank_dependence(self) -> int:
        """Pairings that map a competitor to a different journal."""
        return sum(k != g for layer in self.bijections for k, g in layer)


@dataclass(frozen=True)
class ScViolation:
    pair: tuple[int, int]
    witness: DominanceWitness
    observed: str  # relation of pair[0] to pair[1] in the tested order: '<' or '='

    def describe(self, journals: Sequence[str]) -> str:
        i, j = self.pair
        kind = "strictly " if self.witness.strict else ""
        shown = {"<": "below", "=": "tied with"}[self.observed]
        return f"{journals[i]} {kind}dominates {journals[j]} but is ranked {shown} it"


class DominanceTable:
    """Citation-feasible bijections for every ordered pair, independent of any ranking."""

    def __init__(self, p: Problem, bounds: SearchBounds = DEFAULT_BOUNDS):
        self.problem = p
        self.bounds = bounds
        search = enumerate_decompositions(p, bounds.granularity, bounds.max_layers, bounds.cap)
        self.decompositions = search.decompositions
        self.truncated = search.truncated
        comps = [
            [sorted(competitor_set(layer, k).members) for k in range(p.n)]
            for d in self.decompositions
            for layer in d.layers
        ]
        self._entries: dict[tuple[int, int], list] = {}
        for i, j in itertools.permutations(range(p.n), 2):
            self._entries[i, j] = self._pair_entry(i, j, comps)

    def _pair_entry(self, i: int, j: int, comps) -> list:
        entry = []
        flat = 0
        for d_idx, d in enumerate(self.decompositions):
            layers = []
            feasible = True
            for layer in d.layers:
                c = layer.problem.citations
                si, sj = comps[flat][i], comps[flat][j]
                flat += 1
                if not feasible:
                    continue
                if len(si) != len(sj):
                    feasible = False
                    continue
                cands = []
                for image in itertools.permutations(sj):
                    pairs = tuple(zip(si, image))
                    if all(c[i][k] >= c[j][g] for k, g in pairs):
                        cands.append(_Candidate(
                            pairs,
                            any(c[i][k] > c[j][g] for k, g in pairs),
                            tuple((k, g) for k, g in pairs if k != g),
                        ))
                if not cands:
                    feasible = False
                    continue
                cands.sort(key=lambda cd: len(cd.rank_pairs))
                layers.append(cands)
            if feasible:
                entry.append((d_idx, layers))
        return entry

    def witness(self, i: int, j: int, order: WeakOrder) -> DominanceWitness | None:
        """Preferred witness: strict over non-strict, then enumeration order."""
        fallback = None
        for d_idx, layers in self._entries[i, j]:
            usable = []
            for cands in layers:
                ok = [cd for cd in cands if cd.admissible(order)]
                if not ok:
                    break
                usable.append(ok)
            else:
                picks = [ok[0] for ok in usable]
                for pos, ok in enumerate(usable):
                    strict = next((cd for cd in ok if cd.strict_under(order)), None)
                    if strict is not None:
                        picks[pos] = strict
                        return self._make(i, j, d_idx, picks, True)
                if fallback is None:
                    fallback = self._make(i, j, d_idx, picks, False)
        return fallback

    def _make(self, i, j, d_idx, picks, strict) -> DominanceWitness:
        return DominanceWitness(
            i, j, self.decompositions[d_idx], tuple(cd.pairs for cd in picks), strict
        )

    def violations(self, order: WeakOrder) -> list[ScViolation]:
        found = []
        for i, j in self._entries:
            v = self._violation(i, j, order)
            if v is not None:
                found.append(v)
        return found

    def _violation(self, i: int, j: int, order: WeakOrder) -> ScViolation | None:
        if order.strictly_above(i, j):
            return None
        w = self.witness(i, j, order)
        if w is None:
            return None
        if order.strictly_above(j, i):
            return ScViolation((i, j), w, "<")
        if w.strict:
            return ScViolation((i, j), w, "=")
        return None

    def admissible(self, order: WeakOrder) -> bool:
        return all(self._violation(i, j, order) is None for i, j in self._entries)


@functools.lru_cache(maxsize=512)
def dominance_table(p: Problem, bounds: SearchBounds = DEFAULT_BOUNDS) -> DominanceTable:
    return DominanceTable(p, bounds)


def _violation_key(v: ScViolation):
    return (v.witness.rank_dependence, v.pair)


def sc_dominates(
    p: Problem, i: Journal, j: Journal, order: WeakOrder, bounds: SearchBounds = DEFAULT_BOUNDS
) -> DominanceWitness | None:
    i, j = p.index(i), p.index(j)
    if i == j:
        raise ValueError("dominance needs two different journals")
    return dominance_table(p, bounds).witness(i, j, order)


def sc_admissible(
    p: Problem, order: WeakOrder, bounds: SearchBounds = DEFAULT_BOUNDS
) -> ScViolation | None:
    """``None`` when ``order`` is self-consistent, else its most elementary violation.

    Violations whose witnesses pair journals with themselves (no appeal to
    the ranking) come first, then lexicographic by pair.
    """
    if order.n != p.n:
        raise ValueError(f"order covers {order.n} journals, problem has {p.n}")
    found = dominance_table(p, bounds).violations(order)
    return min(found, key=_violation_key) if found else None


def sc_admissible_set(
    p: Problem, bounds: SearchBounds = DEFAULT_BOUNDS, max_n: int = MAX_WEAK_ORDER_N
) -> tuple[WeakOrder, ...]:
    """Every weak order passing :func:`sc_admissible`, in enumeration order."""
    orders = list(enumerate_weak_orders(p.n, max_n))
    table = dominance_table(p, bounds)
    return tuple(o for o in orders if table.admissible(o))


def sc_check_scores(
    p: Problem,
    scores: Sequence,
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> ScViolation | None:
    values = list(scores)
    if len(values) != p.n:
        raise ValueError(f"{len(values)} scores for {p.n} journals")
    return sc_admissible(p, order_from_scores(values, tie_tolerance), bounds)


def verify_witness(p: Problem, w: DominanceWitness, order: WeakOrder) -> bool:
    """Re-check a witness from its raw data, without the search machinery."""
    d = w.decomposition
    if d.source.citations != p.citations or len(w.bijections) != len(d.layers):
        return False
    if not validate_decomposition(p, d):
        return False
    i, j = w.dominant, w.dominated
    strict = False
    for layer, pairs in zip(d.layers, w.bijections):
        c = layer.problem.citations
        if {k for k, _ in pairs} != competitor_set(layer, i).members:
            return False
        if sorted(g for _, g in pairs) != sorted(competitor_set(layer, j).members):
            return False
        for k, g in pairs:
            if c[i][k] < c[j][g] or not order.weakly_above(k, g):
                return False
            strict = strict or c[i][k] > c[j][g] or order.strictly_above(k, g)
    return strict == w.strict

