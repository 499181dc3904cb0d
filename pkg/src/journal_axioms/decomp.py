"""Unweighted layer decompositions and competitor sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import HALF, Journal, Problem, ProblemError, is_unweighted, matches_matrix, sum_all


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    """Limits on the decomposition search behind self-consistency checks.

    ``max_layers=None`` means the largest off-diagonal match count.
    """

    granularity: Fraction = HALF
    max_layers: int | None = None
    cap: int = 10_000

    def __post_init__(self):
        object.__setattr__(self, "granularity", Fraction(self.granularity))


DEFAULT_BOUNDS = SearchBounds()


@dataclass(frozen=True)
class Layer:
    problem: Problem
    index: int

    def __post_init__(self):
        if not is_unweighted(self.problem):
            raise DecompositionError(f"layer {self.index} is not unweighted")


@dataclass(frozen=True)
class Decomposition:
    layers: tuple[Layer, ...]
    source: Problem

    def __len__(self):
        return len(self.layers)


@dataclass(frozen=True)
class DecompositionSearch:
    """Result of a bounded enumeration; ``truncated`` is set when ``cap`` cut it short."""

    decompositions: tuple[Decomposition, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.decompositions)

    def __len__(self):
        return len(self.decompositions)

    def __getitem__(self, k):
        return self.decompositions[k]


@dataclass(frozen=True)
class CompetitorSet:
    journal: int
    members: frozenset[int]

    def __contains__(self, k):
        return k in self.members

    def __len__(self):
        return len(self.members)


def competitor_set(layer: Layer | Problem, i: Journal) -> CompetitorSet:
    """Journals that journal ``i`` has exactly one match with in an unweighted layer."""
    p = layer.problem if isinstance(layer, Layer) else layer
    m = matches_matrix(p)
    if not is_unweighted(p, m):
        raise DecompositionError("competitor sets are defined only for unweighted problems")
    i = p.index(i)
    return CompetitorSet(i, frozenset(k for k in range(p.n) if k != i and m[i][k] == 1))


def _match_counts(p: Problem) -> dict[tuple[int, int], int]:
    """Integral off-diagonal match counts of every connected pair ``i < j``."""
    m = matches_matrix(p)
    counts = {}
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if m[i][j] == 0:
                continue
            if m[i][j].denominator != 1:
                raise DecompositionError(
                    f"matches between {p.journals[i]} and {p.journals[j]} ({m[i][j]}) are not integral"
                )
            counts[i, j] = int(m[i][j])
    return counts


def _build(p: Problem, states: list[dict[tuple[int, int], Fraction]]) -> Decomposition:
    """Turn per-layer edge shares (the lower index's share) into layer problems.

    Self-citations all go to the first layer.
    """
    layers = []
    for idx, edges in enumerate(states):
        rows = [[Fraction(0)] * p.n for _ in range(p.n)]
        if idx == 0:
            for i in range(p.n):
                rows[i][i] = p.c(i, i)
        for (i, j), a in edges.items():
            rows[i][j] = a
            rows[j][i] = 1 - a
        layers.append(Layer(Problem.from_rows(rows, p.journals), idx + 1))
    return Decomposition(tuple(layers), p)


def canonical_decomposition(p: Problem) -> Decomposition:
    counts = _match_counts(p)
    n_layers = max(counts.values(), default=1)
    states: list[dict] = [{} for _ in range(n_layers)]
    for (i, j), k in counts.items():
        big_is_i = p.c(i, j) >= p.c(j, i)
        remaining = p.c(i, j) if big_is_i else p.c(j, i)
        for layer in range(k):
            take = min(Fraction(1), remaining)
            remaining -= take
            states[layer][i, j] = take if big_is_i else 1 - take
    return _build(p, states)


def validate_decomposition(p: Problem, d: Decomposition) -> bool:
    if not d.layers:
        return False
    for layer in d.layers:
        if layer.problem.journals != p.journals or not is_unweighted(layer.problem):
            return False
    return sum_all(layer.problem for layer in d.layers).citations == p.citations


def _splits(units: int, k: int, per_layer: int) -> Iterator[tuple[int, ...]]:
    for combo in itertools.product(range(per_layer + 1), repeat=k):
        if sum(combo) == units:
            yield combo


def enumerate_decompositions(
    p: Problem,
    granularity: Fraction = HALF,
    max_layers: int | None = None,
    cap: int = 10_000,
) -> DecompositionSearch:
    """All distinct decompositions into nonempty unweighted layers, up to ``cap``.

    Layers are compared as a multiset.  Citation shares move in steps of
    ``granularity``; at most ``max_layers`` layers are used.
    """
    if cap < 1:
        raise DecompositionError("cap must be at least 1")
    g = Fraction(granularity)
    if g <= 0 or (1 / g).denominator != 1:
        raise DecompositionError(f"granularity {g} must divide 1")
    per_layer = int(1 / g)
    for i in range(p.n):
        for j in range(p.n):
            if (p.c(i, j) / g).denominator != 1:
                raise DecompositionError(
                    f"granularity {g} does not divide c[{p.journals[i]}][{p.journals[j]}] = {p.c(i, j)}"
                )
    counts = _match_counts(p)
    need = max(counts.values(), default=1)
    if max_layers is None:
        max_layers = need
    if max_layers < need:
        raise DecompositionError(f"max_layers={max_layers} is below the largest match count {need}")
    upper = min(max_layers, max(1, sum(counts.values())))
    edges = sorted(counts)

    found: list[Decomposition] = []
    seen: set = set()
    truncated = False

    def key(states):
        return tuple(sorted(tuple(st.get(e, -1) for e in edges) for st in states))

    def fill(pos: int, states: list[dict]) -> bool:
        """Depth-first over edges; returns False once the cap is exceeded."""
        nonlocal truncated
        if pos == len(edges):
            if edges and any(not st for st in states):
                return True
            k = key(states)
            if k in seen:
                return True
            if len(found) == cap:
                truncated = True
                return False
            seen.add(k)
            ordered = sorted(states, key=lambda st: tuple(st.get(e, -1) for e in edges))
            found.append(_build(p, [{e: a * g for e, a in st.items()} for st in ordered]))
            return True
        e = edges[pos]
        units = int(p.c(*e) / g)
        k = counts[e]
        for chosen in itertools.combinations(range(len(states)), k):
            for split in _splits(units, k, per_layer):
                for layer, a in zip(chosen, split):
                    states[layer][e] = a
                ok = fill(pos + 1, states)
                for layer in chosen:
                    del states[layer][e]
                if not ok:
                    return False
        return True

    for n_layers in range(need, upper + 1):
        if not fill(0, [{} for _ in range(n_layers)]):
            break
    return DecompositionSearch(tuple(found), truncated)


def check_decomposable(p: Problem) -> None:
    """Raise unless every off-diagonal match count is integral."""
    try:
        _match_counts(p)
    except DecompositionError as exc:
        raise ProblemError(str(exc)) from None
