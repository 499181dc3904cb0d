"""Exhaustive sweeps over small problem families."""

from __future__ import annotations

import functools
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, Sequence

from .axioms import ImpossibilityCertificate, _certificate_from_sets, check_ia, check_sc_method
from .core import CLASS_NAMES, Problem, aggregate, classify
from .decomp import DEFAULT_BOUNDS, SearchBounds
from .methods import ScoringMethod
from .sc import DEFAULT_TIE_TOLERANCE, MAX_WEAK_ORDER_N, sc_admissible_set

MAX_FAMILY_N = 5

Axiom = Literal["ia-weak", "ia-strict", "sc"]

HALF = Fraction(1, 2)
# per-pair states for i < j, as (c_ij, c_ji)
ALPHABETS = {
    "default": (
        ("absent", (0, 0)),
        ("i-wins", (1, 0)),
        ("j-wins", (0, 1)),
        ("tie", (HALF, HALF)),
    ),
}


@dataclass(frozen=True)
class FamilySpec:
    n: int
    constraints: frozenset[str] = frozenset()
    alphabet: str = "default"
    up_to_isomorphism: bool = False

    def __post_init__(self):
        constraints = frozenset(self.constraints)
        unknown = constraints - set(CLASS_NAMES)
        if unknown:
            raise ValueError(f"unknown class constraints {sorted(unknown)}; choose from {CLASS_NAMES}")
        if self.alphabet not in ALPHABETS:
            raise ValueError(f"unknown edge alphabet {self.alphabet!r}")
        object.__setattr__(self, "constraints", constraints)

    def admits(self, p: Problem) -> bool:
        flags = classify(p).as_dict()
        return all(flags[c] for c in self.constraints)


def _canonical_key(p: Problem):
    return min(p.permuted(perm).citations for perm in itertools.permutations(range(p.n)))


def enumerate_problems(spec: FamilySpec, max_n: int = MAX_FAMILY_N) -> Iterator[Problem]:
    """Every assignment of alphabet states to journal pairs, filtered by class.

    Pairs ``(0,1), (0,2), ...`` vary in lexicographic order, the last pair fastest.
    """
    n = spec.n
    if n < 1:
        raise ValueError("need at least one journal")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the family enumeration maximum {max_n}")
    pairs = list(itertools.combinations(range(n), 2))
    states = [values for _, values in ALPHABETS[spec.alphabet]]
    journals = [f"J{k + 1}" for k in range(n)]
    seen = set()
    for combo in itertools.product(states, repeat=len(pairs)):
        rows = [[0] * n for _ in range(n)]
        for (i, j), (cij, cji) in zip(pairs, combo):
            rows[i][j], rows[j][i] = cij, cji
        p = Problem.from_rows(rows, journals)
        if not spec.admits(p):
            continue
        if spec.up_to_isomorphism:
            key = _canonical_key(p)
            if key in seen:
                continue
            seen.add(key)
        yield p


@dataclass(frozen=True)
class SweepReport:
    index: int
    problem: Problem
    axiom: str
    violations: tuple


def _check_one(item, method, axiom, bounds, tie_tolerance) -> SweepReport | None:
    index, p = item
    if axiom == "sc":
        v = check_sc_method(method, p, bounds, tie_tolerance)
        found = () if v is None else (v,)
    elif axiom in ("ia-weak", "ia-strict"):
        found = tuple(check_ia(method, p, axiom[3:], tie_tolerance)) if p.n >= 3 else ()
    else:
        raise ValueError(f"unknown axiom {axiom!r}")
    return SweepReport(index, p, axiom, found) if found else None


def _run(fn, items: Sequence, workers: int) -> list:
    if workers <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))


def sweep_violations(
    method: ScoringMethod,
    spec: FamilySpec,
    axiom: Axiom,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
    workers: int = 1,
) -> list[SweepReport]:
    """Check every instance of the family; reports come back in instance order."""
    items = list(enumerate(enumerate_problems(spec)))
    fn = functools.partial(_check_one, method=method, axiom=axiom, bounds=bounds, tie_tolerance=tie_tolerance)
    return [r for r in _run(fn, items, workers) if r is not None]


def _certify_one(item, bounds, max_n) -> list[ImpossibilityCertificate]:
    _, p = item
    if p.n < 4:
        return []
    before = sc_admissible_set(p, bounds, max_n)
    if not before:
        return []
    found = []
    for merge in itertools.combinations(range(p.n), 2):
        after = sc_admissible_set(aggregate(p, *merge), bounds, max_n)
        rest = [k for k in range(p.n) if k not in merge]
        for target in itertools.combinations(rest, 2):
            cert = _certificate_from_sets(p, target, merge, before, after)
            if cert is not None:
                found.append(cert)
    return found


def sweep_impossibility(
    spec: FamilySpec,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    workers: int = 1,
    max_n: int = MAX_WEAK_ORDER_N,
) -> list[ImpossibilityCertificate]:
    if spec.n > max_n:
        raise ValueError(f"n={spec.n} exceeds the weak-order enumeration maximum {max_n}")
    items = list(enumerate(enumerate_problems(spec)))
    fn = functools.partial(_certify_one, bounds=bounds, max_n=max_n)
    return [cert for certs in _run(fn, items, workers) for cert in certs]
