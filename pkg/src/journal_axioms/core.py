"""Journal ranking problems: citation matrices, domain classes and transforms.

Entry ``c[i][j]`` is the number of citations journal ``i`` received from
journal ``j``.  All values are kept as exact :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Journal = Union[int, str]

HALF = Fraction(1, 2)


class ProblemError(ValueError):
    """Raised when a citation matrix or journal list is malformed."""


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**9)
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class Problem:
    journals: tuple[str, ...]
    citations: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        journals = tuple(str(j) for j in self.journals)
        rows = tuple(tuple(to_fraction(x) for x in row) for row in self.citations)
        n = len(journals)
        if n < 1:
            raise ProblemError("a problem needs at least one journal")
        if len(set(journals)) != n:
            raise ProblemError(f"duplicate journal identifiers in {list(journals)}")
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ProblemError(f"citation matrix must be {n}x{n}")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x < 0:
                    raise ProblemError(f"negative citation count at ({journals[i]}, {journals[j]}): {x}")
        object.__setattr__(self, "journals", journals)
        object.__setattr__(self, "citations", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], journals: Sequence[str] | None = None) -> Problem:
        if journals is None:
            journals = [f"J{k + 1}" for k in range(len(rows))]
        return cls(tuple(journals), tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, n: int, journals: Sequence[str] | None = None) -> Problem:
        return cls.from_rows([[0] * n for _ in range(n)], journals)

    @property
    def n(self) -> int:
        return len(self.journals)

    def c(self, i: int, j: int) -> Fraction:
        return self.citations[i][j]

    def index(self, journal: Journal) -> int:
        if isinstance(journal, str):
            try:
                return self.journals.index(journal)
            except ValueError:
                raise ProblemError(f"unknown journal {journal!r}") from None
        if not 0 <= journal < self.n:
            raise ProblemError(f"journal index {journal} out of range for n={self.n}")
        return int(journal)

    def total(self) -> Fraction:
        return sum((x for row in self.citations for x in row), Fraction(0))

    def permuted(self, perm: Sequence[int]) -> Problem:
        """Relabel so that new journal ``k`` is old journal ``perm[k]``."""
        return Problem(
            tuple(self.journals[p] for p in perm),
            tuple(tuple(self.citations[a][b] for b in perm) for a in perm),
        )

    def __str__(self):
        width = max(len(j) for j in self.journals)
        lines = []
        for name, row in zip(self.journals, self.citations):
            lines.append(f"{name:>{width}}  " + "  ".join(f"{str(x):>5}" for x in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class MatchesMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def degree(self, i: int) -> Fraction:
        """Matches of journal ``i`` with the others (self-matches excluded)."""
        return sum((m for k, m in enumerate(self.entries[i]) if k != i), Fraction(0))


@dataclass(frozen=True)
class ClassFlags:
    balanced: bool
    unweighted: bool
    loopless: bool
    extremal: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "balanced": self.balanced,
            "unweighted": self.unweighted,
            "loopless": self.loopless,
            "extremal": self.extremal,
        }


CLASS_NAMES = ("balanced", "unweighted", "loopless", "extremal")


def matches_matrix(p: Problem) -> MatchesMatrix:
    c = p.citations
    return MatchesMatrix(tuple(tuple(c[i][j] + c[j][i] for j in range(p.n)) for i in range(p.n)))


def is_unweighted(p: Problem, m: MatchesMatrix | None = None) -> bool:
    m = m or matches_matrix(p)
    return all(m[i][j] in (0, 1) for i in range(p.n) for j in range(p.n) if i != j)


def classify(p: Problem) -> ClassFlags:
    m = matches_matrix(p)
    n = p.n
    degrees = {m.degree(i) for i in range(n)}
    extremal = all(
        p.c(i, j) in (0, m[i][j] / 2, m[i][j]) for i in range(n) for j in range(n)
    )
    return ClassFlags(
        balanced=len(degrees) == 1,
        unweighted=is_unweighted(p, m),
        loopless=all(p.c(i, i) == 0 for i in range(n)),
        extremal=extremal,
    )


def _extremal_entry(cij: Fraction, cji: Fraction) -> Fraction:
    if cij == 0 and cji == 0:
        return Fraction(0)
    if cji > 0 and cij < cji / 2:
        return Fraction(0)
    if cji > 0 and cji / 2 <= cij <= 2 * cji:
        return HALF
    # remaining case: 2 * cji < cij
    return Fraction(1)


def extremal_transform(p: Problem) -> Problem:
    """Map every pair of journals onto absent / tied / decisive comparisons."""
    n = p.n
    rows = [
        [Fraction(0) if i == j else _extremal_entry(p.c(i, j), p.c(j, i)) for j in range(n)]
        for i in range(n)
    ]
    return Problem.from_rows(rows, p.journals)


def merged_name(a: str, b: str) -> str:
    return f"{a}+{b}"


def aggregate(p: Problem, i: Journal, j: Journal) -> Problem:
    """Unite journals ``i`` and ``j``; their mutual citations are deleted.

    The merged journal sits at position ``min(i, j)`` and keeps the sum of
    both self-citation counts.
    """
    i, j = p.index(i), p.index(j)
    if i == j:
        raise ProblemError(f"cannot aggregate journal {p.journals[i]!r} with itself")
    lo, hi = min(i, j), max(i, j)
    old = [k for k in range(p.n) if k != hi]
    c = p.citations

    def entry(a: int, b: int) -> Fraction:
        if a == lo and b == lo:
            return c[lo][lo] + c[hi][hi]
        if a == lo:
            return c[lo][b] + c[hi][b]
        if b == lo:
            return c[a][lo] + c[a][hi]
        return c[a][b]

    journals = [merged_name(p.journals[lo], p.journals[hi]) if k == lo else p.journals[k] for k in old]
    return Problem.from_rows([[entry(a, b) for b in old] for a in old], journals)


def surviving_index(i: int, j: int, k: int) -> int:
    """Position in the aggregated problem of journal ``k`` (not ``i`` or ``j``)."""
    hi = max(i, j)
    return k - 1 if k > hi else k


def sum_problems(p1: Problem, p2: Problem) -> Problem:
    if p1.journals != p2.journals:
        raise ProblemError("problems must share the same journal list to be summed")
    n = p1.n
    return Problem.from_rows(
        [[p1.c(i, j) + p2.c(i, j) for j in range(n)] for i in range(n)], p1.journals
    )


def sum_all(problems: Iterable[Problem]) -> Problem:
    problems = list(problems)
    total = problems[0]
    for q in problems[1:]:
        total = sum_problems(total, q)
    return total
