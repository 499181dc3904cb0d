"""Scoring procedures: least squares, flat, net sum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.sparse.csgraph as csgraph

from .core import Problem
from .sc import DEFAULT_TIE_TOLERANCE, WeakOrder, order_from_scores


@dataclass(frozen=True)
class ScoreVector:
    values: tuple[float, ...]
    method: str
    note: str = ""
    components: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values)

    def comparable(self, a: int, b: int) -> bool:
        """False when ``a`` and ``b`` sit in different components (not identified)."""
        return not self.components or self.components[a] == self.components[b]


ScoringMethod = Callable[[Problem], ScoreVector]


def _float_matrix(p: Problem) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in p.citations])


def laplacian_system(p: Problem) -> tuple[np.ndarray, np.ndarray]:
    """``L = D - M`` with self-matches dropped, and net balance ``b = C 1 - C^T 1``."""
    c = _float_matrix(p)
    m = c + c.T
    np.fill_diagonal(m, 0.0)
    lap = np.diag(m.sum(axis=1)) - m
    b = c.sum(axis=1) - c.sum(axis=0)
    return lap, b


def least_squares(p: Problem) -> ScoreVector:
    lap, b = laplacian_system(p)
    n = p.n
    adjacency = (lap != 0) & ~np.eye(n, dtype=bool)
    n_comp, labels = csgraph.connected_components(adjacency.astype(int), directed=False)
    x = np.zeros(n)
    for comp in range(n_comp):
        idx = np.flatnonzero(labels == comp)
        if len(idx) == 1:
            continue
        sub = lap[np.ix_(idx, idx)]
        # adding the all-ones projector removes the null space and pins sum(x) = 0
        x[idx] = np.linalg.solve(sub + np.ones_like(sub) / len(idx), b[idx])
    note = "zero sum per connected component"
    if n_comp > 1:
        note += f" ({n_comp} components; cross-component comparisons not identified)"
    return ScoreVector(tuple(x), "least_squares", note, tuple(int(v) for v in labels))


def flat(p: Problem) -> ScoreVector:
    return ScoreVector((0.0,) * p.n, "flat", "all journals tied")


def net_sum(p: Problem) -> ScoreVector:
    _, b = laplacian_system(p)
    return ScoreVector(tuple(b), "net_sum", "citations received minus citations given")


def induced_order(s, tie_tolerance: float = DEFAULT_TIE_TOLERANCE) -> WeakOrder:
    return order_from_scores(s, tie_tolerance)


METHODS: dict[str, ScoringMethod] = {
    "ls": least_squares,
    "flat": flat,
    "netsum": net_sum,
}
