"""The worked problems used throughout the package and its tests."""

from .core import Problem

H = "1/2"


def example_3_1() -> Problem:
    """Four journals; J1 is cited by J2 and J3, who are both cited by J4."""
    return Problem.from_rows([
        [0, 1, 1, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ])


def example_4_1() -> Problem:
    """Ties on J1-J2, J1-J3, J2-J4; J3 beats J4 outright."""
    return Problem.from_rows([
        [0, H, H, 0],
        [H, 0, 0, H],
        [H, 0, 0, 1],
        [0, H, 0, 0],
    ])


def example_4_1_merged() -> Problem:
    """Example 4.1 after uniting J3 and J4: a fully tied triangle."""
    return Problem.from_rows([
        [0, H, H],
        [H, 0, H],
        [H, H, 0],
    ], ["J1", "J2", "J3+J4"])


def tied_cycle(n: int = 4) -> Problem:
    """Journals on a cycle, every adjacent pair tied."""
    rows = [[0] * n for _ in range(n)]
    for a in range(n):
        b = (a + 1) % n
        rows[a][b] = rows[b][a] = H
    return Problem.from_rows(rows)
