"""Ackermann hierarchy, its inverses, and growth tables for Xi transcripts.

A_1(j) = 2j, A_k(1) = 2, A_k(j) = A_{k-1}(A_k(j-1)).  Values that would need
more than ``MAX_BITS`` bits come back as the ``TOO_LARGE`` marker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .compression import TooLarge, leaf_count

MAX_BITS = 1 << 20


class _TooLarge:
    def __repr__(self) -> str:
        return "TOO_LARGE"

    __str__ = __repr__


TOO_LARGE = _TooLarge()


def _pow2(e: int):
    return TOO_LARGE if e > MAX_BITS else 1 << e


def ackermann(k: int, j: int):
    """A_k(j) as an int, or TOO_LARGE."""
    if k < 1 or j < 1:
        raise ValueError("ackermann needs k >= 1 and j >= 1")
    if k == 1:
        return 2 * j
    if k == 2:
        return _pow2(j)
    v = 2  # A_k(1)
    for _ in range(j - 1):
        v = ackermann(k - 1, v)
        if v is TOO_LARGE:
            break
    return v


def _at_least(k: int, j: int, bound: int) -> bool:
    v = ackermann(k, j)
    return v is TOO_LARGE or v >= bound


def alpha(n: int) -> int:
    """min{k >= 1 : A_k(3) >= n}."""
    k = 1
    while not _at_least(k, 3, n):
        k += 1
    return k


def alpha2(m: int, n: int) -> int:
    """min{k >= 1 : A_k(4 ceil(m/n)) > log2 n}."""
    if m < 1 or n < 1:
        raise ValueError("alpha2 needs m, n >= 1")
    arg = 4 * -(-m // n)
    lg = math.log2(n)
    k = 1
    while True:
        v = ackermann(k, arg)
        if v is TOO_LARGE or v > lg:
            return k
        k += 1


@dataclass
class GrowthRow:
    i: int
    j: int
    c: int
    leaves: object
    length: object
    alphabet: object
    ratio: object
    alpha: object

    def as_dict(self) -> dict:
        return {k: (v if isinstance(v, (int, float)) else str(v)) for k, v in self.__dict__.items()}


def growth_row(i: int, j: int, c: int = 1, max_bits: int = 4096) -> GrowthRow:
    """Counts from the closed forms |Xi| = ijL+2L-2 and ||Xi|| = jL+2L-2."""
    try:
        L = leaf_count(i, j, c, limit=1 << max_bits)
    except TooLarge:
        return GrowthRow(i, j, c, TOO_LARGE, TOO_LARGE, TOO_LARGE, TOO_LARGE, TOO_LARGE)
    length = i * j * L + 2 * L - 2
    alph = j * L + 2 * L - 2
    return GrowthRow(i, j, c, L, length, alph, length / alph, alpha(alph))


def growth_table(grid) -> list:
    return [growth_row(*pt) for pt in grid]
