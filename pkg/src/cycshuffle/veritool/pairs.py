"""Instance generation for the sweeps.

Pairs are drawn on the letters ``1..total``.  Every statistic in play depends
only on the relative order of letters, so this loses no generality.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations
from typing import Iterator, Optional

from ..permcore import CyclicPerm, LinearPerm
from ..theorems import CyclicShufflePair

__all__ = [
    "cyclic_classes",
    "enumerate_pairs",
    "enumerate_linear_pairs",
    "sample_pairs",
    "sample_linear_pairs",
]


def cyclic_classes(letters) -> Iterator[CyclicPerm]:
    """Every rotation class on ``letters``, in lexicographic order of representatives."""
    letters = sorted(letters)
    top = letters[-1]
    for rest in permutations(letters[:-1]):
        yield CyclicPerm(LinearPerm((top,) + rest))


def enumerate_pairs(total: int, m: Optional[int] = None) -> Iterator[CyclicShufflePair]:
    """All normalized cyclic pairs on ``1..total``.

    Ordered by the length ``m`` of ``[sigma]``, then the letter subset given to
    ``[sigma]`` (which always holds ``total``), then the two classes.  Passing
    ``m`` restricts to that one length.
    """
    if total < 2:
        raise ValueError("a cyclic pair needs at least two letters")
    others = range(1, total)
    for m in range(1, total) if m is None else (m,):
        for chosen in combinations(others, m - 1):
            sigma_letters = chosen + (total,)
            pi_letters = tuple(x for x in others if x not in chosen)
            pis = list(cyclic_classes(pi_letters))
            for cs in cyclic_classes(sigma_letters):
                for cp in pis:
                    yield CyclicShufflePair(cs, cp)


def enumerate_linear_pairs(
    total: int, m: Optional[int] = None
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ordered pairs of disjoint words covering ``1..total``, either side possibly empty."""
    letters = range(1, total + 1)
    for m in range(total + 1) if m is None else (m,):
        for chosen in combinations(letters, m):
            rest = tuple(x for x in letters if x not in chosen)
            pis = list(permutations(rest))
            for sigma in permutations(chosen):
                for pi in pis:
                    yield sigma, pi


def _random_split(rng: random.Random, total: int, min_m: int) -> tuple[list[int], list[int]]:
    m = rng.randint(min_m, total - min_m)
    letters = list(range(1, total + 1))
    rng.shuffle(letters)
    return letters[:m], letters[m:]


def sample_pairs(total: int, count: int, seed: int) -> list[CyclicShufflePair]:
    """``count`` normalized cyclic pairs on ``1..total`` drawn from ``random.Random(seed)``."""
    if total < 2:
        raise ValueError("a cyclic pair needs at least two letters")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a, b = _random_split(rng, total, 1)
        out.append(CyclicShufflePair.normalized(CyclicPerm.from_letters(a), CyclicPerm.from_letters(b)))
    return out


def sample_linear_pairs(total: int, count: int, seed: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a, b = _random_split(rng, total, 0)
        out.append((tuple(a), tuple(b)))
    return out
