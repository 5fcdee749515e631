"""
Closed forms for the shuffle generating functions, their brute-force left-hand
sides, and the bijection that reduces cyclic shuffles to linear ones.

Notation: ``m, n`` are operand lengths, ``r, s`` their (cyclic) descent
numbers and ``k`` the (cyclic) descent number being counted.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import DomainError, IntegralityError, OrientationError
from .permcore import (
    CyclicPerm,
    LinearPerm,
    check_disjoint,
    cyclic_descent_bottoms,
    cyclic_descent_number,
    cyclic_major_index,
    descent_number,
    major_index,
    split,
)
from .qpoly import ZERO, QPoly, gauss_binomial
from .shuffle import interleavings, is_circular_subsequence, iter_cyclic_shuffles

__all__ = [
    "CyclicShufflePair",
    "PsiImage",
    "binomial",
    "stanley_rhs",
    "shuffle_maj_gf",
    "shuffle_maj_gfs",
    "agrr_count",
    "agrr_split_count",
    "cyclic_shuffle_count",
    "cyclic_stanley_rhs",
    "cyclic_shuffle_maj_gf",
    "cyclic_shuffle_maj_gfs",
    "psi_forward",
    "psi_inverse",
]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _des_maj(w: Sequence[int]) -> tuple[int, int]:
    d = mj = 0
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            d += 1
            mj += i + 1
    return d, mj


@dataclass(frozen=True)
class CyclicShufflePair:
    """Two disjoint cyclic permutations, the global maximum lying in ``csigma``."""

    csigma: CyclicPerm
    cpi: CyclicPerm

    def __post_init__(self) -> None:
        check_disjoint(self.csigma.letters, self.cpi.letters)
        if self.cpi.rep[0] > self.csigma.rep[0]:
            raise OrientationError(
                f"largest letter {self.cpi.rep[0]} lies in {self.cpi}; swap the operands"
            )

    @classmethod
    def normalized(cls, a: CyclicPerm, b: CyclicPerm) -> CyclicShufflePair:
        """Build a pair from either order of the operands."""
        check_disjoint(a.letters, b.letters)
        return cls(a, b) if a.rep[0] > b.rep[0] else cls(b, a)

    @property
    def m(self) -> int:
        return len(self.csigma)

    @property
    def n(self) -> int:
        return len(self.cpi)

    @property
    def r(self) -> int:
        return cyclic_descent_number(self.csigma)

    @property
    def s(self) -> int:
        return cyclic_descent_number(self.cpi)

    @property
    def sigma_tail(self) -> tuple[int, ...]:
        return self.csigma.tail

    def __str__(self) -> str:
        return f"{self.csigma} {self.cpi}"


@dataclass(frozen=True)
class PsiImage:
    anchor: int
    word: LinearPerm

    def __str__(self) -> str:
        return f"({self.anchor}; {self.word})"


# -- linear shuffles ---------------------------------------------------------

@lru_cache(maxsize=None)
def _stanley_coefficient(m: int, n: int, r: int, s: int, k: int) -> QPoly:
    return gauss_binomial(m - r + s, k - r) * gauss_binomial(n - s + r, k - s)


def stanley_rhs(sigma: Sequence[int], pi: Sequence[int], k: int) -> QPoly:
    """Closed form for the ``des = k`` part of the maj generating function over ``S(sigma, pi)``."""
    check_disjoint(sigma, pi)
    m, n = len(sigma), len(pi)
    r, s = descent_number(sigma), descent_number(pi)
    coeff = _stanley_coefficient(m, n, r, s, k)
    if not coeff:
        return ZERO
    return coeff.shift(major_index(sigma) + major_index(pi) + (k - s) * (k - r))


def shuffle_maj_gfs(sigma: Sequence[int], pi: Sequence[int]) -> dict[int, QPoly]:
    """Brute force: ``k -> sum of q^maj(alpha)`` over shuffles with ``des(alpha) = k``."""
    check_disjoint(sigma, pi)
    by_k: dict[int, Counter] = defaultdict(Counter)
    for w in interleavings(sigma, pi):
        d, mj = _des_maj(w)
        by_k[d][mj] += 1
    return {k: QPoly(by_k[k]) for k in sorted(by_k)}


def shuffle_maj_gf(sigma: Sequence[int], pi: Sequence[int], k: int) -> QPoly:
    return shuffle_maj_gfs(sigma, pi).get(k, ZERO)


# -- cyclic shuffles ---------------------------------------------------------

def cyclic_shuffle_count(m: int, n: int) -> int:
    """Number of cyclic shuffles of classes of lengths ``m`` and ``n``."""
    return (m + n - 1) * binomial(m + n - 2, m - 1)


def agrr_count(m: int, n: int, r: int, s: int, k: int) -> int:
    """Number of cyclic shuffles with ``k`` cyclic descents, from the rational closed form.

    Evaluated exactly; a fractional value means the inputs or the formula are
    inconsistent and raises :class:`IntegralityError`.
    """
    for length, d in ((m, r), (n, s)):
        if length < 1 or not (0 <= d < length or (length, d) == (1, 0)):
            raise DomainError(f"cyclic descent number {d} impossible for length {length}")
    den = (m - r + s) * (n - s + r)
    if den == 0:
        raise DomainError(f"zero denominator for (m, n, r, s) = {(m, n, r, s)}")
    num = k * (m - r) * (n - s) + (m + n - k) * r * s
    value = Fraction(num, den) * binomial(m - r + s, k - r) * binomial(n - s + r, k - s)
    if value.denominator != 1:
        raise IntegralityError(f"count {value} at {(m, n, r, s, k)} is not an integer")
    if value < 0:
        raise IntegralityError(f"count {value} at {(m, n, r, s, k)} is negative")
    return int(value)


def agrr_split_count(m: int, n: int, r: int, s: int, k: int) -> int:
    """The same count as a sum over descent-bottom and non-descent-bottom anchors."""
    return (n - s) * binomial(m - r + s, k - r) * binomial(n - s + r - 1, k - s - 1) + s * binomial(
        m - r + s - 1, k - r
    ) * binomial(n - s + r, k - s)


def cyclic_stanley_rhs(pair: CyclicShufflePair, k: int) -> QPoly:
    """Closed form for the ``cdes = k`` part of the cyclic maj generating function.

    Splits the rotations ``S_i([pi])`` by whether ``i`` is a cyclic descent
    bottom of ``[pi]``; each group carries its own Gaussian-binomial factor.
    """
    m, n, r, s = pair.m, pair.n, pair.r, pair.s
    base = cyclic_major_index(pair.csigma)
    bottoms = cyclic_descent_bottoms(pair.cpi)

    not_bottom = gauss_binomial(m - r + s, k - r) * gauss_binomial(n - s + r - 1, k - s - 1)
    at_bottom = gauss_binomial(m - r + s - 1, k - r) * gauss_binomial(n - s + r, k - s)

    total = ZERO
    if not_bottom:
        exps = [major_index(split(pair.cpi, i)) for i in pair.cpi.letters if i not in bottoms]
        total = total + (not_bottom * QPoly.from_exponents(exps)).shift(base + (k - s) * (k - r))
    if at_bottom:
        exps = [major_index(split(pair.cpi, i)) for i in pair.cpi.letters if i in bottoms]
        total = total + (at_bottom * QPoly.from_exponents(exps)).shift(
            base + (k - s + 1) * (k - r)
        )
    return total


def cyclic_shuffle_maj_gfs(csigma: CyclicPerm, cpi: CyclicPerm) -> dict[int, QPoly]:
    """Brute force: ``k -> sum of q^cmaj`` over cyclic shuffles with ``cdes = k``."""
    by_k: dict[int, Counter] = defaultdict(Counter)
    for alpha in iter_cyclic_shuffles(csigma, cpi):
        by_k[cyclic_descent_number(alpha)][cyclic_major_index(alpha)] += 1
    return {k: QPoly(by_k[k]) for k in sorted(by_k)}


def cyclic_shuffle_maj_gf(csigma: CyclicPerm, cpi: CyclicPerm, k: int) -> QPoly:
    return cyclic_shuffle_maj_gfs(csigma, cpi).get(k, ZERO)


# -- the bijection -----------------------------------------------------------

def psi_forward(alpha: CyclicPerm, pair: CyclicShufflePair) -> PsiImage:
    """Drop the leading maximum of ``alpha``'s representative.

    The anchor is the first letter of ``[pi]`` met in what remains; the
    remaining word is then a linear shuffle of ``sigma_tail`` with the
    rotation of ``[pi]`` starting at the anchor.
    """
    if sorted(alpha.letters) != sorted(pair.csigma.letters + pair.cpi.letters):
        raise DomainError(f"{alpha} does not use exactly the letters of {pair}")
    if not (is_circular_subsequence(pair.csigma, alpha) and is_circular_subsequence(pair.cpi, alpha)):
        raise DomainError(f"{alpha} is not a cyclic shuffle of {pair}")
    word = alpha.tail
    pi_letters = set(pair.cpi.letters)
    anchor = next(x for x in word if x in pi_letters)
    return PsiImage(anchor, LinearPerm(word))


def psi_inverse(image: PsiImage, pair: CyclicShufflePair) -> CyclicPerm:
    """Put the maximum of ``[sigma]`` back in front of the word."""
    word = image.word.letters
    pi_letters = set(pair.cpi.letters)
    if image.anchor not in pi_letters:
        raise DomainError(f"anchor {image.anchor} is not a letter of {pair.cpi}")
    if sorted(word) != sorted(pair.sigma_tail + pair.cpi.letters):
        raise DomainError(f"{image.word} does not use the expected letters")
    sigma_part = tuple(x for x in word if x not in pi_letters)
    pi_part = tuple(x for x in word if x in pi_letters)
    if sigma_part != pair.sigma_tail or pi_part != split(pair.cpi, image.anchor).letters:
        raise DomainError(f"{image} is not a shuffle for anchor {image.anchor}")
    return CyclicPerm(LinearPerm((pair.csigma.rep[0],) + word))
