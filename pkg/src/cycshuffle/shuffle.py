"""
Linear and cyclic shuffles of two letter-disjoint permutations.

``cyclic_shuffles`` builds the classes directly: the global maximum starts the
representative, and what follows is a linear shuffle of the rest of that
operand's representative with some rotation of the other operand.
``cyclic_shuffles_oracle`` ignores that structure and filters every
arrangement through :func:`is_circular_subsequence`; the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Literal, Sequence, Union

from .errors import DomainError, ResourceGuardError
from .permcore import CyclicPerm, LinearPerm, check_disjoint, split

__all__ = [
    "ShuffleSet",
    "DEFAULT_ORACLE_BOUND",
    "interleavings",
    "iter_linear_shuffles",
    "linear_shuffles",
    "is_subsequence",
    "is_circular_subsequence",
    "iter_cyclic_shuffles",
    "cyclic_shuffles",
    "cyclic_shuffles_oracle",
]

DEFAULT_ORACLE_BOUND = 9


@dataclass(frozen=True)
class ShuffleSet:
    kind: Literal["linear", "cyclic"]
    elements: tuple[Union[LinearPerm, CyclicPerm], ...]

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("shuffle set contains duplicates")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def as_set(self) -> frozenset:
        return frozenset(self.elements)


def interleavings(a: Sequence[int], b: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Raw tuples of every interleaving of ``a`` and ``b``, unordered and unchecked."""
    a, b = tuple(a), tuple(b)
    total = len(a) + len(b)
    if not a:
        yield b
        return
    for slots in combinations(range(total), len(a)):
        out = [0] * total
        ia = ib = 0
        si = 0
        for pos in range(total):
            if si < len(slots) and slots[si] == pos:
                out[pos] = a[ia]
                ia += 1
                si += 1
            else:
                out[pos] = b[ib]
                ib += 1
        yield tuple(out)


def iter_linear_shuffles(sigma: Sequence[int], pi: Sequence[int]) -> Iterator[LinearPerm]:
    """Shuffles of ``sigma`` and ``pi`` in lexicographic order."""
    check_disjoint(sigma, pi)
    for w in sorted(interleavings(sigma, pi)):
        yield LinearPerm(w)


def linear_shuffles(sigma: Sequence[int], pi: Sequence[int]) -> ShuffleSet:
    return ShuffleSet("linear", tuple(iter_linear_shuffles(sigma, pi)))


def is_subsequence(inner: Sequence[int], outer: Sequence[int]) -> bool:
    it = iter(outer)
    return all(x in it for x in inner)


def is_circular_subsequence(inner: CyclicPerm, outer: CyclicPerm) -> bool:
    """Whether ``inner`` appears in ``outer`` as a circular subsequence.

    Scans ``outer`` doubled, starting at each position of the first copy and
    reading at most ``len(outer)`` letters, for ``inner.rep`` as a linear
    subsequence.  Fixing the rotation of ``inner`` loses nothing: any match of
    another rotation can be re-anchored at the letter ``inner.rep[0]``.
    """
    missing = set(inner.letters) - set(outer.letters)
    if missing:
        raise DomainError(f"letters {sorted(missing)} of {inner} do not occur in {outer}")
    target = inner.rep.letters
    w = outer.rep.letters
    n = len(w)
    doubled = w + w
    for start in range(n):
        if is_subsequence(target, doubled[start:start + n]):
            return True
    return False


def _as_cyclic(x: Union[CyclicPerm, Sequence[int]]) -> CyclicPerm:
    if isinstance(x, CyclicPerm):
        return x
    return CyclicPerm.from_letters(x)


def iter_cyclic_shuffles(csigma: CyclicPerm, cpi: CyclicPerm) -> Iterator[CyclicPerm]:
    """Cyclic shuffles in lexicographic order of representatives."""
    csigma, cpi = _as_cyclic(csigma), _as_cyclic(cpi)
    check_disjoint(csigma.letters, cpi.letters)
    if csigma.rep[0] < cpi.rep[0]:
        csigma, cpi = cpi, csigma
    top = csigma.rep[0]
    tail = csigma.tail
    words = []
    for i in cpi.letters:
        words.extend(interleavings(tail, split(cpi, i).letters))
    words.sort()
    for w in words:
        yield CyclicPerm(LinearPerm((top,) + w))


def cyclic_shuffles(csigma: CyclicPerm, cpi: CyclicPerm) -> ShuffleSet:
    return ShuffleSet("cyclic", tuple(iter_cyclic_shuffles(csigma, cpi)))


def cyclic_shuffles_oracle(
    csigma: CyclicPerm, cpi: CyclicPerm, bound: int = DEFAULT_ORACLE_BOUND
) -> ShuffleSet:
    """Cyclic shuffles by exhaustive search over all classes on the joint letters."""
    csigma, cpi = _as_cyclic(csigma), _as_cyclic(cpi)
    check_disjoint(csigma.letters, cpi.letters)
    letters = sorted(csigma.letters + cpi.letters)
    if len(letters) > bound:
        raise ResourceGuardError(
            f"oracle enumeration over {len(letters)} letters exceeds bound {bound}"
        )
    top = letters[-1]
    found = []
    for rest in permutations(letters[:-1]):
        cand = CyclicPerm(LinearPerm((top,) + rest))
        if is_circular_subsequence(csigma, cand) and is_circular_subsequence(cpi, cand):
            found.append(cand)
    return ShuffleSet("cyclic", tuple(found))
