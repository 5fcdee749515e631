"""
Linear and cyclic permutations together with their descent statistics.

Letters are arbitrary distinct positive integers.  Positions reported by the
statistics below are 1-indexed, so ``descent_set((4, 1, 3, 2)) == {1, 3}``.

Every statistic accepts any sequence of letters (a :class:`LinearPerm`, a
tuple, a list); the cyclic statistics additionally accept a
:class:`CyclicPerm`, in which case they work on its representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union, overload

from .errors import DisjointnessError, DomainError

__all__ = [
    "LinearPerm",
    "CyclicPerm",
    "StatSummary",
    "descent_set",
    "descent_number",
    "major_index",
    "cyclic_descent_set",
    "cyclic_descent_number",
    "canonicalize",
    "split",
    "cyclic_descent_bottoms",
    "cyclic_major_index",
    "stat_summary",
    "parse_perm",
    "parse_cyclic",
    "check_disjoint",
]


def _validate_letters(letters: tuple) -> None:
    for x in letters:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"letter {x!r} is not an integer")
        if x <= 0:
            raise DomainError(f"letter {x} is not positive")
    if len(set(letters)) != len(letters):
        raise DomainError(f"letters {letters} are not pairwise distinct")


@dataclass(frozen=True, order=True)
class LinearPerm(Sequence[int]):
    """A word of pairwise distinct positive integers.

    Behaves as an immutable sequence, so it can be passed anywhere a tuple of
    letters is expected.  The empty permutation is allowed.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        _validate_letters(letters)

    @overload
    def __getitem__(self, i: int) -> int: ...

    @overload
    def __getitem__(self, i: slice) -> tuple[int, ...]: ...

    def __getitem__(self, i):
        return self.letters[i]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))


@dataclass(frozen=True, order=True)
class CyclicPerm:
    """A rotation class of a nonempty word, stored as its representative.

    The representative is the rotation that begins with the largest letter.
    Build instances from an arbitrary rotation with :func:`canonicalize` or
    :meth:`from_letters`; the constructor itself insists on a representative.
    """

    rep: LinearPerm = field(default_factory=LinearPerm)

    def __post_init__(self) -> None:
        rep = self.rep if isinstance(self.rep, LinearPerm) else LinearPerm(self.rep)
        object.__setattr__(self, "rep", rep)
        if len(rep) == 0:
            raise DomainError("a cyclic permutation needs at least one letter")
        if rep[0] != max(rep):
            raise DomainError(f"{rep} does not start with its largest letter")

    @classmethod
    def from_letters(cls, seq: Iterable[int]) -> CyclicPerm:
        return canonicalize(seq)

    @property
    def letters(self) -> tuple[int, ...]:
        return self.rep.letters

    @property
    def tail(self) -> tuple[int, ...]:
        """The representative with its leading maximum removed."""
        return self.rep.letters[1:]

    def rotations(self) -> Iterator[tuple[int, ...]]:
        w = self.rep.letters
        for i in range(len(w)):
            yield w[i:] + w[:i]

    def __len__(self) -> int:
        return len(self.rep)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rep)

    def __contains__(self, letter: object) -> bool:
        return letter in self.rep.letters

    def __str__(self) -> str:
        return f"[{self.rep}]"


Word = Union[Sequence[int], CyclicPerm]


def _word(p: Word) -> Sequence[int]:
    return p.rep.letters if isinstance(p, CyclicPerm) else p


@dataclass(frozen=True)
class StatSummary:
    des_set: frozenset[int]
    des: int
    maj: int
    cdes_set: frozenset[int]
    cdes: int
    cbd: frozenset[int]


def descent_set(p: Sequence[int]) -> set[int]:
    """Positions ``i`` in ``1..n-1`` with ``p_i > p_{i+1}``."""
    return {i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]}


def descent_number(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def major_index(p: Sequence[int]) -> int:
    return sum(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def cyclic_descent_set(p: Word) -> set[int]:
    """Positions ``i`` in ``1..n`` with ``p_i > p_{i+1}``, reading ``p_{n+1} = p_1``."""
    w = _word(p)
    n = len(w)
    if n == 0:
        raise DomainError("cyclic descents are undefined for the empty word")
    return {i + 1 for i in range(n) if w[i] > w[(i + 1) % n]}


def cyclic_descent_number(cp: Word) -> int:
    return len(cyclic_descent_set(cp))


def canonicalize(seq: Iterable[int]) -> CyclicPerm:
    """Rotate ``seq`` so that its largest letter comes first."""
    w = tuple(seq)
    if not w:
        raise DomainError("cannot canonicalize an empty word")
    _validate_letters(w)
    top = w.index(max(w))
    return CyclicPerm(LinearPerm(w[top:] + w[:top]))


def split(cp: CyclicPerm, i: int) -> LinearPerm:
    """The rotation of ``cp`` that starts with letter ``i``."""
    w = cp.rep.letters
    try:
        at = w.index(i)
    except ValueError:
        raise DomainError(f"{i} is not a letter of {cp}") from None
    return LinearPerm(w[at:] + w[:at])


def cyclic_descent_bottoms(cp: Word) -> set[int]:
    """Letters that sit immediately after a cyclic descent."""
    w = _word(cp)
    n = len(w)
    return {w[(i + 1) % n] for i in range(n) if w[i] > w[(i + 1) % n]}


def cyclic_major_index(cp: CyclicPerm) -> int:
    return major_index(cp.rep.letters)


def stat_summary(p: Word) -> StatSummary:
    """All statistics at once; for a cyclic class they are read off its representative."""
    w = _word(p)
    ds = descent_set(w)
    cds = cyclic_descent_set(w) if len(w) else set()
    return StatSummary(
        des_set=frozenset(ds),
        des=len(ds),
        maj=sum(ds),
        cdes_set=frozenset(cds),
        cdes=len(cds),
        cbd=frozenset(cyclic_descent_bottoms(w)) if len(w) else frozenset(),
    )


def check_disjoint(a: Iterable[int], b: Iterable[int]) -> None:
    shared = set(a) & set(b)
    if shared:
        raise DisjointnessError(f"operands share letters {sorted(shared)}")


def parse_perm(text: str) -> LinearPerm:
    """Parse a comma-separated literal such as ``"6,3,1,4"``.

    Surrounding brackets are tolerated so ``"[6,3,1,4]"`` parses too; the
    empty string gives the empty permutation.
    """
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
    if not body:
        return LinearPerm(())
    letters = []
    for part in body.split(","):
        part = part.strip()
        if not part or not part.lstrip("+-").isdigit():
            raise DomainError(f"malformed permutation literal {text!r}")
        letters.append(int(part))
    return LinearPerm(tuple(letters))


def parse_cyclic(text: str) -> CyclicPerm:
    return canonicalize(parse_perm(text))
