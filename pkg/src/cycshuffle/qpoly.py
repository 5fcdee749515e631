"""
Exact polynomials in one variable ``q`` with integer coefficients.

Only the ring operations needed for generating functions are provided:
addition, multiplication, multiplication by a power of ``q`` and evaluation.
Gaussian binomials are built from the Pascal recurrence, so nothing here ever
divides.
"""

from __future__ import annotations

import threading
from collections import Counter
from typing import Iterable, Mapping, Union

__all__ = [
    "QPoly",
    "ZERO",
    "ONE",
    "Q",
    "add",
    "mul",
    "shift",
    "gauss_binomial",
    "eval_at_one",
]


class QPoly:
    """Sparse integer polynomial, immutable by convention.

    Stored as a map exponent -> nonzero coefficient; the zero polynomial is
    the empty map.  ``str`` gives the canonical rendering used in reports,
    e.g. ``"1 + q + 2*q^2"``.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        c: dict[int, int] = {}
        for e, a in items:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent {e!r} is not a nonnegative integer")
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"coefficient {a!r} is not an integer")
            c[e] = c.get(e, 0) + a
        self._c = {e: c[e] for e in sorted(c) if c[e]}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> QPoly:
        # trusted constructor: c already pruned
        p = object.__new__(cls)
        p._c = {e: c[e] for e in sorted(c)}
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> QPoly:
        return cls({exp: coeff})

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> QPoly:
        """Sum of ``q**e`` over ``exps``, with multiplicity."""
        return cls(Counter(exps))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> QPoly:
        return cls((int(e), int(a)) for e, a in pairs)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        return list(self._c.items())

    def to_pairs(self) -> list[list[int]]:
        return [[e, a] for e, a in self._c.items()]

    def degree(self) -> int:
        """Largest exponent; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __add__(self, other: Union[QPoly, int]) -> QPoly:
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return QPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other: Union[QPoly, int]) -> QPoly:
        if isinstance(other, int):
            other = QPoly({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> QPoly:
        return QPoly({0: other}) - self

    def __mul__(self, other: Union[QPoly, int]) -> QPoly:
        if isinstance(other, int):
            if other == 0:
                return QPoly._raw({})
            return QPoly._raw({e: a * other for e, a in self._c.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return QPoly._raw({e: a for e, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> QPoly:
        """Multiply by ``q**k``."""
        if k < 0:
            raise ValueError(f"shift by {k} would leave the polynomial ring")
        return QPoly._raw({e + k: a for e, a in self._c.items()})

    def __call__(self, x):
        return sum(a * x**e for e, a in self._c.items())

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, a in self._c.items():
            if e == 0:
                parts.append(str(a))
                continue
            var = "q" if e == 1 else f"q^{e}"
            if a == 1:
                parts.append(var)
            elif a == -1:
                parts.append(f"-{var}")
            else:
                parts.append(f"{a}*{var}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"


ZERO = QPoly()
ONE = QPoly({0: 1})
Q = QPoly({1: 1})


def add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def shift(a: QPoly, k: int) -> QPoly:
    return a.shift(k)


def eval_at_one(a: QPoly) -> int:
    return a.eval_at_one()


# Rows of the q-Pascal triangle, grown on demand.  Appends happen under the
# lock; finished rows are never mutated, so readers need no lock.
_rows: list[tuple[QPoly, ...]] = [(ONE,)]
_rows_lock = threading.Lock()


def _grow_to(n: int) -> None:
    with _rows_lock:
        while len(_rows) <= n:
            t = len(_rows)
            prev = _rows[-1]
            row = [ONE]
            for m in range(1, t):
                # [t m] = [t-1 m] + q^(t-m) [t-1 m-1]
                row.append(prev[m] + prev[m - 1].shift(t - m))
            row.append(ONE)
            _rows.append(tuple(row))


def gauss_binomial(n: int, m: int) -> QPoly:
    """The Gaussian binomial ``[n m]``.

    Zero when ``m < 0``, ``m > n`` or ``n < 0``; closed-form evaluators rely
    on this at the edges of the feasible range.
    """
    if n < 0 or m < 0 or m > n:
        return ZERO
    if n >= len(_rows):
        _grow_to(n)
    return _rows[n][m]
