"""Exact arithmetic over Q and the real quadratic field Q(sqrt 3).

Rationals are :class:`fractions.Fraction` (arbitrary precision).  Elements of
Q(sqrt 3) are :class:`QSqrt3` values ``a + b*sqrt(3)``; they are immutable,
hashable and totally ordered by their real embedding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Sequence, Union

__all__ = [
    "QSqrt3",
    "SQRT3",
    "LDL",
    "ldlt",
    "as_fraction",
    "format_fraction",
    "parse_scalar",
    "exact_sqrt",
    "det",
]

Scalar = Union[int, Fraction, "QSqrt3"]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, QSqrt3) and x.b == 0:
        return x.a
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _sign_of(a: Fraction, b: Fraction) -> int:
    """Sign of a + b*sqrt(3), decided without floating point."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa == sb:
        return sa
    if sa == 0:
        return sb
    if sb == 0:
        return sa
    # opposite signs: compare a^2 with 3 b^2
    d = a * a - 3 * b * b
    return sa if d > 0 else (sb if d < 0 else 0)


@total_ordering
class QSqrt3:
    """An element ``a + b*sqrt(3)`` of Q(sqrt 3) with rational ``a``, ``b``."""

    __slots__ = ("_a", "_b")

    def __init__(self, a=0, b=0) -> None:
        object.__setattr__(self, "_a", as_fraction(a))
        object.__setattr__(self, "_b", as_fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt3 is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def _coerce(cls, other) -> QSqrt3 | None:
        if isinstance(other, QSqrt3):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return None

    def is_rational(self) -> bool:
        return self._b == 0

    def conjugate(self) -> QSqrt3:
        return QSqrt3(self._a, -self._b)

    def field_norm(self) -> Fraction:
        return self._a * self._a - 3 * self._b * self._b

    def sign(self) -> int:
        return _sign_of(self._a, self._b)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __neg__(self) -> QSqrt3:
        return QSqrt3(-self._a, -self._b)

    def __pos__(self) -> QSqrt3:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self._a - o._a, self._b - o._b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSqrt3(self._a * other, self._b * other)
        if not isinstance(other, QSqrt3):
            return NotImplemented
        a, b, c, d = self._a, self._b, other._a, other._b
        return QSqrt3(a * c + 3 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.field_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        return self * QSqrt3(o._a / n, -o._b / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> QSqrt3:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return QSqrt3(1) / (self ** -k)
        out, base = QSqrt3(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _sign_of(self._a - o._a, self._b - o._b) < 0

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __float__(self) -> float:
        # display and SVG output only
        return float(self._a) + float(self._b) * math.sqrt(3.0)

    def __repr__(self) -> str:
        return f"QSqrt3({format_fraction(self._a)!r}, {format_fraction(self._b)!r})"

    def __str__(self) -> str:
        if self._b == 0:
            return format_fraction(self._a)
        b = format_fraction(abs(self._b))
        root = "√3" if b == "1" else f"{b}√3"
        if self._a == 0:
            return root if self._b > 0 else f"-{root}"
        return f"{format_fraction(self._a)}{'+' if self._b > 0 else '-'}{root}"


SQRT3 = QSqrt3(0, 1)


def parse_scalar(text: str) -> QSqrt3:
    """Parse ``"p/q"``, ``"p/q+r/s√3"``, ``"-√3"`` (``sqrt3`` also accepted)."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty scalar")
    has_root = t.endswith("√3") or t.endswith("sqrt3") or t.endswith("r3")
    if not has_root:
        return QSqrt3(Fraction(t), 0)
    body = t[: -2] if t.endswith("√3") or t.endswith("r3") else t[: -5]
    # the root coefficient starts at the last sign that is not leading
    cut = max(body.rfind("+"), body.rfind("-"), 0)
    a_part, b_part = body[:cut], body[cut:]
    if b_part in ("", "+"):
        b = Fraction(1)
    elif b_part == "-":
        b = Fraction(-1)
    else:
        b = Fraction(b_part)
    a = Fraction(a_part) if a_part else Fraction(0)
    return QSqrt3(a, b)


def exact_sqrt(x: Fraction) -> Fraction:
    """Square root of a rational that is a perfect square; error otherwise."""
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"negative value {x}")
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p != x.numerator or q * q != x.denominator:
        raise ValueError(f"{x} is not the square of a rational")
    return Fraction(p, q)


@dataclass(frozen=True)
class LDL:
    """Factorization ``G = L D L^T`` with ``L`` unit lower triangular.

    ``positive_definite`` is False as soon as a pivot is not strictly
    positive.  Zero pivots whose remaining column vanishes (the positive
    semidefinite case) are recorded and elimination continues; a negative
    pivot, or a zero pivot with a nonzero column, stops the factorization
    and ``D`` is truncated there.
    """

    L: tuple
    D: tuple
    positive_definite: bool
    complete: bool

    @property
    def rank(self) -> int:
        return sum(1 for d in self.D if d != 0)

    def reconstruct(self) -> list[list]:
        n = len(self.L)
        zero = 0 * self.L[0][0]
        return [
            [sum((self.L[i][k] * self.D[k] * self.L[j][k] for k in range(n)), zero) for j in range(n)]
            for i in range(n)
        ]


def ldlt(G: Sequence[Sequence[Scalar]]) -> LDL:
    """Square-root free LDL^T factorization over Q or Q(sqrt 3)."""
    n = len(G)
    if any(len(row) != n for row in G):
        raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i):
            if G[i][j] != G[j][i]:
                raise ValueError("matrix must be symmetric")
    A = [[G[i][j] * 1 for j in range(n)] for i in range(n)]
    A = [[Fraction(v) if isinstance(v, int) else v for v in row] for row in A]
    one = A[0][0] ** 0 if n else Fraction(1)
    zero = one - one
    L = [[one if i == j else zero for j in range(n)] for i in range(n)]
    D = []
    pd = True
    for k in range(n):
        pivot = A[k][k]
        if pivot < 0:
            return LDL(tuple(map(tuple, L)), tuple(D + [pivot]), False, False)
        if pivot == 0:
            pd = False
            if any(A[i][k] != 0 for i in range(k + 1, n)):
                return LDL(tuple(map(tuple, L)), tuple(D + [pivot]), False, False)
            D.append(pivot)
            continue
        D.append(pivot)
        for i in range(k + 1, n):
            L[i][k] = A[i][k] / pivot
        for i in range(k + 1, n):
            lik = L[i][k]
            if lik == 0:
                continue
            for j in range(k + 1, i + 1):
                A[i][j] = A[i][j] - lik * pivot * L[j][k]
                A[j][i] = A[i][j]
    return LDL(tuple(map(tuple, L)), tuple(D), pd, True)


def det(M: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant by fraction-preserving Gaussian elimination."""
    n = len(M)
    A = [[Fraction(v) for v in row] for row in M]
    out = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            out = -out
        out *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return out
