"""Gram-matrix lattices with exact bounded-norm enumeration.

Points of a lattice are integer coordinate vectors with respect to a basis
whose inner products are given by a rational Gram matrix.  Cosets are
described by a rational offset vector.  Enumeration is a Fincke-Pohst style
recursion driven by an exact LDL^T factorization, so no floating-point
pruning ever enters a count.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exactnum import LDL, det, ldlt

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapError",
    "GramLattice",
    "a2",
    "d4",
    "direct_sum",
    "discriminant_classes",
    "reduce_mod1",
    "norm",
    "enumerate_up_to",
    "enumerate_with_norms",
    "coset_shortest",
    "depth_and_count",
]

DEFAULT_CAP = 10**7


class EnumerationCapError(RuntimeError):
    """Raised when an enumeration would exceed the configured point cap."""


def _cap() -> int:
    env = os.environ.get("LATGLUE_CAP")
    return int(env) if env else DEFAULT_CAP


def _fvec(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def reduce_mod1(v: Sequence) -> tuple[Fraction, ...]:
    """Canonical coset representative with every entry in [0, 1)."""
    return tuple(Fraction(x) - math.floor(Fraction(x)) for x in v)


@dataclass(frozen=True)
class GramLattice:
    gram: tuple[tuple[Fraction, ...], ...]
    label: str = ""
    _ldl: LDL = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        g = tuple(_fvec(row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        f = ldlt(g)
        if not f.positive_definite:
            raise ValueError(f"Gram matrix of {self.label or 'lattice'} is not positive definite")
        object.__setattr__(self, "_ldl", f)

    @property
    def dimension(self) -> int:
        return len(self.gram)

    @property
    def ldl(self) -> LDL:
        return self._ldl

    @cached_property
    def determinant(self) -> Fraction:
        return det(self.gram)

    @cached_property
    def minimal_norm(self) -> Fraction:
        return depth_and_count(self, (0,) * self.dimension)[0]

    @cached_property
    def kissing_number(self) -> int:
        return depth_and_count(self, (0,) * self.dimension)[1]

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        g = self.gram
        n = self.dimension
        return sum(
            (Fraction(u[i]) * g[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j]),
            Fraction(0),
        )

    def __str__(self) -> str:
        return self.label or f"GramLattice(dim={self.dimension})"


def norm(lat: GramLattice, v: Sequence) -> Fraction:
    """Exact norm ``v^T G v``."""
    if len(v) != lat.dimension:
        raise ValueError(f"vector of length {len(v)} for a {lat.dimension}-dimensional lattice")
    return lat.inner(v, v)


def a2(label: str = "A2") -> GramLattice:
    """A2 at minimal norm 4, basis vectors at 60 degrees."""
    return GramLattice(((4, 2), (2, 4)), label)


def d4(label: str = "D4") -> GramLattice:
    """D4 at minimal norm 4 (twice the Cartan matrix)."""
    cartan = ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2))
    return GramLattice(tuple(tuple(2 * x for x in row) for row in cartan), label)


def direct_sum(*lats: GramLattice, label: str | None = None) -> GramLattice:
    n = sum(L.dimension for L in lats)
    g = [[Fraction(0)] * n for _ in range(n)]
    at = 0
    for L in lats:
        for i in range(L.dimension):
            for j in range(L.dimension):
                g[at + i][at + j] = L.gram[i][j]
        at += L.dimension
    if label is None:
        label = "+".join(L.label or "?" for L in lats)
    return GramLattice(tuple(map(tuple, g)), label)


def _inverse(M: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for k in range(n):
        piv = next(i for i in range(k, n) if A[i][k] != 0)
        A[k], A[piv] = A[piv], A[k]
        p = A[k][k]
        A[k] = [x / p for x in A[k]]
        for i in range(n):
            if i != k and A[i][k] != 0:
                f = A[i][k]
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return [row[n:] for row in A]


def discriminant_classes(lat: GramLattice, scale: Fraction | int = 1) -> list[tuple[Fraction, ...]]:
    """Coset representatives of the dual lattice modulo the lattice.

    The dual is taken with respect to the form ``gram / scale``; for the
    root lattices here at minimal norm 4, ``scale=2`` recovers the usual
    A_n*/A_n and D_n*/D_n glue groups.  Representatives are reduced into
    [0, 1) and returned in lexicographic order.
    """
    scale = Fraction(scale)
    inv = _inverse([[x / scale for x in row] for row in lat.gram])
    n = lat.dimension
    gens = {reduce_mod1([inv[i][j] for i in range(n)]) for j in range(n)}
    group = {(Fraction(0),) * n}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                s = reduce_mod1([a + b for a, b in zip(g, h)])
                if s not in group:
                    group.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(group)


def _isqrt_floor(x: Fraction) -> int:
    """floor(sqrt(x)) for rational x >= 0."""
    return math.isqrt(x.numerator // x.denominator)


def _enumerate(lat: GramLattice, c: tuple[Fraction, ...], bound: Fraction, cap: int) -> list:
    """(y, norm(y + c)) for all integer y with norm(y + c) <= bound, unsorted."""
    n = lat.dimension
    L, D = lat.ldl.L, lat.ldl.D
    out: list = []
    y = [0] * n

    # Q(x) = sum_i D_i (x_i + sum_{j>i} L_ji x_j)^2 with x = y + c
    def rec(i: int, remaining: Fraction) -> None:
        t = c[i]
        for j in range(i + 1, n):
            if L[j][i]:
                t += L[j][i] * (y[j] + c[j])
        r = remaining / D[i]
        s = _isqrt_floor(r) + 1
        lo = math.ceil(-t) - s
        hi = math.floor(-t) + s
        for v in range(lo, hi + 1):
            w = v + t
            q = w * w
            if q > r:
                continue
            y[i] = v
            rest = remaining - D[i] * q
            if i == 0:
                out.append((tuple(y), bound - rest))
                if len(out) > cap:
                    raise EnumerationCapError(
                        f"enumeration in {lat} exceeded the cap of {cap} points (bound {bound})"
                    )
            else:
                rec(i - 1, rest)
        y[i] = 0

    if n:
        rec(n - 1, bound)
    return out


def _check_args(lat: GramLattice, offset, bound) -> tuple[tuple[Fraction, ...], Fraction]:
    n = lat.dimension
    c = _fvec(offset) if offset is not None else (Fraction(0),) * n
    if len(c) != n:
        raise ValueError("offset has wrong dimension")
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return c, bound


def enumerate_up_to(
    lat: GramLattice,
    offset: Sequence | None,
    bound,
    cap: int | None = None,
) -> list[tuple[int, ...]]:
    """All integer ``y`` with ``norm(y + offset) <= bound``, sorted lexicographically."""
    c, bound = _check_args(lat, offset, bound)
    pts = _enumerate(lat, c, bound, _cap() if cap is None else cap)
    return sorted(y for y, _ in pts)


def enumerate_with_norms(
    lat: GramLattice,
    offset: Sequence | None,
    bound,
    cap: int | None = None,
) -> list[tuple[tuple[int, ...], Fraction]]:
    """Like :func:`enumerate_up_to` but paired with the exact norm of ``y + offset``."""
    c, bound = _check_args(lat, offset, bound)
    return sorted(_enumerate(lat, c, bound, _cap() if cap is None else cap))


def _nearest_plane(lat: GramLattice, c: Sequence[Fraction]) -> Fraction:
    """Norm of the Babai nearest-plane representative of the coset of ``c``."""
    n = lat.dimension
    L, D = lat.ldl.L, lat.ldl.D
    y = [0] * n
    total = Fraction(0)
    for i in range(n - 1, -1, -1):
        t = c[i] + sum((L[j][i] * (y[j] + c[j]) for j in range(i + 1, n)), Fraction(0))
        y[i] = -math.floor(t + Fraction(1, 2))
        total += D[i] * (y[i] + t) ** 2
    return total


def coset_shortest(lat: GramLattice, offset: Sequence) -> tuple[Fraction, list[tuple[int, ...]]]:
    """Depth of ``offset`` and the integer vectors ``y`` achieving it.

    Returns the minimum of ``norm(y + offset)`` over vectors with
    ``y + offset != 0`` together with all minimizers.
    """
    n = lat.dimension
    c = reduce_mod1(offset)
    if len(c) != n:
        raise ValueError("offset has wrong dimension")
    if any(c):
        bound = _nearest_plane(lat, c)
    else:
        bound = min(lat.gram[i][i] for i in range(n))
    best = None
    hits: list[tuple[int, ...]] = []
    for y, q in _enumerate(lat, c, bound, _cap()):
        if q == 0:
            continue
        if best is None or q < best:
            best, hits = q, [y]
        elif q == best:
            hits.append(y)
    shift = [math.floor(Fraction(o)) for o in offset]
    return best, sorted(tuple(v - s for v, s in zip(y, shift)) for y in hits)


def depth_and_count(lat: GramLattice, offset: Sequence) -> tuple[Fraction, int]:
    """``(depth, tau)``; for an integral offset this is (minimal norm, kissing number)."""
    delta, hits = coset_shortest(lat, offset)
    return delta, len(hits)
