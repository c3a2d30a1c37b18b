"""Decomposition of the space of L4 into the two planes invariant under G0.

All geometry goes through the exact projection Gram matrices ``g_par`` and
``g_perp`` whose entries lie in Q(sqrt 3).  For angular ordering and drawing
we also expose *reduced* planar coordinates: the true planar coordinates
divided by sqrt(2), which again lie in Q(sqrt 3).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactnum import QSqrt3, SQRT3, ldlt
from .glue import (
    RHO2,
    RHO3,
    RHO4,
    SIGMA,
    Glue,
    Matrix,
    depth4,
    depth8,
    format_glue,
    glue_elements,
    l4,
    l8,
    matrix_group,
    orbits,
    x4,
    x8,
)
from .lattice import coset_shortest, enumerate_up_to, norm

__all__ = [
    "ProjectionGrams",
    "projection_grams",
    "PAR_GRAM",
    "PERP_GRAM",
    "par_inner",
    "perp_inner",
    "split_norms",
    "par_coords",
    "perp_coords",
    "g0_group",
    "apply",
    "forbidden_vectors",
    "FORBIDDEN_SEED",
    "Lemma1Report",
    "LemmaViolation",
    "lemma1_scan",
    "CensusOrbit",
    "minimal_split_census",
    "PUBLISHED_TABLE4",
    "AngleKey",
    "ProjectionError",
    "sigma_swaps_planes",
]

Vec = tuple[Fraction, ...]

_Z = QSqrt3(0)
_BLOCK = ((2, 1), (1, 2))
# cross block u_i^par . u_j^par for i in {1,2}, j in {3,4}; u3, u4 turned by +90 degrees
_CROSS = ((_Z, -SQRT3), (SQRT3, _Z))


def _build(sign: int) -> tuple[tuple[QSqrt3, ...], ...]:
    g = [[_Z] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            g[i][j] = QSqrt3(_BLOCK[i][j])
            g[2 + i][2 + j] = QSqrt3(_BLOCK[i][j])
            g[i][2 + j] = sign * _CROSS[i][j]
            g[2 + j][i] = sign * _CROSS[i][j]
    return tuple(map(tuple, g))


PAR_GRAM = _build(1)
PERP_GRAM = _build(-1)


class ProjectionError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectionGrams:
    g_par: tuple[tuple[QSqrt3, ...], ...]
    g_perp: tuple[tuple[QSqrt3, ...], ...]


@lru_cache(maxsize=None)
def projection_grams() -> ProjectionGrams:
    """The two projection Grams, checked to sum to Gram(L4) and to have rank 2."""
    G = l4().gram
    for i in range(4):
        for j in range(4):
            if PAR_GRAM[i][j] + PERP_GRAM[i][j] != G[i][j]:
                raise ProjectionError("projection Grams do not sum to the L4 Gram matrix")
    for g in (PAR_GRAM, PERP_GRAM):
        f = ldlt(g)
        if not f.complete or f.rank != 2 or any(d < 0 for d in f.D):
            raise ProjectionError(f"projection Gram has pivots {f.D}, expected rank 2")
    return ProjectionGrams(PAR_GRAM, PERP_GRAM)


def _scalar(v):
    return v if isinstance(v, QSqrt3) else Fraction(v)


def _form(g, x: Sequence, y: Sequence) -> QSqrt3:
    out = QSqrt3(0)
    for i in range(4):
        if not x[i]:
            continue
        for j in range(4):
            if y[j] and g[i][j]:
                out = out + g[i][j] * _scalar(x[i]) * _scalar(y[j])
    return out


def par_inner(x: Sequence, y: Sequence) -> QSqrt3:
    return _form(PAR_GRAM, x, y)


def perp_inner(x: Sequence, y: Sequence) -> QSqrt3:
    return _form(PERP_GRAM, x, y)


def split_norms(x: Sequence) -> tuple[QSqrt3, QSqrt3]:
    """``(x_par . x_par, x_perp . x_perp)`` for L4 coordinates ``x``."""
    return par_inner(x, x), perp_inner(x, x)


_HALF = Fraction(1, 2)
# reduced planar images of u1..u4 (true images are sqrt(2) times these)
_PAR_AXES = (
    (QSqrt3(1), QSqrt3(0)),
    (QSqrt3(_HALF), QSqrt3(0, _HALF)),
    (QSqrt3(0), QSqrt3(1)),
    (QSqrt3(0, -_HALF), QSqrt3(_HALF)),
)
_PERP_AXES = _PAR_AXES[:2] + tuple((-a, -b) for a, b in _PAR_AXES[2:])


def _coords(axes, x: Sequence) -> tuple[QSqrt3, QSqrt3]:
    px, py = QSqrt3(0), QSqrt3(0)
    for (ax, ay), c in zip(axes, x):
        if c:
            c = Fraction(c) if not isinstance(c, QSqrt3) else c
            px = px + ax * c
            py = py + ay * c
    return px, py


def par_coords(x: Sequence) -> tuple[QSqrt3, QSqrt3]:
    """Reduced coordinates of the parallel projection (true = sqrt(2) * reduced)."""
    return _coords(_PAR_AXES, x)


def perp_coords(x: Sequence) -> tuple[QSqrt3, QSqrt3]:
    """Reduced coordinates of the perpendicular projection (true = sqrt(2) * reduced)."""
    return _coords(_PERP_AXES, x)


def apply(x: Sequence, M: Matrix) -> Vec:
    """Image of the L4 vector with coordinates ``x`` under ``M`` (right multiplication)."""
    return tuple(sum((Fraction(x[i]) * M[i][j] for i in range(4)), Fraction(0)) for j in range(4))


def _congruent(M: Matrix, g) -> bool:
    Mt = tuple(zip(*M))
    for i in range(4):
        for j in range(4):
            s = QSqrt3(0) if isinstance(g[0][0], QSqrt3) else Fraction(0)
            for k in range(4):
                for l in range(4):
                    if M[i][k] and Mt[l][j]:
                        s = s + g[k][l] * (M[i][k] * Mt[l][j])
            if s != g[i][j]:
                return False
    return True


@lru_cache(maxsize=None)
def g0_group() -> tuple[Matrix, ...]:
    """The order-24 group generated by rho2, rho3, rho4, checked to preserve both planes."""
    group = matrix_group([RHO2, RHO3, RHO4])
    if len(group) != 24:
        raise ProjectionError(f"G0 has order {len(group)}, expected 24")
    G = l4().gram
    for M in group:
        if not (_congruent(M, G) and _congruent(M, PAR_GRAM) and _congruent(M, PERP_GRAM)):
            raise ProjectionError(f"{M} is not an isometry of both invariant planes")
    return group


FORBIDDEN_SEED: Vec = (Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3), Fraction(1, 3))


@lru_cache(maxsize=None)
def forbidden_vectors() -> tuple[Vec, ...]:
    """The 12 forbidden vectors, as L4 coordinates, sorted by angle in the perp plane.

    Index 0 is the vector with the smallest polar angle in [0, 360) degrees
    of its perpendicular image; indices increase counterclockwise.
    """
    orb = {apply(FORBIDDEN_SEED, M) for M in g0_group()}
    if len(orb) != 12:
        raise ProjectionError(f"forbidden orbit has {len(orb)} elements, expected 12")
    want = QSqrt3(Fraction(4, 3), Fraction(2, 3))
    for f in orb:
        if perp_inner(f, f) != want:
            raise ProjectionError(f"forbidden vector {f} has perp norm {perp_inner(f, f)}")
    return tuple(sorted(orb, key=lambda f: AngleKey(perp_coords(f))))


class AngleKey:
    """Exact sort key for the polar angle of a nonzero vector over Q(sqrt 3)."""

    __slots__ = ("x", "y", "half")

    def __init__(self, xy: tuple[QSqrt3, QSqrt3]) -> None:
        x, y = xy
        if not x and not y:
            raise ValueError("zero vector has no angle")
        self.x, self.y = x, y
        # half 0: angle in [0, 180); half 1: [180, 360)
        self.half = 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def __lt__(self, other: AngleKey) -> bool:
        if self.half != other.half:
            return self.half < other.half
        cross = self.x * other.y - self.y * other.x
        return cross > 0

    def __eq__(self, other) -> bool:
        return self.half == other.half and self.x * other.y - self.y * other.x == 0


@dataclass(frozen=True)
class Lemma1Report:
    checked: int
    violations: tuple


class LemmaViolation(AssertionError):
    pass


def lemma1_scan(strict: bool = True) -> Lemma1Report:
    """Exhaustive check that short, thin vectors of L12 are minimal vectors.

    For every glue class h and every L12 vector x = (x8, x4) in it with
    ``x8.x8 + 2 x_par.x_par < 4`` and ``x_perp.x_perp <= 8/3`` the norm of x
    must equal 4.  The L8 part is enumerated up to norm 7, which bounds
    ``x.x < 14/3 + depth8/2``.  Because ``x8.x8 >= depth8(h)`` the test is
    applied to the actual 8-dimensional part; reading the first hypothesis
    with the depth alone would admit non-minimal coset vectors of L8.
    """
    L8, L4 = l8(), l4()
    eight_thirds = Fraction(8, 3)
    checked = 0
    bad = []
    for h in glue_elements():
        d8 = depth8(h)[0]
        if d8 >= 4:
            continue
        off4 = x4(h)
        cand4 = []
        for y in enumerate_up_to(L4, off4, (4 - d8) / 2 + eight_thirds):
            v = tuple(a + b for a, b in zip(y, off4))
            npar, nperp = split_norms(v)
            if 2 * npar + d8 < 4 and nperp <= eight_thirds:
                cand4.append((v, npar, norm(L4, v)))
        if not cand4:
            continue
        off8 = x8(h)
        shell8 = []
        for y in enumerate_up_to(L8, off8, 7):
            v = tuple(a + b for a, b in zip(y, off8))
            shell8.append((v, norm(L8, v)))
        for v4, npar, n4 in cand4:
            for v8, n8 in shell8:
                if not (2 * npar + n8 < 4):
                    continue
                if not any(v4) and not any(v8):
                    continue
                checked += 1
                if n8 + n4 != 4:
                    bad.append((h, v8, v4, n8 + n4))
    report = Lemma1Report(checked, tuple(bad))
    if strict and bad:
        h, v8, v4, n = bad[0]
        raise LemmaViolation(f"{len(bad)} violations, e.g. class {format_glue(h)} x4={v4} norm {n}")
    return report


@dataclass(frozen=True)
class CensusOrbit:
    h: Glue  # representative of the Aut(H) orbit of glue
    depth8: Fraction
    rep: Vec  # representative L4 part
    size: int
    n_par: QSqrt3
    n_perp: QSqrt3


PUBLISHED_TABLE4 = (
    ((Fraction(1, 3),) * 4, QSqrt3(Fraction(4, 3)), QSqrt3(Fraction(4, 3))),
    (FORBIDDEN_SEED, QSqrt3(Fraction(4, 3), Fraction(-2, 3)), QSqrt3(Fraction(4, 3), Fraction(2, 3))),
    (
        (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)),
        QSqrt3(Fraction(4, 3), Fraction(2, 3)),
        QSqrt3(Fraction(4, 3), Fraction(-2, 3)),
    ),
)


def _g0_orbits(vectors: set[Vec]) -> list[list[Vec]]:
    group = g0_group()
    prefer = [r for r, _, _ in PUBLISHED_TABLE4]
    left = set(vectors)
    out = []
    for v in prefer + sorted(vectors):
        if v not in left:
            continue
        orb = {apply(v, M) for M in group}
        if not orb <= vectors:
            raise ProjectionError(f"G0 orbit of {v} leaves the set of minimal L4 parts")
        left -= orb
        out.append([v] + sorted(orb - {v}))
    return out


def minimal_split_census() -> list[CensusOrbit]:
    """G0-orbits of the L4 parts of the norm-4 vectors of L12, with split norms.

    Classes whose L12 minimum exceeds 4 are skipped; for the trivial class
    the L4 parts are the minimal vectors of L4 (the L8 minimal vectors have
    zero L4 part and no perpendicular component).
    """
    out = []
    for rep, members in orbits():
        d8 = depth8(rep)[0] if any(rep) else Fraction(0)
        d4 = depth4(rep)[0]
        if d8 + d4 != 4:
            continue
        parts: set[Vec] = set()
        for h in members:
            off = x4(h)
            for y in coset_shortest(l4(), off)[1]:
                parts.add(tuple(a + b for a, b in zip(y, off)))
        for orb in _g0_orbits(parts):
            splits = {split_norms(v) for v in orb}
            if len(splits) != 1:
                raise ProjectionError(f"split norms vary along the G0 orbit of {orb[0]}")
            (npar, nperp), = splits
            out.append(CensusOrbit(rep, d8, orb[0], len(orb), npar, nperp))
    by_class = defaultdict(list)
    for o in out:
        by_class[o.h].append(o)
    for h, orbs in by_class.items():
        uneven = [o for o in orbs if o.n_par != o.n_perp]
        if uneven and depth8(h)[0] != Fraction(4, 3):
            raise ProjectionError(f"class {format_glue(h)} has unequal split norms")
    return out


def sigma_swaps_planes(x: Sequence) -> bool:
    """True when the involution sigma exchanges the two split norms of ``x``."""
    a, b = split_norms(x)
    c, d = split_norms(apply(x, SIGMA))
    return a == d and b == c

