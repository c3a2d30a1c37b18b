"""The dodecagonal window and the aperiodic 10-dimensional packing Q10.

A point of L12 is kept when the perpendicular image of its L4 part lies in
the window; the kept points, with the parallel image dilated by sqrt(2),
form the packing.  Every L4 fiber carries a whole translate of L8, so a
patch stores one record per admitted L4 vector and expands the L8 coset
only when distances are needed.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .exactnum import QSqrt3
from .glue import Glue, depth8, glue, glue_elements, l4, l8, orbits, x4, x8
from .lattice import EnumerationCapError, _cap, enumerate_up_to, norm
from .project import (
    PAR_GRAM,
    PERP_GRAM,
    AngleKey,
    forbidden_vectors,
    par_coords,
    par_inner,
    perp_coords,
    perp_inner,
    split_norms,
)

__all__ = [
    "WindowSpec",
    "make_window",
    "window_contains",
    "window_vertices",
    "window_area",
    "window_diameter_sq",
    "PackedPoint",
    "Patch",
    "generate_patch",
    "PackingViolation",
    "PackingReport",
    "difference_table",
    "verify_packing",
    "KissingReport",
    "kissing_configuration",
    "COSINE_SET",
    "DensityEstimate",
    "density_estimate",
    "exact_density",
    "find_period",
    "TilingError",
    "Tile",
    "Tiling",
    "TILE_KINDS",
    "RING_ORBIT_REP",
    "separation_table",
    "extract_tiling",
    "patch_records",
    "patch_from_records",
    "render_svg",
]

Vec = tuple[Fraction, ...]
_ZERO4 = (QSqrt3(0),) * 4


@dataclass(frozen=True)
class WindowSpec:
    """The dodecagon ``{p : (p - c).f <= f.f/2 for the 12 forbidden f}``.

    Edge k has outward normal ``f_k`` (forbidden vectors sorted by angle);
    vertex k joins edges k and k+1.  ``included_edges`` lists the edges whose
    open interiors belong to the window, ``included_vertices`` the vertices
    that do.  ``centering`` holds Q(sqrt 3) coefficients over the u_i^perp.
    """

    forbidden: tuple[Vec, ...]
    included_edges: frozenset[int]
    included_vertices: frozenset[int]
    centering: tuple[QSqrt3, ...] = _ZERO4

    @cached_property
    def bounds(self) -> tuple[QSqrt3, ...]:
        return tuple(perp_inner(f, f) / 2 for f in self.forbidden)

    def with_centering(self, centering: Sequence) -> WindowSpec:
        c = tuple(x if isinstance(x, QSqrt3) else QSqrt3(Fraction(x)) for x in centering)
        if len(c) != 4:
            raise ValueError("centering needs 4 coefficients")
        return WindowSpec(self.forbidden, self.included_edges, self.included_vertices, c)

    @property
    def singular(self) -> bool:
        return not any(self.centering)


def make_window(centering: Sequence | None = None) -> WindowSpec:
    """The window with the default half-open boundary rule.

    The open interiors of edges 0..5 (one edge of every opposite pair, a
    consecutive arc) and the even-indexed vertices are included.  Vertices
    five or seven steps apart differ by a forbidden vector, so only an
    alternating vertex set is admissible.
    """
    w = WindowSpec(forbidden_vectors(), frozenset(range(6)), frozenset(range(0, 12, 2)))
    return w.with_centering(centering) if centering is not None else w


def _constraint_values(p: Sequence, w: WindowSpec) -> list[QSqrt3]:
    d = [QSqrt3(0) + x - c for x, c in zip(p, w.centering)]
    return [_inner_mixed(d, f) - b for f, b in zip(w.forbidden, w.bounds)]


def _inner_mixed(x: Sequence, y: Sequence) -> QSqrt3:
    out = QSqrt3(0)
    for i in range(4):
        if not x[i]:
            continue
        for j in range(4):
            if y[j] and PERP_GRAM[i][j]:
                out = out + PERP_GRAM[i][j] * x[i] * y[j]
    return out


def _admit(zero_edges: Sequence[int], w: WindowSpec) -> bool:
    if not zero_edges:
        return True
    if len(zero_edges) == 1:
        return zero_edges[0] in w.included_edges
    if len(zero_edges) == 2:
        a, b = sorted(zero_edges)
        k = a if b == a + 1 else b  # edges (11, 0) meet at vertex 11
        return k in w.included_vertices
    raise AssertionError("a point lies on more than two edges of a convex polygon")


def window_contains(p: Sequence, w: WindowSpec) -> bool:
    """Whether the perpendicular image of L4 coordinates ``p`` is admitted."""
    s = _constraint_values(p, w)
    if any(v > 0 for v in s):
        return False
    return _admit([k for k, v in enumerate(s) if v == 0], w)


def window_vertices(w: WindowSpec) -> list[tuple[QSqrt3, QSqrt3]]:
    """Reduced perpendicular coordinates of the 12 vertices, relative to the center."""
    out = []
    F = [perp_coords(f) for f in w.forbidden]
    for k in range(12):
        (a1, b1), (a2, b2) = F[k], F[(k + 1) % 12]
        # reduced dot products are half the true ones: a x + b y = (f.f/2) / 2
        c1, c2 = w.bounds[k] / 2, w.bounds[(k + 1) % 12] / 2
        den = a1 * b2 - a2 * b1
        out.append(((c1 * b2 - c2 * b1) / den, (a1 * c2 - a2 * c1) / den))
    return out


def window_area(w: WindowSpec | None = None) -> QSqrt3:
    """Exact area from the vertices.

    The shoelace sum is twice the reduced area, and true areas are twice
    reduced ones, so the sum itself is the true area.
    """
    v = window_vertices(w or make_window())
    total = QSqrt3(0)
    for k in range(12):
        (x1, y1), (x2, y2) = v[k], v[(k + 1) % 12]
        total = total + x1 * y2 - x2 * y1
    return total


def window_diameter_sq(w: WindowSpec | None = None) -> QSqrt3:
    v = window_vertices(w or make_window())
    return max(2 * ((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2) for a in v for b in v)


# ---------------------------------------------------------------- batch test


def _perp_integer_forms(w: WindowSpec) -> tuple[np.ndarray, np.ndarray, list[QSqrt3], int]:
    """Integer data for testing many points ``P / 6`` at once.

    ``(P/6).f_k = (P . A_k + sqrt3 P . B_k) / 18``; the right-hand side of
    constraint k is ``rhs_k = f.f/2 + c.f_k``.
    """
    A = np.zeros((12, 4), dtype=np.int64)
    B = np.zeros((12, 4), dtype=np.int64)
    rhs = []
    for k, (f, b) in enumerate(zip(w.forbidden, w.bounds)):
        for i in range(4):
            s = sum((PERP_GRAM[i][j] * (3 * f[j]) for j in range(4)), QSqrt3(0))
            assert s.a.denominator == 1 and s.b.denominator == 1
            A[k, i], B[k, i] = int(s.a), int(s.b)
        rhs.append(b + _inner_mixed(w.centering, f))
    den = 1
    for r in rhs:
        den = math.lcm(den, (18 * r.a).denominator, (18 * r.b).denominator)
    return A, B, rhs, den


def _signs(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    sx, sy = np.sign(X), np.sign(Y)
    mixed = sx * np.sign(X * X - 3 * Y * Y)
    return np.where(sx == sy, sx, np.where(sx == 0, sy, np.where(sy == 0, sx, mixed)))


def _admitted_mask(P: np.ndarray, w: WindowSpec, forms=None) -> np.ndarray:
    """Exact admission test for the rows of ``P`` (L4 coordinates times 6)."""
    A, B, rhs, den = forms or _perp_integer_forms(w)
    ra = [int(18 * den * r.a) for r in rhs]
    rb = [int(18 * den * r.b) for r in rhs]
    big = max(abs(int(P.max(initial=0))), abs(int(P.min(initial=0)))) * int(np.abs(A).max() + np.abs(B).max()) * 4
    big = big * den + max(map(abs, ra + rb), default=0)
    dtype = np.int64 if big < 2**30 else object
    P = P.astype(dtype)
    X = den * (P @ A.T.astype(dtype)) - np.array(ra, dtype=dtype)
    Y = den * (P @ B.T.astype(dtype)) - np.array(rb, dtype=dtype)
    S = _signs(X, Y).astype(np.int64)
    inside = ~(S > 0).any(axis=1)
    Z = S == 0
    nz = Z.sum(axis=1)
    ok = inside & (nz == 0)
    edge = inside & (nz == 1)
    if edge.any():
        k = Z[edge].argmax(axis=1)
        ok[np.flatnonzero(edge)] = np.isin(k, sorted(w.included_edges))
    corner = inside & (nz == 2)
    if corner.any():
        idx = np.flatnonzero(corner)
        ok[idx] = [_admit(list(np.flatnonzero(Z[i])), w) for i in idx]
    return ok


# --------------------------------------------------------------------- patch


@dataclass(frozen=True)
class PackedPoint:
    """An admitted L4 fiber carrying the L8 coset of ``h``; ``c8`` is its base point."""

    h: Glue
    c4: tuple[int, ...]
    c8: tuple[int, ...] = (0,) * 8

    @property
    def x4(self) -> Vec:
        return tuple(Fraction(c) + o for c, o in zip(self.c4, x4(self.h)))

    @property
    def x8(self) -> Vec:
        return tuple(Fraction(c) + o for c, o in zip(self.c8, x8(self.h)))

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(int(6 * v) for v in self.x4)

    def perp_norm(self) -> QSqrt3:
        return perp_inner(self.x4, self.x4)

    def par_norm(self) -> QSqrt3:
        return par_inner(self.x4, self.x4)


@dataclass
class Patch:
    window: WindowSpec
    coord_bound: int
    points: list[PackedPoint]
    index: dict[tuple[int, ...], int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self.index:
            self.index = {p.key: i for i, p in enumerate(self.points)}

    def __len__(self) -> int:
        return len(self.points)

    def complete_radius_sq(self) -> Fraction:
        """A rational R^2 such that every admitted fiber with par-norm <= R^2 is in the patch.

        Coordinates satisfy |x_i| <= |x4| / sqrt(3) in L4 and
        ``|x4|^2 <= R^2 + 2 (|c_perp|^2 + 2/3)``; the centering term is
        bounded above by a rational.
        """
        c = self.window.centering
        cn = _inner_mixed(c, c)
        cn_up = cn.a + (abs(cn.b) * 7) / 4  # sqrt3 < 7/4
        return 3 * Fraction(self.coord_bound) ** 2 - 2 * (cn_up + Fraction(2, 3))


def generate_patch(w: WindowSpec, coord_bound: int, cap: int | None = None) -> Patch:
    """All admitted fibers with L4 integer part in ``[-coord_bound, coord_bound]^4``."""
    if coord_bound < 1:
        raise ValueError("coord_bound must be at least 1")
    cap = _cap() if cap is None else cap
    r = np.arange(-coord_bound, coord_bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(r, r, r, r, indexing="ij"), axis=-1).reshape(-1, 4)
    forms = _perp_integer_forms(w)
    points: list[PackedPoint] = []
    for h in glue_elements():
        off = np.array([int(6 * v) for v in h], dtype=np.int64)
        mask = _admitted_mask(6 * grid + off, w, forms)
        for c4 in grid[mask]:
            points.append(PackedPoint(h, tuple(int(v) for v in c4)))
        if len(points) > cap:
            raise EnumerationCapError(f"patch exceeded the cap of {cap} fibers")
    return Patch(w, coord_bound, points)


# ---------------------------------------------------------------- distances


def l8_floor(g: Glue) -> Fraction:
    """Least norm of an L8 coset vector, zero for the trivial class."""
    return depth8(g)[0] if any(g) else Fraction(0)


@lru_cache(maxsize=None)
def difference_table(max_dist_sq: Fraction = Fraction(4)) -> tuple:
    """Every L4 difference that two admitted fibers can have at 10-d distance^2 <= bound.

    Entries are ``(6 z, glue of z, z_par.z_par, least 10-d distance^2)``.
    Two admitted fibers differ by at most the window diameter, so only
    ``z_perp.z_perp <= 8/3`` is possible; with ``2 z_par.z_par <= bound`` this
    makes the list finite.
    """
    diam = Fraction(8, 3)
    out = []
    for g in glue_elements():
        m8 = l8_floor(g)
        if m8 > max_dist_sq:
            continue
        off = x4(g)
        for y in enumerate_up_to(l4(), off, (max_dist_sq - m8) / 2 + diam):
            z = tuple(a + b for a, b in zip(y, off))
            if not any(z):
                continue
            npar, nperp = split_norms(z)
            d = 2 * npar + m8
            if nperp <= diam and d <= max_dist_sq:
                out.append((tuple(int(6 * v) for v in z), g, npar, d))
    out.sort(key=lambda t: (t[3], t[0]))
    return tuple(out)


class PackingViolation(AssertionError):
    """Two sphere centers of the patch closer than distance 2."""


@dataclass(frozen=True)
class PackingReport:
    min_dist_sq: QSqrt3
    witnesses: tuple  # (i, j, contacts) for fiber pairs at the minimum
    pairs_checked: int


def _glue_of(z6: Sequence[int]) -> Glue:
    return glue(*(Fraction(v, 6) for v in z6))


@lru_cache(maxsize=None)
def _contacts(g: Glue, npar: QSqrt3, target: QSqrt3, shell: Fraction) -> int:
    need = target - 2 * npar
    if not need.is_rational() or need.a > shell:
        return 0
    off = x8(g)
    L8 = l8()
    return sum(
        1
        for y in enumerate_up_to(L8, off, need.a)
        if norm(L8, [a + b for a, b in zip(y, off)]) == need.a
    )


def verify_packing(patch: Patch, l8_shell_bound=4) -> PackingReport:
    """Exact minimum squared distance over all pairs of centers in the patch.

    Within one fiber the minimum is the L8 minimal norm 4.  Between fibers
    it is ``2 z_par.z_par + min |z8|^2`` over the L8 coset of the glue of z,
    and only differences from :func:`difference_table` can reach 4.
    """
    l8_shell_bound = Fraction(l8_shell_bound)
    if l8_shell_bound < 4:
        raise ValueError("l8_shell_bound must be at least 4")
    best = QSqrt3(4)
    found: list[tuple[int, int, Glue, QSqrt3, QSqrt3]] = []
    checked = 0
    table = difference_table(Fraction(4))
    for i, p in enumerate(patch.points):
        k = p.key
        for z6, g, npar, d in table:
            j = patch.index.get(tuple(a + b for a, b in zip(k, z6)))
            if j is None or j <= i:
                continue
            checked += 1
            if d < 4:
                raise PackingViolation(
                    f"fibers {patch.points[i]} and {patch.points[j]} are at distance^2 {d} < 4"
                )
            found.append((i, j, g, npar, d))
    witnesses = tuple(
        (i, j, _contacts(g, npar, best, l8_shell_bound)) for i, j, g, npar, d in found if d == best
    )
    return PackingReport(best, witnesses, checked)


# ----------------------------------------------------------------- kissing


COSINE_SET = frozenset(
    {
        QSqrt3(0),
        QSqrt3(Fraction(1, 2)),
        QSqrt3(Fraction(-1, 2)),
        QSqrt3(Fraction(1, 4), Fraction(-1, 12)),
        QSqrt3(Fraction(-1, 4), Fraction(1, 12)),
        QSqrt3(Fraction(1, 4), Fraction(1, 12)),
        QSqrt3(Fraction(-1, 4), Fraction(-1, 12)),
    }
)


@dataclass(frozen=True)
class KissingReport:
    count: int
    per_fiber: tuple  # (glue, x4, contacts)
    cosines: Counter  # over unordered pairs of distinct, non-antipodal spheres
    antipodal_pairs: int


def _kissing_vectors(w: WindowSpec):
    vr2 = Fraction(2, 3)  # circumradius^2 of the window
    fibers = []
    for h in glue_elements():
        off4 = x4(h)
        m8 = l8_floor(h)
        for y in enumerate_up_to(l4(), off4, (4 - m8) / 2 + vr2):
            v4 = tuple(a + b for a, b in zip(y, off4))
            npar = par_inner(v4, v4)
            if 2 * npar + m8 > 4 or not window_contains(v4, w):
                continue
            need = 4 - 2 * npar
            if not need.is_rational():
                continue
            off8 = x8(h)
            vecs8 = []
            for y8 in enumerate_up_to(l8(), off8, need.a):
                v8 = tuple(a + b for a, b in zip(y8, off8))
                if (any(v8) or any(v4)) and norm(l8(), v8) == need.a:
                    vecs8.append(v8)
            if vecs8:
                fibers.append((h, v4, vecs8))
    return fibers


def kissing_configuration(w: WindowSpec | None = None) -> KissingReport:
    """Spheres touching the sphere at the origin for a singular centering."""
    w = w or make_window()
    if not w.singular:
        raise ValueError("kissing configuration needs a singular (zero) centering")
    fibers = _kissing_vectors(w)
    count = sum(len(v) for _, _, v in fibers)
    if count != 378:
        raise AssertionError(f"kissing count {count} differs from 378")

    # integer L8 parts (times 6) for fast exact Gram products
    G8 = np.array([[int(x) for x in row] for row in l8().gram], dtype=np.int64)
    rows, owner = [], []
    for fi, (_, _, vecs8) in enumerate(fibers):
        for v in vecs8:
            rows.append([int(6 * x) for x in v])
            owner.append(fi)
    X = np.array(rows, dtype=np.int64)
    ip8 = X @ G8 @ X.T  # 36 * (x8 . y8)
    par = [[2 * par_inner(a[1], b[1]) for b in fibers] for a in fibers]
    tally: Counter = Counter()
    n = len(rows)
    for i in range(n):
        fi = owner[i]
        for j in range(i + 1, n):
            tally[(fi, owner[j], int(ip8[i, j]))] += 1
    cosines: Counter = Counter()
    antipodal = 0
    for (fi, fj, q), k in tally.items():
        c = (par[fi][fj] + Fraction(q, 36)) / 4
        if c == -1:
            antipodal += k
        else:
            cosines[c] += k
    per = tuple((h, v4, len(v)) for h, v4, v in fibers)
    return KissingReport(count, per, cosines, antipodal)


# ----------------------------------------------------------------- density


def exact_density(w: WindowSpec | None = None) -> Fraction:
    """(1/2) |V_perp| |H| delta4 delta8 from the exact window area and lattice dets."""
    from .laminate import center_density

    area = window_area(w)
    if not area.is_rational():
        raise AssertionError("window area is irrational")
    return Fraction(1, 2) * area.a * len(glue_elements()) * center_density(l4()) * center_density(l8())


@dataclass(frozen=True)
class DensityEstimate:
    exact: Fraction
    empirical: float
    approx: Fraction
    fibers: int
    radius_sq: Fraction


def density_estimate(w: WindowSpec, coord_bound: int, patch: Patch | None = None) -> DensityEstimate:
    """Empirical center density from the fibers in a parallel-space disc.

    The disc radius is the largest one the coordinate box is guaranteed to
    cover.  Each fiber is a translate of L8, contributing 1/sqrt(det L8)
    centers per unit 8-volume; the sqrt(2) dilation doubles parallel areas.
    """
    patch = patch or generate_patch(w, coord_bound)
    R2 = patch.complete_radius_sq()
    n = sum(1 for p in patch.points if p.par_norm() <= R2) if R2 > 0 else 0
    emp = 0.0 if R2 <= 0 else n / (2 * math.pi * float(R2)) / 96
    return DensityEstimate(exact_density(w), emp, Fraction(emp).limit_denominator(10**6), n, R2)


def find_period(patch: Patch, max_checks: int | None = None) -> tuple | None:
    """Search for a translation mapping the admitted fiber set into itself.

    Any period t must send a central fiber p0 to another fiber, so the
    candidates are ``q - p0``.  A candidate is rejected as soon as some
    fiber p with ``p + t`` inside the coordinate box has ``p + t`` missing.
    Returns the first surviving translation (as 6 x L4 coordinates) or None.
    """
    pts = patch.points
    if not pts:
        return None
    B6 = 6 * patch.coord_bound
    keys = [p.key for p in pts]
    p0 = min(keys, key=lambda k: sum(v * v for v in k))
    for q in keys[: max_checks or len(keys)]:
        t = tuple(a - b for a, b in zip(q, p0))
        if not any(t):
            continue
        broken = False
        for k in keys:
            s = tuple(a + b for a, b in zip(k, t))
            if all(-B6 <= v < B6 for v in s) and s not in patch.index:
                broken = True
                break
        if not broken:
            return t
    return None


# ------------------------------------------------------------------ tiling


class TilingError(ValueError):
    """The special centers do not form a triangle/square/rhombus tiling."""


RING_ORBIT_REP: Glue = glue("5/6", "1/3", "5/6", "1/3")
TILE_KINDS = ("triangle", "square", "rhombus")
_ROOT3_HALF = QSqrt3(0, Fraction(1, 2))
_CORNERS = {
    (QSqrt3(Fraction(1, 2)),) * 3: "triangle",
    (QSqrt3(0),) * 4: "square",
    (-_ROOT3_HALF, -_ROOT3_HALF, _ROOT3_HALF, _ROOT3_HALF): "rhombus",
}


@lru_cache(maxsize=None)
def separation_table(max_sep: Fraction = Fraction(2)) -> tuple:
    """Differences ``(6 z, glue, z_par.z_par)`` two admitted fibers can have with par-norm <= max_sep."""
    diam = Fraction(8, 3)
    out = []
    for g in glue_elements():
        off = x4(g)
        for y in enumerate_up_to(l4(), off, Fraction(max_sep) + diam):
            z = tuple(a + b for a, b in zip(y, off))
            npar, nperp = split_norms(z)
            if any(z) and npar <= max_sep and nperp <= diam:
                out.append((tuple(int(6 * v) for v in z), g, npar))
    out.sort(key=lambda t: (t[2], t[0]))
    return tuple(out)


def _integer_norms(K: np.ndarray, gram=PAR_GRAM) -> tuple[np.ndarray, np.ndarray]:
    """``36 x.x = a + b sqrt3`` under ``gram`` for the rows of ``K = 6 x4``."""
    A = np.array([[int(g.a) for g in row] for row in gram], dtype=np.int64)
    B = np.array([[int(g.b) for g in row] for row in gram], dtype=np.int64)
    return np.einsum("ni,ij,nj->n", K, A, K), np.einsum("ni,ij,nj->n", K, B, K)


def _within(na: np.ndarray, nb: np.ndarray, r: int) -> np.ndarray:
    """Exact ``x_par.x_par <= r^2`` from :func:`_par_integer_norms`."""
    return _signs(36 * r * r - na, -nb) >= 0


def _pair_lookup(K: np.ndarray, table: tuple) -> list[tuple[np.ndarray, np.ndarray, int]]:
    """For each table entry t, the index pairs (i, j) with ``K[j] = K[i] + 6 z_t``."""
    lo = K.min(axis=0) - 1
    span = K.max(axis=0) - lo + 2
    weights = np.cumprod(np.concatenate(([1], span[:-1])))
    codes = (K - lo) @ weights
    order = np.argsort(codes)
    sorted_codes = codes[order]
    out = []
    for t, (z6, _, _) in enumerate(table):
        T = K + np.array(z6, dtype=np.int64)
        ok = ((T - lo) >= 0).all(axis=1) & ((T - lo) < span).all(axis=1)
        tc = (T[ok] - lo) @ weights
        pos = np.searchsorted(sorted_codes, tc)
        pos = np.minimum(pos, len(sorted_codes) - 1)
        hit = sorted_codes[pos] == tc
        i = np.flatnonzero(ok)[hit]
        j = order[pos[hit]]
        if len(i):
            out.append((i, j, t))
    return out


@dataclass(frozen=True)
class Tile:
    kind: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Tiling:
    """Special centers joined at the tile edge length.

    Indices refer to ``patch.points``.  ``shortest`` is the smallest
    parallel separation in the patch, ``edge_sq`` the squared edge length
    (parallel L4 norm; true planar lengths are sqrt(2) times larger).
    ``rings`` maps each classified vertex to its number of ring fibers.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    shortest: QSqrt3
    edge_sq: QSqrt3
    special_separations: tuple[QSqrt3, ...]
    tiles: tuple[Tile, ...]
    rings: dict
    trusted_radius: int

    @property
    def counts(self) -> Counter:
        return Counter(t.kind for t in self.tiles)

    @property
    def complete_rings(self) -> int:
        return sum(1 for v in self.rings.values() if v == 12)


def extract_tiling(patch: Patch, max_sep: Fraction = Fraction(2)) -> Tiling:
    """Tiling of the parallel plane by the special class of centers.

    A center is special when no other center lies at the smallest parallel
    separation from it.  The edge length is the smallest separation that
    every special center has to another special center; the smaller
    separation 1/3 does occur between special centers, but only as the short
    diagonal of a rhombus.  Only regions the box is guaranteed to cover are
    trusted: specialness within ``R - m``, edges within ``R - 2m``, faces
    and rings within ``R - 4m``, where ``m >= sqrt(max_sep)``.
    """
    if not patch.points:
        raise TilingError("empty patch")
    K = np.array([p.key for p in patch.points], dtype=np.int64)
    na, nb = _integer_norms(K)
    R2 = patch.complete_radius_sq()
    R = math.isqrt(math.floor(R2)) if R2 > 0 else 0
    m = math.isqrt(math.ceil(Fraction(max_sep))) + 1
    r_special, r_core, r_face = R - m, R - 2 * m, R - 4 * m
    if r_face < 1:
        raise TilingError(f"patch of bound {patch.coord_bound} is too small for a trusted tiling region")
    in_special = _within(na, nb, r_special)
    in_core = _within(na, nb, r_core)
    in_face = _within(na, nb, r_face)

    table = separation_table(Fraction(max_sep))
    pairs = _pair_lookup(K, table)
    present = [t for i, j, t in pairs if in_special[i].any()]
    if not present:
        raise TilingError("no center has a neighbor within the separation bound")
    shortest = min(table[t][2] for t in present)

    touched = np.zeros(len(K), dtype=bool)
    for i, j, t in pairs:
        if table[t][2] == shortest:
            touched[i] = True
    special = in_special & ~touched

    # separations realised between special centers, per center
    by_value: dict[QSqrt3, np.ndarray] = {}
    links: dict[QSqrt3, list[tuple[np.ndarray, np.ndarray, int]]] = defaultdict(list)
    for i, j, t in pairs:
        keep = special[i] & special[j]
        if keep.any():
            v = table[t][2]
            seen = by_value.setdefault(v, np.zeros(len(K), dtype=bool))
            seen[i[keep]] = True
            links[v].append((i[keep], j[keep], t))
    values = sorted(by_value)
    core = special & in_core
    if not core.any():
        raise TilingError("no special center in the trusted region")
    edge_sq = next((v for v in values if by_value[v][core].all()), None)
    if edge_sq is None:
        raise TilingError("no separation is shared by every special center")

    nbrs: dict[int, list[tuple[int, int]]] = defaultdict(list)
    edges = set()
    for i, j, t in links[edge_sq]:
        for a, b in zip(i.tolist(), j.tolist()):
            nbrs[a].append((b, t))
            if a < b:
                edges.add((a, b))
    pc = {t: par_coords([Fraction(v, 6) for v in table[t][0]]) for t in {t for lst in nbrs.values() for _, t in lst}}
    order = {a: [b for b, _ in sorted(lst, key=lambda bt: AngleKey(pc[bt[1]]))] for a, lst in nbrs.items()}
    step = {(a, b): t for a, lst in nbrs.items() for b, t in lst}

    tiles: dict[frozenset, Tile] = {}
    done: set[tuple[int, int]] = set()
    for a in sorted(order):
        if not in_face[a]:
            continue
        for b in order[a]:
            if (a, b) in done:
                continue
            face = [a]
            u, v = a, b
            while True:
                done.add((u, v))
                ring = order.get(v)
                if ring is None:
                    raise TilingError(f"tile walk left the trusted region at center {v}")
                u, v = v, ring[ring.index(u) - 1]
                if u == a:
                    break
                face.append(u)
                if len(face) > 12:
                    raise TilingError(f"face around center {a} is not closed by a tile")
            key = frozenset(face)
            if key in tiles:
                continue
            n = len(face)
            corners = []
            for k in range(n):
                z_in = table[step[(face[k], face[k - 1])]][0]
                z_out = table[step[(face[k], face[(k + 1) % n])]][0]
                ip = par_inner([Fraction(x, 6) for x in z_in], [Fraction(x, 6) for x in z_out])
                corners.append(ip / edge_sq)
            kind = _CORNERS.get(tuple(sorted(corners)))
            if kind is None:
                raise TilingError(
                    f"face {face} with corner cosines {[str(c) for c in corners]} is not a tile"
                )
            tiles[key] = Tile(kind, tuple(face))

    ring_members = set(dict(orbits())[RING_ORBIT_REP])
    third = QSqrt3(Fraction(1, 3))
    rings: Counter = Counter()
    vertices_face = set(np.flatnonzero(special & in_face).tolist()) & set(order)
    for i, j, t in pairs:
        if table[t][2] == third and table[t][1] in ring_members:
            for a in i.tolist():
                if a in vertices_face:
                    rings[a] += 1
    ring_sizes = {a: rings.get(a, 0) for a in sorted(vertices_face)}

    return Tiling(
        vertices=tuple(sorted(order)),
        edges=tuple(sorted(edges)),
        shortest=shortest,
        edge_sq=edge_sq,
        special_separations=tuple(values),
        tiles=tuple(sorted(tiles.values(), key=lambda t: (TILE_KINDS.index(t.kind), t.vertices))),
        rings=ring_sizes,
        trusted_radius=r_face,
    )


# -------------------------------------------------------------- patch files


def patch_records(patch: Patch) -> list[dict]:
    """JSON-ready records ``{glue, c4, perp_norm}`` with exact values as strings."""
    return [
        {
            "glue": [str(x) for x in p.h],
            "c4": list(p.c4),
            "perp_norm": str(p.perp_norm()),
        }
        for p in patch.points
    ]


def patch_from_records(records: Sequence[dict], w: WindowSpec, coord_bound: int | None = None) -> Patch:
    """Rebuild a patch and re-check every record against ``w``."""
    from .exactnum import parse_scalar

    points = []
    for r in records:
        p = PackedPoint(glue(*r["glue"]), tuple(int(c) for c in r["c4"]))
        if tuple(Fraction(x) for x in r["glue"]) != p.h:
            raise ValueError(f"glue {r['glue']} is not reduced mod 1")
        points.append(p)
    if points:
        K = np.array([p.key for p in points], dtype=np.int64)
        bad = np.flatnonzero(~_admitted_mask(K, w))
        if len(bad):
            raise ValueError(f"record {records[bad[0]]} is not admitted by the window")
        na, nb = _integer_norms(K, PERP_GRAM)
        for r, a, b in zip(records, na.tolist(), nb.tolist()):
            want = QSqrt3(Fraction(a, 36), Fraction(b, 36))
            if "perp_norm" in r and parse_scalar(r["perp_norm"]) != want:
                raise ValueError(f"record {r} has perp_norm {want}")
    if coord_bound is None:
        coord_bound = max((abs(c) for p in points for c in p.c4), default=1)
    return Patch(w, coord_bound, points)


# --------------------------------------------------------------------- svg

_TILE_FILL = {"triangle": "#f4d35e", "square": "#7fb7be", "rhombus": "#ee964b"}


def render_svg(patch: Patch, tiling: Tiling | None = None, size: int = 800) -> str:
    """SVG of the projected centers in the parallel plane, with tiles if given."""
    s2 = math.sqrt(2)

    def xy(p: PackedPoint) -> tuple[float, float]:
        a, b = par_coords(p.x4)
        return s2 * float(a), s2 * float(b)

    if tiling is not None:
        r = tiling.trusted_radius
        keep = [i for i, p in enumerate(patch.points) if p.par_norm() <= r * r]
    else:
        R2 = patch.complete_radius_sq()
        keep = [i for i, p in enumerate(patch.points) if R2 > 0 and p.par_norm() <= R2]
    coords = {i: xy(patch.points[i]) for i in keep}
    if tiling is not None:
        coords.update({v: xy(patch.points[v]) for t in tiling.tiles for v in t.vertices})
    extent = max((max(abs(x), abs(y)) for x, y in coords.values()), default=1.0) * 1.05 or 1.0
    scale = size / (2 * extent)

    def pt(i: int) -> str:
        x, y = coords[i]
        return f"{(x + extent) * scale:.3f},{(extent - y) * scale:.3f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if tiling is not None:
        for t in tiling.tiles:
            pts = " ".join(pt(v) for v in t.vertices)
            out.append(f'<polygon points="{pts}" fill="{_TILE_FILL[t.kind]}" stroke="#333" stroke-width="1"/>')
    dot = max(1.0, 0.06 * scale)
    for i in keep:
        cx, cy = pt(i).split(",")
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{dot:.3f}" fill="#222"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
