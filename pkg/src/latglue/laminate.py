"""Gluing L8 and L4 into the 12-dimensional lattice L12.

``L12 = (L8 + L4) + {x8(h) + x4(h) : h in H}``.  Coordinates are the 8 L8
basis coordinates followed by the 4 L4 basis coordinates.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactnum import det, exact_sqrt
from .glue import (
    Glue,
    GlueError,
    H1,
    H2,
    H3,
    H4,
    depth4,
    depth8,
    format_glue,
    glue_elements,
    l4,
    l8,
    orbits,
    x4,
    x8,
)
from .lattice import GramLattice, direct_sum, enumerate_up_to, norm

__all__ = [
    "L12Vector",
    "GluedLattice",
    "build_l12",
    "Table3Row",
    "table3",
    "kissing_number",
    "densities",
    "hermite_normal_form",
    "l12_basis",
    "export_gram_l12",
    "format_gram",
]


@dataclass(frozen=True)
class L12Vector:
    h: Glue
    c8: tuple[int, ...]
    c4: tuple[int, ...]

    def coords(self) -> tuple[Fraction, ...]:
        g = x8(self.h) + x4(self.h)
        return tuple(Fraction(c) + o for c, o in zip(self.c8 + self.c4, g))

    def norm(self) -> Fraction:
        return norm(build_l12().base, self.coords())


class GluedLattice:
    """L8 + L4 together with the glue map h -> (x8(h), x4(h))."""

    def __init__(self) -> None:
        self.l8: GramLattice = l8()
        self.l4: GramLattice = l4()
        self.base: GramLattice = direct_sum(self.l8, self.l4, label="L8+L4")

    def glue_vector(self, h: Sequence) -> tuple[Fraction, ...]:
        return x8(h) + x4(h)

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        return self.base.inner(u, v)

    def class_vectors(self, h: Sequence, bound) -> list[tuple[Fraction, ...]]:
        """All vectors of the coset of ``h`` with norm at most ``bound`` (origin excluded)."""
        off = self.glue_vector(h)
        out = []
        for y in enumerate_up_to(self.base, off, bound):
            v = tuple(a + b for a, b in zip(y, off))
            if any(v):
                out.append(v)
        return out

    def class_census(self, h: Sequence, bound) -> Counter:
        """Counter ``norm -> number of coset vectors`` up to ``bound``."""
        return Counter(self.base.inner(v, v) for v in self.class_vectors(h, bound))


@lru_cache(maxsize=None)
def build_l12(threads: int = 1) -> GluedLattice:
    """Assemble L12 and certify minimal norm 4 and integrality."""
    L = GluedLattice()
    gens = [L.glue_vector(h) for h in (H1, H2, H3, H4)]
    for i, u in enumerate(gens):
        for v in gens[i:]:
            ip = L.inner(u, v)
            if ip.denominator != 1:
                raise GlueError(f"glue inner product {ip} is not integral")
        if L.inner(u, u) % 2:
            raise GlueError("glue generator has odd norm")

    def scan(h):
        c = L.class_census(h, 4)
        return h, (min(c) if c else None)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        for h, m in ex.map(scan, glue_elements()):
            if m is not None and m < 4:
                raise GlueError(f"class {format_glue(h)} has a vector of norm {m} < 4")
    return L


@dataclass(frozen=True)
class Table3Row:
    h: Glue
    orbit_size: int
    min_norm: Fraction
    count: int
    number: int


def table3(threads: int = 1) -> list[Table3Row]:
    """Short vectors of L12 per nontrivial orbit, by direct enumeration.

    Each enumerated count is cross-checked against ``tau8(h) * tau4(h)``.
    """
    L = build_l12()

    def row(item):
        rep, members = item
        d8, t8 = depth8(rep)
        d4_, t4 = depth4(rep)
        bound = d8 + d4_
        census = L.class_census(rep, bound)
        m = min(census)
        if m != bound or census[m] != t8 * t4:
            raise GlueError(
                f"class {format_glue(rep)}: enumeration gives {census[m]} vectors of norm {m}, "
                f"product formula gives {t8 * t4} of norm {bound}"
            )
        return Table3Row(rep, len(members), m, census[m], census[m] * len(members))

    items = [o for o in orbits() if any(o[0])]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        return list(ex.map(row, items))


def kissing_number(threads: int = 1) -> tuple[int, dict[Glue, int]]:
    """Total number of norm-4 vectors of L12 and the count per glue class."""
    L = build_l12()

    def count(h):
        return h, L.class_census(h, 4).get(Fraction(4), 0)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as ex:
        per = dict(ex.map(count, glue_elements()))
    return sum(per.values()), per


def center_density(lat: GramLattice, min_norm=4) -> Fraction:
    """rho^n / sqrt(det) with rho half the minimal distance; det must be a square."""
    rho_sq = Fraction(min_norm) / 4
    n = lat.dimension
    if n % 2:
        raise ValueError("odd dimension gives an irrational rho^n in general")
    return rho_sq ** (n // 2) / exact_sqrt(lat.determinant)


def densities() -> tuple[Fraction, Fraction, Fraction]:
    """Exact center densities (delta8, delta4, delta12)."""
    d8 = center_density(l8())
    d4_ = center_density(l4())
    d12 = len(glue_elements()) * d8 * d4_
    gram = export_gram_l12()
    d12_direct = 1 / exact_sqrt(det(gram))
    if d12 != d12_direct:
        raise GlueError(f"delta12 from glue count {d12} differs from Gram determinant {d12_direct}")
    return d8, d4_, d12


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form; zero rows are dropped."""
    A = [list(r) for r in rows]
    m = len(A[0]) if A else 0
    out_row = 0
    for col in range(m):
        # Euclid on this column among the remaining rows
        while True:
            nz = [i for i in range(out_row, len(A)) if A[i][col] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][col]))
            A[out_row], A[p] = A[p], A[out_row]
            done = True
            for i in range(out_row + 1, len(A)):
                if A[i][col]:
                    q = A[i][col] // A[out_row][col]
                    A[i] = [a - q * b for a, b in zip(A[i], A[out_row])]
                    if A[i][col]:
                        done = False
            if done:
                break
        if out_row < len(A) and A[out_row][col] != 0:
            if A[out_row][col] < 0:
                A[out_row] = [-a for a in A[out_row]]
            piv = A[out_row][col]
            for i in range(out_row):
                q = A[i][col] // piv
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[out_row])]
            out_row += 1
    return [r for r in A[:out_row]]


@lru_cache(maxsize=None)
def l12_basis() -> tuple[tuple[Fraction, ...], ...]:
    """A Z-basis of L12 in L8+L4 coordinates (Hermite normal form of the generators)."""
    L = build_l12()
    n = L.base.dimension
    scale = 6
    rows = [[scale * int(i == j) for j in range(n)] for i in range(n)]
    for h in (H1, H2, H3, H4):
        rows.append([int(scale * c) for c in L.glue_vector(h)])
    hnf = hermite_normal_form(rows)
    if len(hnf) != n:
        raise GlueError("generators of L12 do not have full rank")
    B = [[Fraction(x, scale) for x in r] for r in hnf]
    # greedy pairwise reduction b_i <- b_i -/+ b_j while it shortens b_i
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                ip = L.inner(B[i], B[j])
                nj = L.inner(B[j], B[j])
                if 2 * abs(ip) > nj:
                    sgn = 1 if ip > 0 else -1
                    B[i] = [a - sgn * b for a, b in zip(B[i], B[j])]
                    changed = True
    return tuple(tuple(r) for r in B)


def export_gram_l12() -> list[list[int]]:
    """Integral 12x12 Gram matrix of L12 in the basis of :func:`l12_basis`."""
    L = build_l12()
    B = l12_basis()
    G = [[L.inner(u, v) for v in B] for u in B]
    if any(x.denominator != 1 for row in G for x in row):
        raise GlueError("L12 Gram matrix is not integral")
    d = det(G)
    want = L.base.determinant / len(glue_elements()) ** 2
    if d != want:
        raise GlueError(f"L12 Gram determinant {d} differs from det(L8) det(L4) / |H|^2 = {want}")
    return [[int(x) for x in row] for row in G]


def format_gram(G: Sequence[Sequence[int]]) -> str:
    width = max(len(str(x)) for row in G for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in G) + "\n"
