"""The 36-element glue group H of the holes of L8 = A2+A2+D4.

Glue elements are 4-vectors modulo 1 with denominators dividing 6.  The
same 4-vectors are literal coordinates of glue for L4 = A2+A2, while for L8
they are mapped through their generator exponents onto the holes of the
three components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .lattice import GramLattice, a2, coset_shortest, d4, direct_sum, discriminant_classes, reduce_mod1

Glue = tuple[Fraction, Fraction, Fraction, Fraction]
Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "Glue",
    "GlueError",
    "GeneratorExponents",
    "H1",
    "H2",
    "H3",
    "H4",
    "SIGMA",
    "RHO2",
    "RHO3",
    "RHO4",
    "AUT_GENERATORS",
    "glue",
    "glue_add",
    "glue_neg",
    "glue_scale",
    "glue_elements",
    "decompose",
    "reconstruct",
    "act",
    "matmul",
    "matrix_group",
    "aut_group",
    "orbits",
    "ORBIT_REPRESENTATIVES",
    "l8",
    "l4",
    "x8",
    "x4",
    "GlueRow",
    "table_l8",
    "table_l4",
    "PUBLISHED_TABLE1",
    "PUBLISHED_TABLE2",
    "format_glue",
]


class GlueError(ValueError):
    """A vector outside H, or a matrix that does not permute H."""


def glue(*entries) -> Glue:
    if len(entries) == 1 and not isinstance(entries[0], (int, Fraction, str)):
        entries = tuple(entries[0])
    if len(entries) != 4:
        raise GlueError(f"glue elements have 4 components, got {len(entries)}")
    return reduce_mod1(Fraction(e) for e in entries)  # type: ignore[return-value]


def glue_add(g: Glue, h: Glue) -> Glue:
    return reduce_mod1(a + b for a, b in zip(g, h))  # type: ignore[return-value]


def glue_neg(g: Glue) -> Glue:
    return reduce_mod1(-a for a in g)  # type: ignore[return-value]


def glue_scale(k: int, g: Glue) -> Glue:
    return reduce_mod1(k * a for a in g)  # type: ignore[return-value]


def format_glue(g: Sequence[Fraction]) -> str:
    return "[" + " ".join(str(Fraction(x)) for x in g) + "]"


H1 = glue("1/3", "1/3", "1/3", "1/3")
H2 = glue("1/3", "1/3", "2/3", "2/3")
H3 = glue("1/2", 0, "1/2", 0)
H4 = glue(0, "1/2", 0, "1/2")
ZERO: Glue = glue(0, 0, 0, 0)

SIGMA: Matrix = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))
RHO4: Matrix = ((0, 0, -1, 0), (0, 0, 0, -1), (1, 0, 0, 0), (0, 1, 0, 0))
RHO2: Matrix = ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))
RHO3: Matrix = ((0, -1, 0, 0), (1, -1, 0, 0), (0, 0, 0, -1), (0, 0, 1, -1))
AUT_GENERATORS: dict[str, Matrix] = {"sigma": SIGMA, "rho2": RHO2, "rho3": RHO3, "rho4": RHO4}


class GeneratorExponents(NamedTuple):
    alpha1: int
    alpha2: int
    beta3: int
    beta4: int


def reconstruct(e: GeneratorExponents | Sequence[int]) -> Glue:
    a1, a2_, b3, b4 = e
    out = ZERO
    for k, g in zip((a1, a2_, b3, b4), (H1, H2, H3, H4)):
        out = glue_add(out, glue_scale(k, g))
    return out


@lru_cache(maxsize=None)
def glue_elements() -> tuple[Glue, ...]:
    """All 36 elements of H, sorted lexicographically."""
    elems = {
        reconstruct((a1, a2_, b3, b4))
        for a1 in range(3)
        for a2_ in range(3)
        for b3 in range(2)
        for b4 in range(2)
    }
    return tuple(sorted(elems))


def decompose(h: Sequence) -> GeneratorExponents:
    """Exponents with ``h = a1 h1 + a2 h2 + b3 h3 + b4 h4 (mod 1)``."""
    h = glue(h)
    halves = glue_scale(3, h)  # thirds vanish, halves survive
    thirds = glue_scale(4, h)  # halves vanish, thirds are unchanged
    if any(x.denominator not in (1, 2) for x in halves) or any(x.denominator not in (1, 3) for x in thirds):
        raise GlueError(f"{format_glue(h)} is not in H")
    b3, b4 = int(2 * halves[0]), int(2 * halves[1])
    s, t = int(3 * thirds[0]), int(3 * thirds[2])
    # thirds parts of components 1 and 3 are (a1 + a2)/3 and (a1 + 2 a2)/3
    a2_ = (t - s) % 3
    a1 = (s - a2_) % 3
    e = GeneratorExponents(a1, a2_, b3, b4)
    if reconstruct(e) != h:
        raise GlueError(f"{format_glue(h)} is not in H")
    return e


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n, m, p = len(A), len(B), len(B[0])
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)) for i in range(n))


def act(h: Sequence, M: Matrix) -> Glue:
    """Right action ``h . M (mod 1)``; raises if the image leaves H."""
    h = glue(h)
    img = glue(tuple(sum(h[i] * M[i][j] for i in range(4)) for j in range(4)))
    if img not in set(glue_elements()):
        raise GlueError(f"{format_glue(h)} . M = {format_glue(img)} is not in H")
    return img


def matrix_group(gens: Sequence[Matrix], limit: int = 10_000) -> tuple[Matrix, ...]:
    """Closure of a set of integer matrices under multiplication."""
    n = len(gens[0])
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                p = matmul(g, s)
                if p not in group:
                    group.add(p)
                    nxt.append(p)
                    if len(group) > limit:
                        raise RuntimeError("matrix group is larger than the limit")
        frontier = nxt
    return tuple(sorted(group))


@lru_cache(maxsize=None)
def aut_group() -> tuple[Matrix, ...]:
    """The 48 matrices generated by sigma, rho2, rho3, rho4."""
    return matrix_group(list(AUT_GENERATORS.values()))


ORBIT_REPRESENTATIVES: tuple[Glue, ...] = (
    ZERO,
    H3,
    H1,
    glue("1/3", "1/3", 0, 0),
    glue("5/6", "1/3", "5/6", "1/3"),
    glue("5/6", "1/3", "1/2", 0),
)


@lru_cache(maxsize=None)
def orbits() -> tuple[tuple[Glue, tuple[Glue, ...]], ...]:
    """Partition of H into Aut(H)-orbits, in the row order of the L8 table.

    Each orbit lists its representative first and the remaining members in
    lexicographic order.
    """
    group = aut_group()
    seen: set[Glue] = set()
    out = []
    reps = list(ORBIT_REPRESENTATIVES) + list(glue_elements())
    for r in reps:
        if r in seen:
            continue
        orb = {act(r, M) for M in group}
        seen |= orb
        out.append((r, (r,) + tuple(sorted(orb - {r}))))
    if len(seen) != 36:
        raise GlueError("orbits do not cover H")
    return tuple(out)


@lru_cache(maxsize=None)
def l8() -> GramLattice:
    return direct_sum(a2("A2"), a2("A2"), d4("D4"), label="L8")


@lru_cache(maxsize=None)
def l4() -> GramLattice:
    return direct_sum(a2("A2"), a2("A2"), label="L4")


@lru_cache(maxsize=None)
def _d4_glue() -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    nonzero = [c for c in discriminant_classes(d4(), 2) if any(c)]
    return nonzero[0], nonzero[1]


def x8(h: Sequence) -> tuple[Fraction, ...]:
    """L8 coordinates (in [0,1)) of the glue vector attached to ``h``."""
    a1, a2_, b3, b4 = decompose(h)
    d3, d4_ = _d4_glue()
    third = Fraction(1, 3)
    v = [a1 * third, a1 * third, a2_ * third, a2_ * third]
    v += [b3 * p + b4 * q for p, q in zip(d3, d4_)]
    return reduce_mod1(v)


def x4(h: Sequence) -> tuple[Fraction, ...]:
    """L4 coordinates of the glue vector attached to ``h`` (the 4-vector itself)."""
    return tuple(glue(h))


@dataclass(frozen=True)
class GlueRow:
    h: Glue
    orbit_size: int
    depth: Fraction
    tau: int


PUBLISHED_TABLE1 = {
    ZERO: (1, Fraction(4), 36),
    H3: (3, Fraction(2), 8),
    H1: (4, Fraction(4, 3), 3),
    glue("1/3", "1/3", 0, 0): (4, Fraction(8, 3), 9),
    glue("5/6", "1/3", "5/6", "1/3"): (12, Fraction(10, 3), 24),
    glue("5/6", "1/3", "1/2", 0): (12, Fraction(14, 3), 72),
}

PUBLISHED_TABLE2 = {
    ZERO: (1, Fraction(4), 12),
    H3: (3, Fraction(2), 4),
    H1: (4, Fraction(8, 3), 9),
    glue("1/3", "1/3", 0, 0): (4, Fraction(4, 3), 3),
    glue("5/6", "1/3", "5/6", "1/3"): (12, Fraction(2, 3), 1),
    glue("5/6", "1/3", "1/2", 0): (12, Fraction(4, 3), 2),
}


@lru_cache(maxsize=None)
def depth8(h: Glue) -> tuple[Fraction, int]:
    d, hits = coset_shortest(l8(), x8(h))
    return d, len(hits)


@lru_cache(maxsize=None)
def depth4(h: Glue) -> tuple[Fraction, int]:
    d, hits = coset_shortest(l4(), x4(h))
    return d, len(hits)


def _table(depth_fn, reference, name, check: bool) -> list[GlueRow]:
    rows = []
    for rep, members in orbits():
        d, t = depth_fn(rep)
        row = GlueRow(rep, len(members), d, t)
        if check:
            want = reference.get(rep)
            if want is None or (row.orbit_size, row.depth, row.tau) != want:
                raise GlueError(
                    f"{name} mismatch for {format_glue(rep)}: computed "
                    f"({row.orbit_size}, {row.depth}, {row.tau}), expected {want}"
                )
        rows.append(row)
    return rows


def table_l8(check: bool = True) -> list[GlueRow]:
    """Orbit size, depth and contact count in L8 for each orbit representative."""
    return _table(depth8, PUBLISHED_TABLE1, "L8 table", check)


def table_l4(check: bool = True) -> list[GlueRow]:
    """Orbit size, depth and contact count in L4 for each orbit representative."""
    return _table(depth4, PUBLISHED_TABLE2, "L4 table", check)
