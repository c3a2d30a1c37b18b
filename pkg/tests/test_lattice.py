import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from latglue.glue import glue_elements, x8
from latglue.lattice import (
    EnumerationCapError,
    GramLattice,
    a2,
    coset_shortest,
    d4,
    depth_and_count,
    direct_sum,
    discriminant_classes,
    enumerate_up_to,
    enumerate_with_norms,
    norm,
)


def brute_force(lat, offset, bound):
    """Box search; the box comes from a float inverse with a safety margin."""
    G = np.array([[float(x) for x in row] for row in lat.gram])
    inv = np.linalg.inv(G)
    n = lat.dimension
    box = [math.ceil(math.sqrt(float(bound) * inv[i, i])) + 2 for i in range(n)]
    out = []
    ranges = [range(-box[i] - math.ceil(abs(float(offset[i]))), box[i] + math.ceil(abs(float(offset[i]))) + 1) for i in range(n)]
    for y in itertools.product(*ranges):
        v = [a + Fraction(o) for a, o in zip(y, offset)]
        if norm(lat, v) <= bound:
            out.append(tuple(y))
    return sorted(out)


def random_gram(rng, n):
    while True:
        A = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        G = [[sum(A[i][k] * A[j][k] for k in range(n)) + (i == j) for j in range(n)] for i in range(n)]
        try:
            return GramLattice(G)
        except ValueError:
            continue


@settings(max_examples=40)
@given(st.integers(1, 4), st.integers(0, 10**9))
def test_enumeration_matches_box_search(n, seed):
    rng = random.Random(seed)
    lat = random_gram(rng, n)
    offset = [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(n)]
    bound = Fraction(rng.randint(1, 24), rng.randint(1, 3))
    assert enumerate_up_to(lat, offset, bound) == brute_force(lat, offset, bound)


def test_enumerate_with_norms_is_exact():
    lat = d4()
    for y, q in enumerate_with_norms(lat, (Fraction(1, 2), 0, 0, Fraction(1, 2)), 6):
        assert norm(lat, [a + b for a, b in zip(y, (Fraction(1, 2), 0, 0, Fraction(1, 2)))]) == q


def test_small_counts():
    assert len(enumerate_up_to(a2(), None, 4)) == 7
    assert len(enumerate_up_to(d4(), None, 4)) == 25
    assert len(enumerate_up_to(a2(), (Fraction(1, 3), Fraction(1, 3)), Fraction(4, 3))) == 3


@pytest.mark.parametrize(
    "lat,offset,want",
    [
        (a2(), (Fraction(1, 2), 0), (1, 2)),
        (a2(), (Fraction(1, 6), Fraction(1, 6)), (Fraction(1, 3), 1)),
        (a2(), (Fraction(1, 3), Fraction(1, 3)), (Fraction(4, 3), 3)),
        (a2(), (0, 0), (4, 6)),
        (d4(), (0, 0, 0, 0), (4, 24)),
    ],
)
def test_depth_examples(lat, offset, want):
    assert depth_and_count(lat, offset) == want


def test_d4_glue_classes_have_depth_two():
    classes = discriminant_classes(d4(), 2)
    assert len(classes) == 4
    for c in classes:
        if any(c):
            assert depth_and_count(d4(), c) == (2, 8)


def test_a2_glue_classes():
    classes = discriminant_classes(a2(), 2)
    assert len(classes) == 3
    assert (Fraction(1, 3), Fraction(1, 3)) in classes


def test_coset_shortest_matches_brute_force():
    lat = a2()
    rng = random.Random(3)
    for _ in range(30):
        off = (Fraction(rng.randint(-12, 12), 6), Fraction(rng.randint(-12, 12), 6))
        d, hits = coset_shortest(lat, off)
        pts = [(y, norm(lat, [a + b for a, b in zip(y, off)])) for y in brute_force(lat, off, 8)]
        pts = [(y, q) for y, q in pts if q > 0]
        best = min(q for _, q in pts)
        assert d == best
        assert hits == sorted(y for y, q in pts if q == best)


def test_direct_sum_examples():
    l8 = direct_sum(a2(), a2(), d4())
    assert l8.dimension == 8
    assert (l8.minimal_norm, l8.kissing_number) == (4, 36)
    l4 = direct_sum(a2(), a2())
    assert l4.kissing_number == 12


def test_depth_additive_over_components():
    l8 = direct_sum(a2(), a2(), d4())
    for h in glue_elements():
        v = x8(h)
        if not any(v[:2]) or not any(v[2:4]) or not any(v[4:]):
            continue
        parts = [depth_and_count(a2(), v[:2]), depth_and_count(a2(), v[2:4]), depth_and_count(d4(), v[4:])]
        d, t = depth_and_count(l8, v)
        assert d == sum(p[0] for p in parts)
        assert t == math.prod(p[1] for p in parts)


def test_depth_additive_with_trivial_components():
    l8 = direct_sum(a2(), a2(), d4())
    pieces = [(a2(), slice(0, 2)), (a2(), slice(2, 4)), (d4(), slice(4, 8))]
    for h in glue_elements():
        v = x8(h)
        live = [(lat, v[s]) for lat, s in pieces if any(v[s])]
        if not live:
            continue
        d, _ = depth_and_count(l8, v)
        assert d == sum(depth_and_count(lat, w)[0] for lat, w in live)


def test_cap_is_enforced(monkeypatch):
    with pytest.raises(EnumerationCapError):
        enumerate_up_to(a2(), None, 400, cap=10)
    monkeypatch.setenv("LATGLUE_CAP", "5")
    with pytest.raises(EnumerationCapError):
        enumerate_up_to(a2(), None, 4)


def test_rejects_indefinite_gram():
    with pytest.raises(ValueError):
        GramLattice(((1, 2), (2, 1)))


def test_offsets_outside_unit_cube():
    lat = a2()
    d1, h1 = coset_shortest(lat, (Fraction(1, 3), Fraction(1, 3)))
    d2, h2 = coset_shortest(lat, (Fraction(7, 3), Fraction(-2, 3)))
    assert d1 == d2
    shifted = [tuple(a - s for a, s in zip(y, (2, -1))) for y in h1]
    assert sorted(shifted) == h2
