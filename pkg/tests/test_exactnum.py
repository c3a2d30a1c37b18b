import itertools
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from latglue.exactnum import SQRT3, QSqrt3, det, exact_sqrt, ldlt, parse_scalar

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=60)
scalars = st.builds(QSqrt3, fractions, fractions)


def test_square_of_one_plus_root():
    x = 1 + SQRT3
    assert x * x == QSqrt3(4, 2)


def test_irrational_split_norms_add_up():
    assert QSqrt3(Fraction(4, 3), Fraction(2, 3)) + QSqrt3(Fraction(4, 3), Fraction(-2, 3)) == Fraction(8, 3)


def test_inverse_by_conjugate():
    inv = 1 / QSqrt3(1, 1)
    assert inv == QSqrt3(Fraction(-1, 2), Fraction(1, 2))
    assert inv * QSqrt3(1, 1) == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QSqrt3(1, 1) / QSqrt3(0)


def test_ordering_examples():
    assert QSqrt3(Fraction(4, 3), Fraction(2, 3)) < Fraction(8, 3)
    assert SQRT3 < Fraction(7, 4)
    assert SQRT3 > Fraction(173, 100)
    x = QSqrt3(Fraction(2, 3), Fraction(-1, 3))
    assert not x < x and x == x


def test_compare_against_high_precision_floats():
    rng = random.Random(20261019)
    mpmath.mp.dps = 60
    r3 = mpmath.sqrt(3)

    def draw():
        return QSqrt3(Fraction(rng.randint(-400, 400), rng.randint(1, 40)), Fraction(rng.randint(-400, 400), rng.randint(1, 40)))

    for _ in range(10_000):
        x, y = draw(), draw()
        if rng.random() < 0.05:
            y = x
        fx = mpmath.mpf(x.a.numerator) / x.a.denominator + r3 * mpmath.mpf(x.b.numerator) / x.b.denominator
        fy = mpmath.mpf(y.a.numerator) / y.a.denominator + r3 * mpmath.mpf(y.b.numerator) / y.b.denominator
        want = (fx > fy) - (fx < fy)
        got = (x > y) - (x < y)
        assert got == want, (x, y)


def test_near_ties_are_decided_exactly():
    # convergents of sqrt(3) sit extremely close to it
    for p, q in [(97, 56), (1351, 780), (18817, 10864), (262087, 151316)]:
        d = QSqrt3(Fraction(p, q), -1)
        assert d.sign() == (1 if p * p > 3 * q * q else -1)


@given(scalars, scalars, scalars)
def test_conjugation_is_ring_homomorphism(x, y, z):
    c = QSqrt3.conjugate
    assert c(x + y * z) == c(x) + c(y) * c(z)
    assert c(x * y - z) == c(x) * c(y) - c(z)


@given(scalars, scalars)
def test_field_norm_multiplicative(x, y):
    assert (x * y).field_norm() == x.field_norm() * y.field_norm()


@given(scalars, scalars, scalars)
def test_field_axioms(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x


@given(scalars)
def test_str_round_trip(x):
    assert parse_scalar(str(x)) == x


@pytest.mark.parametrize(
    "text,want",
    [
        ("3", QSqrt3(3)),
        ("-2/3", QSqrt3(Fraction(-2, 3))),
        ("4/3-2/3√3", QSqrt3(Fraction(4, 3), Fraction(-2, 3))),
        ("-√3", QSqrt3(0, -1)),
        ("1/2+sqrt3", QSqrt3(Fraction(1, 2), 1)),
        ("-1/4-1/12r3", QSqrt3(Fraction(-1, 4), Fraction(-1, 12))),
    ],
)
def test_parse(text, want):
    assert parse_scalar(text) == want


def test_hash_consistent_with_rationals():
    assert hash(QSqrt3(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert len({QSqrt3(2), Fraction(2), 2}) == 1


def test_exact_sqrt():
    assert exact_sqrt(Fraction(1024)) == 32
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        exact_sqrt(Fraction(2))


def test_ldlt_examples():
    f = ldlt([[4, 2], [2, 4]])
    assert f.D == (4, 3)
    assert f.positive_definite
    g = ldlt([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert g.D == (1, 1, 1)
    assert all(g.L[i][j] == (i == j) for i in range(3) for j in range(3))


def test_ldlt_indefinite_is_reported():
    f = ldlt([[1, 2], [2, 1]])
    assert not f.positive_definite


def _random_spd(rng, n):
    A = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
    G = [[sum(A[i][k] * A[j][k] for k in range(n)) + (i == j) for j in range(n)] for i in range(n)]
    return G


@given(st.integers(1, 6), st.integers(0, 10**9))
def test_ldlt_reconstructs(n, seed):
    G = _random_spd(random.Random(seed), n)
    f = ldlt(G)
    assert f.positive_definite and f.complete
    R = f.reconstruct()
    assert [[R[i][j] for j in range(n)] for i in range(n)] == G


def _leibniz(M):
    n = len(M)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        p = Fraction(1)
        for i in range(n):
            p *= M[i][perm[i]]
        total += -p if inv % 2 else p
    return total


@given(st.integers(1, 5), st.integers(0, 10**9))
def test_det_matches_leibniz(n, seed):
    rng = random.Random(seed)
    M = [[Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
    assert det(M) == _leibniz(M)
