from fractions import Fraction

import numpy as np

from latglue.exactnum import det, ldlt
from latglue.glue import depth4, depth8, glue_elements, orbits
from latglue.laminate import (
    build_l12,
    densities,
    export_gram_l12,
    format_gram,
    hermite_normal_form,
    kissing_number,
    l12_basis,
    table3,
)


def test_table3_rows():
    rows = table3()
    assert [(r.orbit_size, r.min_norm, r.count, r.number) for r in rows] == [
        (3, 4, 32, 96),
        (4, 4, 27, 108),
        (4, 4, 27, 108),
        (12, 4, 24, 288),
        (12, 6, 144, 1728),
    ]


def test_table3_parallel_matches_serial():
    assert table3(threads=4) == table3(threads=1)


def test_product_formula_for_every_class():
    L = build_l12()
    for h in glue_elements():
        if not any(h):
            continue
        d = depth8(h)[0] + depth4(h)[0]
        census = L.class_census(h, d)
        assert min(census) == d
        assert census[d] == depth8(h)[1] * depth4(h)[1]


def test_kissing_number_breakdown():
    total, per = kissing_number()
    assert total == 648
    assert per[(Fraction(0),) * 4] == 48
    by_orbit = [sum(per[m] for m in members) for _, members in orbits()]
    assert by_orbit == [48, 96, 108, 108, 288, 0]


def test_densities():
    assert densities() == (Fraction(1, 96), Fraction(1, 12), Fraction(1, 32))


def test_gram_matrix():
    G = export_gram_l12()
    assert len(G) == 12 and all(len(r) == 12 for r in G)
    assert all(G[i][j] == G[j][i] for i in range(12) for j in range(12))
    assert det(G) == 1024
    assert all(G[i][i] == 4 for i in range(12))
    assert ldlt(G).positive_definite


def test_gram_text_format():
    text = format_gram(export_gram_l12())
    rows = text.splitlines()
    assert len(rows) == 12
    assert [[int(x) for x in r.split()] for r in rows] == export_gram_l12()


def test_random_vectors_integral_and_even():
    L = build_l12()
    B = np.array([[int(6 * x) for x in b] for b in l12_basis()], dtype=np.int64)
    G0 = np.array([[int(x) for x in row] for row in L.base.gram], dtype=np.int64)
    rng = np.random.default_rng(12)
    C = rng.integers(-3, 4, size=(1000, 12))
    V = C @ B  # 6 x coordinates in L8+L4
    P = V @ G0 @ V.T  # 36 x inner products
    assert (P % 36 == 0).all()
    assert (np.diag(P) // 36 % 2 == 0).all()
    G = np.array(export_gram_l12(), dtype=np.int64)
    assert (P // 36 == C @ G @ C.T).all()


def test_basis_spans_glue():
    # each glue vector is an integer combination of the basis
    L = build_l12()
    B = l12_basis()
    M = [list(r) for r in B]
    for h in glue_elements():
        v = L.glue_vector(h)
        # solve x M = v exactly
        n = 12
        A = [[M[j][i] for j in range(n)] + [v[i]] for i in range(n)]
        for k in range(n):
            p = next(i for i in range(k, n) if A[i][k] != 0)
            A[k], A[p] = A[p], A[k]
            A[k] = [x / A[k][k] for x in A[k]]
            for i in range(n):
                if i != k and A[i][k]:
                    f = A[i][k]
                    A[i] = [a - f * b for a, b in zip(A[i], A[k])]
        assert all(Fraction(A[i][n]).denominator == 1 for i in range(n))


def test_hermite_normal_form():
    rows = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    H = hermite_normal_form(rows)
    assert all(H[i][j] == 0 for i in range(len(H)) for j in range(i))
    assert all(H[i][i] > 0 for i in range(len(H)))
    assert abs(det([[Fraction(x) for x in r] for r in rows])) == det([[Fraction(x) for x in r] for r in H])
