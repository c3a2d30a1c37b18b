from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from latglue.glue import (
    AUT_GENERATORS,
    H1,
    H2,
    H3,
    H4,
    PUBLISHED_TABLE1,
    PUBLISHED_TABLE2,
    SIGMA,
    GlueError,
    act,
    aut_group,
    decompose,
    depth4,
    depth8,
    glue,
    glue_add,
    glue_elements,
    glue_scale,
    l4,
    l8,
    orbits,
    reconstruct,
    table_l4,
    table_l8,
    x4,
    x8,
)
from latglue.lattice import norm

elements = st.sampled_from(glue_elements())


def test_group_order_and_exponent():
    H = glue_elements()
    assert len(H) == 36
    assert all(glue_scale(6, h) == glue(0, 0, 0, 0) for h in H)
    orders = Counter(min(k for k in range(1, 7) if glue_scale(k, h) == glue(0, 0, 0, 0)) for h in H)
    # Z3 x Z3 x Z2 x Z2
    assert orders == Counter({1: 1, 2: 3, 3: 8, 6: 24})


def test_closed_under_addition():
    H = set(glue_elements())
    assert all(glue_add(g, h) in H for g in H for h in H)


def test_decompose_example():
    assert tuple(decompose(glue("5/6", "1/3", "5/6", "1/3"))) == (1, 0, 1, 0)


@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1), st.integers(0, 1))
def test_decompose_inverts_reconstruct(a1, a2, b3, b4):
    assert tuple(decompose(reconstruct((a1, a2, b3, b4)))) == (a1, a2, b3, b4)


def test_decompose_rejects_outside():
    with pytest.raises(GlueError):
        decompose(glue("1/6", 0, 0, 0))


def test_sigma_exchanges_h1_h2():
    assert act(H1, SIGMA) == H2
    assert glue("1/3", "1/3", "-1/3", "-1/3") == H2


def test_rho3_cycles_d4_holes():
    rho3 = AUT_GENERATORS["rho3"]
    assert act(H3, rho3) == H4
    assert act(H4, rho3) == glue_add(H3, H4)
    assert act(glue_add(H3, H4), rho3) == H3


def test_identity_action():
    ident = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    assert all(act(h, ident) == h for h in glue_elements())


def test_act_rejects_matrix_leaving_h():
    M = ((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    with pytest.raises(GlueError):
        act(glue("1/2", 0, "1/2", 0), M)


def test_aut_group_has_48_elements():
    G = aut_group()
    assert len(G) == 48
    H = set(glue_elements())
    for M in G:
        assert {act(h, M) for h in H} == H


def test_orbits():
    orbs = orbits()
    assert sorted(len(m) for _, m in orbs) == [1, 3, 4, 4, 12, 12]
    assert [r for r, _ in orbs] == list(PUBLISHED_TABLE1)
    big = dict(orbs)[glue("5/6", "1/3", "5/6", "1/3")]
    assert len(big) == 12
    assert dict(orbs)[glue(0, 0, 0, 0)] == (glue(0, 0, 0, 0),)


@given(elements, st.sampled_from(aut_group()))
def test_depths_are_aut_invariant(h, M):
    g = act(h, M)
    assert depth8(g) == depth8(h)
    assert depth4(g) == depth4(h)


def test_table1():
    rows = table_l8()
    assert [(r.orbit_size, r.depth, r.tau) for r in rows] == [
        (1, 4, 36),
        (3, 2, 8),
        (4, Fraction(4, 3), 3),
        (4, Fraction(8, 3), 9),
        (12, Fraction(10, 3), 24),
        (12, Fraction(14, 3), 72),
    ]


def test_table2():
    rows = table_l4()
    assert [(r.orbit_size, r.depth, r.tau) for r in rows] == [
        (1, 4, 12),
        (3, 2, 4),
        (4, Fraction(8, 3), 9),
        (4, Fraction(4, 3), 3),
        (12, Fraction(2, 3), 1),
        (12, Fraction(4, 3), 2),
    ]
    assert {r.h: (r.orbit_size, r.depth, r.tau) for r in rows} == PUBLISHED_TABLE2


def test_glue_vectors_live_in_the_dual():
    # every glue vector has rational inner products with the lattice basis
    # whose denominators divide 6, and x8 reduces to the A2 deep holes
    for h in glue_elements():
        v = x8(h)
        a1, a2_, _, _ = decompose(h)
        assert v[:2] == (Fraction(a1, 3),) * 2
        assert v[2:4] == (Fraction(a2_, 3),) * 2
        assert x4(h) == tuple(h)


def test_glued_norms_even():
    for h in (H1, H2, H3, H4):
        v8, v4 = x8(h), x4(h)
        assert (norm(l8(), v8) + norm(l4(), v4)) % 2 == 0
