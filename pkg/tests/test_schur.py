"""Straight, skew and tilde values, their matrices, and the reductions."""

import pytest

from qschur.errors import (
    HypothesisViolated,
    LengthTooLong,
    NotALine,
    NotSubspace,
    WindowInvalid,
    ZeroVector,
)
from qschur.gf import field_spec
from qschur.ppoly import ambient_ring, universal_ring
from qschur.schur import SchurContext
from qschur.subspaces import (
    Subspace,
    enumerate_lines,
    internal_quotient,
    pi_product,
    span,
)


def make(q=2, n=2):
    spec = field_spec(q)
    ring = ambient_ring(spec, n)
    V = span(ring, ring.gens())
    return SchurContext(spec), ring, V


def test_worked_one_box_value():
    ctx, R, V = make()
    assert str(ctx.schur_S((1,), V)) == "x^2 + x*y + y^2"


def test_worked_column_value_is_pi():
    ctx, R, V = make()
    e2 = ctx.e_r(2, V)
    assert str(e2) == "x^2*y + x*y^2"
    assert e2 == pi_product(V)


def test_one_row_values_on_a_line():
    # H_r(span(x)) = x^(q^r - 1)
    for q in (2, 3):
        ctx, R, _ = make(q=q, n=1)
        x = R.gens()[0]
        line = span(R, [x])
        for r in range(5):
            assert ctx.h_r(r, line) == x ** (q**r - 1)


def test_h_and_e_edges():
    ctx, R, V = make()
    assert ctx.h_r(-1, V).is_zero()
    assert ctx.h_r(0, V).is_one()
    assert ctx.e_r(0, V).is_one()
    assert ctx.e_r(3, V).is_zero()  # above dim V
    assert ctx.e_r(-2, V).is_zero()
    assert ctx.schur_S((1, 1, 1), V).is_zero()  # longer than dim
    assert ctx.schur_S((), V).is_one()


def test_universal_value_worked():
    ctx = SchurContext(field_spec(2))
    u = ctx.universal_schur((1,), 2)
    assert str(u) == "x1^2 + x1*x2 + x2^2"
    assert ctx.universal_schur((1,), 2) is u  # cached


def test_staircase_alternant_is_product_of_line_representatives():
    for q in (2, 3):
        spec = field_spec(q)
        ctx = SchurContext(spec)
        U = universal_ring(spec, 2)
        from qschur.partitions import delta
        a = ctx.alternant(delta(2), 2)
        W = span(U, U.gens())
        prod = U.one
        for L in enumerate_lines(W):
            prod = prod * L.basis[0]
        assert a == prod, q


def test_alternant_length_check():
    ctx = SchurContext(field_spec(2))
    with pytest.raises(LengthTooLong):
        ctx.alternant((2, 1, 0), 2)


def test_straight_cache_returns_same_object():
    ctx, R, V = make()
    assert ctx.schur_S((2,), V) is ctx.schur_S((2,), V)


def test_schur_direct_agrees_on_variable_basis():
    ctx, R, V = make(q=3)
    for lam in ((1,), (2,), (2, 1), (1, 1)):
        assert ctx.schur_direct(lam, V) == ctx.schur_S(lam, V)


def test_schur_direct_agrees_on_twisted_basis():
    # dual route on a basis of q-polynomials (a quotient inside dim 3)
    ctx, R, _ = make(q=2, n=3)
    x, y, z = R.gens()
    V = span(R, [x, y, z])
    Q = internal_quotient(V, span(R, [z]))
    for lam in ((1,), (2,), (1, 1), (2, 1)):
        assert ctx.schur_direct(lam, Q) == ctx.schur_S(lam, Q)


def test_basis_independence_hand_case():
    ctx, R, V = make()
    x, y = R.gens()
    assert ctx.schur_on_basis((2, 1), [x + y, y], R) == ctx.schur_S((2, 1), V)
    with pytest.raises(NotSubspace):
        ctx.schur_on_basis((1,), [x, x], R)


def test_skew_with_empty_inner_is_straight():
    ctx, R, V = make()
    for lam in ((1,), (2,), (2, 1), (1, 1), (3, 1)):
        assert ctx.skew_S(lam, (), V) == ctx.schur_S(lam, V), lam


def test_skew_k_independence():
    ctx, R, V = make()
    lam, mu = (2, 1), (1,)
    base = ctx.skew_S(lam, mu, V)
    for k in (2, 3, 4, 5):
        assert ctx.skew_S(lam, mu, V, k=k) == base
    with pytest.raises(LengthTooLong):
        ctx.skew_S(lam, mu, V, k=1)


def test_skew_vanishes_without_containment():
    ctx, R, V = make()
    assert ctx.skew_S((1,), (2,), V).is_zero()
    assert ctx.skew_S((2, 1), (1, 1, 1), V).is_zero()


def test_skew_empty_shapes():
    ctx, R, V = make()
    assert ctx.skew_S((), (), V).is_one()
    assert ctx.tilde_S((), (), V).is_one()


def test_tilde_vanishes_on_wide_rows():
    # a row difference above dim U kills the tilde value
    ctx, R, V = make()
    U = span(R, [R.gens()[0]])
    assert ctx.tilde_S((2,), (), U).is_zero()
    assert not ctx.tilde_S((1,), (), U).is_zero()


def test_tilde_fractional_exponents_happen():
    ctx, R, V = make()
    # row two twists by phi^(1-2), turning exponents into halves
    t = ctx.tilde_S((1, 1), (), V)
    assert t.has_fractional_exponents()
    # both twists of (2,2) are nonnegative, so that value stays integral
    assert not ctx.tilde_S((2, 2), (), V).has_fractional_exponents()


def test_h_matrix_window_shape():
    ctx, R, V = make()
    hm = ctx.h_matrix(V)
    assert hm.entry(3, 2).is_zero()
    assert hm.entry(1, 1).is_one()
    assert hm.entry(0, 1) == ctx.h_r(1, V).frobenius(1)
    em = ctx.e_matrix(V)
    assert em.entry(2, 2).is_one()
    assert em.entry(0, 1) == -ctx.e_r(1, V).frobenius(1)


def test_he_inverse_window():
    ctx, R, V = make()
    assert ctx.he_inverse_check(V, -3, 3)
    with pytest.raises(WindowInvalid):
        ctx.he_inverse_check(V, 2, -2)


def test_quotient_factorization_small():
    ctx, R, V = make()
    U = span(R, [R.gens()[0]])
    assert ctx.quotient_factorization_check(V, U)
    assert ctx.quotient_factorization_check(V, Subspace.zero(R))
    assert ctx.quotient_factorization_check(V, V)


def test_coproduct_expand_total():
    ctx, R, V = make()
    U = span(R, [R.gens()[0]])
    addends, total = ctx.coproduct_expand((2,), (), V, U)
    assert total == ctx.skew_S((2,), (), internal_quotient(V, U))
    nus = [nu for nu, _ in addends]
    assert sorted(nus) == [(), (1,), (2,)]
    with pytest.raises(NotSubspace):
        ctx.coproduct_expand((1,), (), U, V)


def test_pieri_matches_quotient():
    ctx, R, V = make(q=3)
    for L in enumerate_lines(V):
        ell = L.basis[0]
        got = ctx.pieri_expand((2,), (), V, ell)
        want = ctx.skew_S((2,), (), internal_quotient(V, L))
        assert got == want


def test_pieri_input_checks():
    ctx, R, V = make()
    x, y = R.gens()
    with pytest.raises(ZeroVector):
        ctx.pieri_expand((1,), (), V, R.zero)
    with pytest.raises(LengthTooLong):
        ctx.pieri_expand((1, 1), (), V, x)
    ctx3, R3, _ = make(q=2, n=3)
    u, v, w = R3.gens()
    with pytest.raises(NotSubspace):
        ctx3.pieri_expand((1,), (), span(R3, [u, v]), w)


def test_fullhouse_reduction():
    ctx, R, V = make()
    assert ctx.fullhouse_reduce((1, 1), V) == ctx.schur_S((1, 1), V)
    assert ctx.fullhouse_reduce((2, 1), V) == ctx.schur_S((2, 1), V)
    ctx3, R3, V3 = make(q=2, n=3)
    assert ctx3.fullhouse_reduce((2, 1, 1), V3) == ctx3.schur_S((2, 1, 1), V3)


def test_hook_step():
    ctx, R, V = make()
    x, y = R.gens()
    line = span(R, [x + y])
    for r in (1, 2, 3):
        assert ctx.hook_step_check(line, r)
    with pytest.raises(HypothesisViolated):
        ctx.hook_step_check(line, 0)
    with pytest.raises(NotALine):
        ctx.hook_step_check(V, 1)
