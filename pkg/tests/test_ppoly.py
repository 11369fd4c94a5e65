"""Polynomial core: sparse terms, q-local exponents, Frobenius, division."""

from fractions import Fraction

import pytest

from qschur.errors import (
    FractionalExponent,
    NotDivisible,
    PolyParseError,
    RingMismatch,
    TermLimitExceeded,
)
from qschur.gf import field_spec
from qschur.ppoly import (
    Poly,
    UniPoly,
    ambient_ring,
    evaluate_morphism,
    exact_div,
    get_term_limit,
    mono_degree,
    mono_div,
    mono_frobenius,
    mono_key,
    mono_mul,
    qexp,
    set_term_limit,
    universal_ring,
)


def ring2(n=2):
    return ambient_ring(field_spec(2), n)


def ring3(n=2):
    return ambient_ring(field_spec(3), n)


def test_qexp_normalization():
    # num not divisible by q, dpow minimal: 2/2^1 normalizes to 1/2^0
    assert qexp(2, 1, 2) == qexp(1, 0, 2)
    assert qexp(6, 2, 3) == qexp(2, 1, 3)
    assert qexp(0, 3, 2) == qexp(0, 0, 2)
    e = qexp(5, 2, 2)
    assert (e.num, e.dpow) == (5, 2)


def test_mono_ops():
    q = 2
    a = ((0, 3, 0),)          # x^3
    b = ((0, 1, 0), (1, 2, 0))  # x*y^2
    assert mono_degree(a, q) == Fraction(3)
    m = mono_mul(a, b, q)
    assert mono_degree(m, q) == Fraction(6)
    assert mono_div(m, b, q) == a
    assert mono_div(b, a, q) is None
    fr = mono_frobenius(a, 1, q)
    assert mono_degree(fr, q) == Fraction(6)
    back = mono_frobenius(fr, -1, q)
    assert back == a


def test_mono_key_graded_lex():
    R = ring2()
    q, n = 2, 2
    x2 = ((0, 2, 0),)
    xy = ((0, 1, 0), (1, 1, 0))
    y2 = ((1, 2, 0),)
    y3 = ((1, 3, 0),)
    keys = sorted([x2, xy, y2, y3], key=lambda m: mono_key(m, q, n), reverse=True)
    assert keys == [y3, x2, xy, y2]
    assert R.key(x2) == mono_key(x2, q, n)


def test_parse_str_round_trip():
    R = ring2()
    for text in ("x^2 + x*y + y^2", "x^2*y + x*y^2", "x + y", "1", "0", "x^5"):
        assert str(R.parse(text)) == text
    R3 = ring3()
    assert str(R3.parse("2*x^2 + y")) == "2*x^2 + y"
    assert R3.parse("x + 2*y") == R3.gens()[0] - R3.gens()[1]


def test_parse_rejects_garbage():
    R = ring2()
    for text in ("x +", "q^", "x^^2", "x*", "$", "x - y"):
        with pytest.raises(PolyParseError):
            R.parse(text)


def test_add_mul_in_characteristic():
    R = ring2()
    x, y = R.gens()
    assert (x + x).is_zero()
    assert str((x + y) * (x + y)) == "x^2 + y^2"
    R3 = ring3()
    u, v = R3.gens()
    assert str((u + v) * (u + v)) == "x^2 + 2*x*y + y^2"
    assert (u - u).is_zero()
    assert str(-u) == "2*x"


def test_pow_matches_repeated_multiplication():
    R3 = ring3()
    x, y = R3.gens()
    p = x + 2 * y
    acc = R3.one
    for k in range(1, 8):
        acc = acc * p
        assert p**k == acc
    assert p**0 == R3.one


def test_pow_freshman_exponents():
    # (x+y)^5 over F_2: C(5,k) is odd exactly for k in {0,1,4,5} (Lucas)
    R = ring2()
    x, y = R.gens()
    assert str((x + y) ** 5) == "x^5 + x^4*y + x*y^4 + y^5"


def test_frobenius_is_q_power():
    for R in (ring2(), ring3()):
        x, y = R.gens()
        p = x + y
        q = R.spec.q
        assert p.frobenius(1) == p**q
        assert p.frobenius(2) == p ** (q * q)


def test_frobenius_negative_round_trip():
    R = ring3()
    x, y = R.gens()
    p = x**2 + 2 * x * y
    down = p.frobenius(-1)
    assert down.has_fractional_exponents()
    assert down.frobenius(1) == p
    assert p.frobenius(-2).frobenius(2) == p


def test_fractional_exponent_str():
    R = ring2()
    x, _ = R.gens()
    assert str(x.frobenius(-1)) == "x^1/2"
    assert str((x**3).frobenius(-2)) == "x^3/4"
    assert R.parse("x^1/2") == x.frobenius(-1)


def test_degrees_and_leading():
    R = ring2()
    x, y = R.gens()
    p = x**3 + x * y
    assert p.total_degree() == Fraction(3)
    assert p.degrees() == {Fraction(3), Fraction(2)}
    assert p.leading_monomial() == ((0, 3, 0),)
    assert p.leading_coeff().is_one()
    assert p.coeff_of(((0, 1, 0), (1, 1, 0))).is_one()
    assert p.coeff_of(((1, 5, 0),)).is_zero()


def test_evaluate_points():
    R3 = ring3()
    x, y = R3.gens()
    p = x**2 + y
    s = R3.spec
    assert p.evaluate_points((s.element(1), s.element(2))) == s.element(0)
    assert p.evaluate_points((s.element(2), s.element(2))) == s.element(0)
    assert p.evaluate_points((s.element(0), s.element(1))) == s.element(1)


def test_exact_div_basic():
    R3 = ring3()
    x, y = R3.gens()
    assert exact_div(x**2 - y**2, x + y) == x - y
    a = x**3 + x * y + 1
    b = x * y**2 + 2 * x + y
    assert exact_div(a * b, b) == a
    assert exact_div(R3.zero, b).is_zero()


def test_exact_div_not_divisible():
    R3 = ring3()
    x, y = R3.gens()
    with pytest.raises(NotDivisible):
        exact_div(x**2 + y, x + y)
    with pytest.raises(NotDivisible):
        exact_div(x, R3.zero)


def test_ring_mismatch():
    a = ring2().gens()[0]
    b = ring3().gens()[0]
    with pytest.raises(RingMismatch):
        a + b
    with pytest.raises(RingMismatch):
        a * b


def test_evaluate_morphism_relabel():
    # sources live in a universal ring; bare-variable images relabel
    U = universal_ring(field_spec(3), 2)
    A = ambient_ring(field_spec(3), 2)
    x1, x2 = U.gens()
    x, y = A.gens()
    p = x1**2 + 2 * x1 * x2 + x2**2
    assert evaluate_morphism(p, [y, x], target_ring=A) == x**2 + 2 * x * y + y**2
    p2 = x1**2 + x2
    assert evaluate_morphism(p2, [y, x], target_ring=A) == y**2 + x


def test_evaluate_morphism_generic_hand_case():
    # p = x1^2 + x1*x2 at images (y, x+y) over F_2: y^2 + y(x+y) = x*y
    U = universal_ring(field_spec(2), 2)
    A = ambient_ring(field_spec(2), 2)
    x1, x2 = U.gens()
    x, y = A.gens()
    p = x1**2 + x1 * x2
    assert evaluate_morphism(p, [y, x + y], target_ring=A) == x * y


def test_evaluate_morphism_across_rings():
    s = field_spec(2)
    U = universal_ring(s, 2)
    A = ambient_ring(s, 2)
    x1, x2 = U.gens()
    x, y = A.gens()
    p = x1**2 + x1 * x2 + x2**2
    got = evaluate_morphism(p, [x, y], target_ring=A)
    assert got == x**2 + x * y + y**2
    assert got.ring is A


def test_evaluate_morphism_rejects_fractional_input():
    U = universal_ring(field_spec(2), 2)
    A = ambient_ring(field_spec(2), 2)
    x1, _ = U.gens()
    x, y = A.gens()
    with pytest.raises(FractionalExponent):
        evaluate_morphism(x1.frobenius(-1), [y, x], target_ring=A)


def test_evaluate_morphism_rejects_ambient_source():
    A = ambient_ring(field_spec(2), 2)
    x, y = A.gens()
    with pytest.raises(RingMismatch):
        evaluate_morphism(x + y, [y, x])


def test_term_limit_guard():
    R3 = ring3(3)
    x, y, z = R3.gens()
    dense = (x + y + z + 1) ** 4
    saved = get_term_limit()
    try:
        set_term_limit(20)
        with pytest.raises(TermLimitExceeded):
            dense * dense
    finally:
        set_term_limit(saved)
    assert len((dense * dense).terms) > 20


def test_term_limit_is_on_the_result_not_the_estimate():
    # the factors multiply out to few terms even though |a| * |b| is large
    R = ring2()
    x, y = R.gens()
    a = (x + y) ** 31    # 32 terms
    b = (x + y) ** 33
    saved = get_term_limit()
    try:
        set_term_limit(600)  # 32 * 34 = 1088 naive pairs, result has 4 terms
        assert a * b == (x + y) ** 64
    finally:
        set_term_limit(saved)


def test_unipoly_basics():
    R = ring2()
    x, y = R.gens()
    f = UniPoly.t_plus(x) * UniPoly.t_plus(R.zero)
    # t(t+x) = t^2 + x t
    assert f.t_degree() == 2
    assert f.coefficient(1) == x
    assert f.coefficient(0).is_zero()
    assert f.is_q_poly()
    assert f.apply(x).is_zero()
    g = UniPoly.t_plus(x) * UniPoly.t_plus(y)
    assert not g.is_q_poly()  # t^2 + (x+y)t + xy has a t^0 term
    assert g.apply(y).is_zero()
    assert g.apply(x + y) == (x + y + x) * (x + y + y)


def test_poly_hash_and_eq():
    R = ring2()
    x, y = R.gens()
    p = x + y
    assert hash(p) == hash(x + y)
    d = {p: 1}
    assert d[x + y] == 1
    assert p != x
    assert R.zero == 0 * p
