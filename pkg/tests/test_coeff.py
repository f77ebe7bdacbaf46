from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from dynqg.coeff import (
    BaseHom,
    PoleError,
    check_hom,
    cx_base,
    lambda_base,
    mq_base,
    standard_homs,
    sudq_base,
)
from oracles import Q, X, Y, Z, act, eq, to_sympy, zshift

B = sudq_base()

small = st.integers(min_value=-3, max_value=3)
coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def ratfuncs(draw):
    """Random elements of the Z-ratio base built from Q, Z[k,l] and rationals."""
    out = B.const(draw(coef))
    for _ in range(draw(st.integers(1, 3))):
        t = B.const(draw(coef)) * B.Z(draw(small), draw(small)) * B.var("Q") ** draw(st.integers(-2, 2))
        out = out + t
    return out


def test_z_sugar_matches_shift_ratio():
    for k, l in [(0, -1), (-1, 0), (-2, -1), (-1, -2), (3, 1)]:
        assert eq(to_sympy(B.Z(k, l)), Z(k, l))


def test_parse_z_and_shift():
    assert B.parse("Z[0,-1]") == B.Z(0, -1)
    # the shift suffix applies the Gamma-action
    assert B.parse("Z[0,-1]@1") == B.Z(1, 0)
    assert B.parse("(X - Y)@2") == B.parse("Q^-2*X - Q^2*Y")


def test_zero_and_one():
    assert B.zero.is_zero()
    assert B.one.is_one()
    assert (B.Z(2, 2)).is_one()


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        B.zero.inv()


@settings(max_examples=40, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_field_ops_agree_with_sympy(a, b):
    sa, sb = to_sympy(a), to_sympy(b)
    assert eq(to_sympy(a + b), sa + sb)
    assert eq(to_sympy(a * b), sa * sb)
    if not b.is_zero():
        assert eq(to_sympy(a / b), sa / sb)


@settings(max_examples=40, deadline=None)
@given(ratfuncs(), small)
def test_action_is_substitution(a, k):
    assert eq(to_sympy(B.act((k,), a)), act(k, to_sympy(a)))


@settings(max_examples=30, deadline=None)
@given(ratfuncs(), ratfuncs(), small, small)
def test_action_is_a_group_action_by_automorphisms(a, b, k, l):
    assert B.act((k,), a * b) == B.act((k,), a) * B.act((k,), b)
    assert B.act((k,), B.act((l,), a)) == B.act((k + l,), a)
    assert B.act((-k,), B.act((k,), a)) == a


@settings(max_examples=30, deadline=None)
@given(ratfuncs(), small)
def test_involution_commutes_with_action(a, k):
    assert B.involve(B.act((k,), a)) == B.act((k,), B.involve(a))
    assert B.involve(B.involve(a)) == a


def test_zk_shift_identity():
    # f + 1/f_(1) = Q + Q^-1 with f = Z[-2,-1], f_(1) = Z[-1,0]
    f, f1 = B.Z(-2, -1), B.Z(-1, 0)
    assert f + f1.inv() == B.var("Q") + B.var("Q").inv()
    assert B.act((1,), f) == f1


def test_slots_are_independent_copies():
    r = B.rename_slots(B.parse("X"), {None: 0})
    s = B.rename_slots(B.parse("X"), {None: 1})
    assert not (r == s)
    q0 = B.rename_slots(B.var("Q"), {None: 0})
    assert q0 == B.var("Q")  # shared variables have one copy
    assert B.act_slots(r * s, {0: (1,)}) == B.rename_slots(B.parse("Q^-1*X"), {None: 0}) * s


def test_format_parse_roundtrip():
    for e in ["Z[0,-1]", "Q^2 + 1/Q", "(X - Y)/(Q*X - Y)"]:
        a = B.parse(e)
        assert B.parse(str(a)) == a


def test_standard_homs_are_equivariant_star_homs():
    for name, phi in standard_homs(Fraction(2, 3)).items():
        assert check_hom(phi).ok, name


def test_pi_q_m_image_oracle():
    phi = standard_homs()["pi-q-m"]
    q, x = sp.symbols("q x")
    for k, l in [(0, -1), (-1, 0), (-2, -1)]:
        want = (Z(k, l)).subs({Q: q, X: x, Y: 1 / x}, simultaneous=True)
        got = to_sympy(phi.apply(B.Z(k, l)))
        assert eq(got, want)


def test_pi_infinity_images():
    homs = standard_homs(Fraction(2, 3))
    q = Fraction(2, 3)
    for k, l in [(0, -1), (-2, -1), (3, 1)]:
        # Z[k,l] -> q^(-k+l) at minus infinity and q^(k-l) at plus infinity
        minus = homs["pi-q-minus-inf"].apply(B.Z(k, l))
        plus = homs["pi-q-plus-inf"].apply(B.Z(k, l))
        assert minus.constant_value() == q ** (l - k)
        assert plus.constant_value() == q ** (k - l)
        assert homs["pi-minus-inf"].apply(B.Z(k, l)) == homs["pi-minus-inf"].target.parse(f"Q^{l - k}")


def test_pi_one_limit_and_classical_images():
    homs = standard_homs()
    lam = sp.Symbol("lam")
    for k, l in [(0, -1), (-2, -1), (2, 0)]:
        got = to_sympy(homs["pi-1"].apply(B.Z(k, l)))
        assert eq(got, (lam - k) / (lam - l))
        assert homs["pi-1-cx"].apply(B.Z(k, l)).is_one()
    assert homs["pi-1"].apply(B.var("Q")).is_one()


def test_pole_is_reported():
    cx = cx_base()
    phi = BaseHom("bad", B, cx, {"Q": "1", "X": "1", "Y": "1"})
    with pytest.raises(PoleError):
        phi.apply(B.Z(0, 1))


def test_non_equivariant_hom_fails_check():
    phi = BaseHom("wrong", B, mq_base(), {"Q": "q", "X": "x", "Y": "x"})
    assert not check_hom(phi).ok


def test_lambda_base_action():
    lb = lambda_base()
    assert lb.act((2,), lb.var("lam")) == lb.parse("lam - 2")


def test_zeta_shift_definition():
    assert eq(to_sympy(B.parse("(X - Y)@3")), zshift(3))
