from fractions import Fraction

import pytest
import sympy as sp

from dynqg.coeff import standard_homs, sudq_base
from dynqg.hopf import (
    HopfData,
    base_change,
    check_character_group,
    check_hopf_axioms,
    check_star_hopf,
    convolution_power,
)
from dynqg.instances import build_sudq2
from dynqg.matrix import construct_Au
from oracles import Q, X, Y, Z, act, eq, in_slot, to_sympy

GENS = ["alpha", "beta", "gamma", "delta"]


@pytest.mark.parametrize("name", ["su", "classical", "frt", "suq"])
def test_axioms_hold_on_instances(name, request):
    bundle = request.getfixturevalue(name)
    rep = check_hopf_axioms(bundle.hopf)
    assert rep.ok, [c.name for c in rep.failures()]
    assert len(rep.checks) > 40


def test_structure_maps_on_generators(su):
    P, h = su.pres, su.hopf
    assert h.fiber2.format(h.Delta(P.gen("alpha"))) == "(alpha (x) alpha) + (beta (x) gamma)"
    assert h.fiber2.format(h.Delta(P.gen("gamma"))) == "(delta (x) gamma) + (gamma (x) alpha)"
    cp = h.crossed
    assert h.eps(P.gen("alpha")) == cp.group((1,))
    assert h.eps(P.gen("delta")) == cp.group((-1,))
    assert h.eps(P.gen("beta")) == cp.zero()
    assert h.S(P.gen("delta")) == P.gen("alpha")


def test_antipode_of_beta_against_substitution(su):
    # S(beta) = -(1/s(f)) beta with f = Z[-2,-1]
    P, h = su.pres, su.hopf
    Sb = h.S(P.gen("beta"))
    c = Sb.terms[(P.index["beta"],)]
    assert len(Sb.terms) == 1
    assert eq(to_sympy(c), -1 / in_slot(Z(-2, -1), 1))


def test_antipode_squared_on_alpha_is_scalar(su):
    P, h = su.pres, su.hopf
    x = h.S(h.S(P.gen("alpha")))
    assert list(x.terms) == [(P.index["alpha"],)]


def test_star_values(su):
    P = su.pres
    assert P.star(P.gen("alpha")) == P.gen("delta")
    assert P.star(P.gen("beta")) == P.parse("-Q*gamma")
    assert P.star(P.gen("gamma")) == P.parse("(-1/Q)*beta")
    assert check_star_hopf(su.hopf).ok


def _tampered():
    fresh = build_sudq2(verify=False)
    P, h = fresh.pres, fresh.hopf
    anti = {i: x for i, x in h.antipode.items()}
    anti[P.index["beta"]] = P.coeff(P.base.const(2)) * anti[P.index["beta"]]
    return HopfData(P, dict(h.delta), dict(h.epsilon), anti)


def test_tampered_antipode_is_caught():
    rep = check_hopf_axioms(_tampered())
    assert not rep.ok
    bad = rep.failures()
    assert any("antipode" in c.name and "beta" in c.name for c in bad)
    assert all(c.witness for c in bad)


def test_base_change_to_frt_keeps_axioms(su):
    phi = standard_homs(Fraction(2, 3))["pi-q-m"]
    h = base_change(su.hopf, phi)
    assert h.pres.base.same_as(phi.target)
    assert check_hopf_axioms(h).ok


def test_base_change_rejects_foreign_base(classical):
    phi = standard_homs()["pi-q-m"]
    with pytest.raises(ValueError):
        base_change(classical.hopf, phi)


def test_theta_values_against_substitution(su):
    # theta^(k)(alpha) = d H^k on the diagonal: (1 . H11^k) <1>
    P = su.pres
    H11 = -Z(-1, -2)
    H22 = -Z(-1, 0)
    for k in (-2, -1, 1, 2):
        ta = su.characters.theta(k)(P.gen("alpha"))
        td = su.characters.theta(k)(P.gen("delta"))
        assert eq(to_sympy(ta.terms[(1,)]), act(1, H11 ** k))
        assert eq(to_sympy(td.terms[(-1,)]), act(-1, H22 ** k))
        assert su.characters.theta(k)(P.gen("beta")).terms == {}


def test_character_group_laws(su):
    rep = check_character_group(su.characters, su.hopf, power_range=3)
    assert rep.ok, [c.name for c in rep.failures()][:5]
    names = {c.name for c in rep.checks}
    assert "scaling law on alpha" in names
    assert "imaginary law k=2 on gamma" in names


def test_convolution_power_matches_theta(su):
    P = su.pres
    t1 = su.characters.theta(1)
    for g in GENS:
        assert convolution_power(su.hopf, t1, 3, P.gen(g)) == su.characters.theta(3)(P.gen(g))


def test_unitary_free_algebra_characters():
    B = sudq_base()
    data = construct_Au(B, [(1,), (-1,)], [["Q", "0"], ["0", "Q^-1"]])
    assert check_hopf_axioms(data.hopf).ok
    rep = check_character_group(data.characters, data.hopf, k_range=(-1, 0, 1), power_range=2)
    assert rep.ok, [c.name for c in rep.failures()][:5]


def test_oracle_symbols_are_consistent():
    # sanity check of the oracle helper itself
    assert sp.simplify(act(1, X) - X / Q) == 0
    assert sp.simplify(act(-1, Y) - Y / Q) == 0
