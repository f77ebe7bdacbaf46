"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import random
from contextlib import contextmanager
from fractions import Fraction
from time import perf_counter

import sympy as sp

from dynqg import bmat
from dynqg.coeff import standard_homs, sudq_base
from dynqg.hopf import check_character_group, check_hopf_axioms, check_star_hopf
from dynqg.instances import SU_NABLA, SU_NAMES, SU_PRECEDENCE, build_classical, build_sudq2, verify_base_change_web
from dynqg.matrix import (
    FUNCTOR_LABELS,
    IntertwinerTriple,
    MatrixData,
    View,
    bar,
    character_H,
    check_triple,
    construct_Ao,
    construct_Au,
    dressing_iso,
    functor_apply,
    hat,
    inverse,
    is_corep,
    mat_equal,
    neg_degrees,
    s_power,
    transpose,
    triples_equal,
)
from dynqg.ncalg import check_confluence, check_morphism
from oracles import Q, X, Y, Z, act, eq, in_slot, su_relations_by_elimination, to_sympy

# relations of SU_Q^dyn(2) with f = Z[-2,-1] and f_(1) = Z[-1,0]
COMMUTATION = [
    "alpha*beta - s(Z[-1,0])*beta*alpha",
    "alpha*gamma - r(Z[-2,-1])*gamma*alpha",
    "beta*delta - r(Z[-2,-1])*delta*beta",
    "gamma*delta - s(Z[-1,0])*delta*gamma",
]
DETERMINANT = [
    "r(Z[-2,-1])/s(Z[-2,-1])*delta*alpha - (1/s(Z[-2,-1]))*beta*gamma - 1",
    "alpha*delta - r(Z[-2,-1])*gamma*beta - 1",
    "r(Z[-1,0])/s(Z[-1,0])*alpha*delta - r(Z[-1,0])*beta*gamma - 1",
    "delta*alpha - (1/s(Z[-1,0]))*gamma*beta - 1",
]
ANTIPODE = {
    "alpha": "r(Z[-2,-1])/s(Z[-2,-1])*delta",
    "beta": "-(1/s(Z[-2,-1]))*beta",
    "gamma": "-r(Z[-2,-1])*gamma",
    "delta": "alpha",
}


@contextmanager
def criterion(capsys, n, title):
    state = {"ok": False}
    t0 = perf_counter()
    try:
        yield state
    finally:
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {'PASS' if state['ok'] else 'FAIL'} ({perf_counter() - t0:.2f}s) {title}")


def su_triples(bundle):
    P = bundle.pres
    V = View(P)
    v = bundle.v_matrix()
    d = list(bundle.nabla)
    nd = neg_degrees(d)
    Qm = bmat.mul(bundle.G, hat(bmat.conj(bundle.G), nd, d))
    return [
        IntertwinerTriple(V, transpose(inverse(V, v)), bundle.F, v, nd, d, "v^-T -> v"),
        IntertwinerTriple(V, v, Qm, v, d, d, "v -> v"),
        IntertwinerTriple(V, bar(P, v), bundle.G, v, nd, d, "v-bar -> v"),
    ]


def test_1_su_full_suite(capsys):
    with criterion(capsys, 1, "SU_Q^dyn(2) relations, Hopf axioms and star suite") as st:
        t0 = perf_counter()
        su = build_sudq2(verify=False)
        P = su.pres
        degrees = {"alpha": ((1,), (1,)), "beta": ((1,), (-1,)), "gamma": ((-1,), (1,)), "delta": ((-1,), (-1,))}
        assert all(g.degree == degrees[g.name] for g in P.gens)
        for rel in COMMUTATION + DETERMINANT:
            assert P.reduce(P.parse(rel)).is_zero(), rel
        for nm, want in ANTIPODE.items():
            assert su.hopf.S(P.gen(nm)) == P.parse(want), nm
        h = su.hopf
        for m in (h.delta_map, h.epsilon_map, h.antipode_map, h.antipode_coop_map):
            assert check_morphism(m).ok, m.name
        rep = check_hopf_axioms(h, with_star=True)
        assert rep.ok, [c.name for c in rep.failures()]
        names = {c.name for c in rep.checks}
        for g in ("alpha", "beta", "gamma", "delta"):
            for label in ("coassociative", "left counit", "right counit", "left antipode", "right antipode",
                          "*S*S = id", "Delta preserves *", "epsilon preserves *"):
                assert f"{label} on {g}" in names
        assert check_star_hopf(h).ok
        assert perf_counter() - t0 < 10
        st["ok"] = True


def test_2_diamond_lemma(capsys):
    with criterion(capsys, 2, "no unresolved ambiguities at overlap length <= 3") as st:
        t0 = perf_counter()
        su = build_sudq2(verify=False)
        rep = check_confluence(su.pres, 3)
        assert rep.checks, "no ambiguities were examined"
        assert rep.ok, [(c.name, c.witness) for c in rep.failures()]
        assert perf_counter() - t0 < 30
        st["ok"] = True


def test_3_characters_and_antipode_square(capsys):
    with criterion(capsys, 3, "character group and antipode-square laws") as st:
        su = build_sudq2(verify=False)
        d = list(su.nabla)
        H = bmat.mul(bmat.transpose(hat(su.F, neg_degrees(d), d)), bmat.inverse(su.F))
        assert bmat.equal(H, su.H)
        rep = check_character_group(su.characters, su.hopf, k_range=(-2, -1, 0, 1, 2))
        assert rep.ok, [c.name for c in rep.failures()][:5]
        names = {c.name for c in rep.checks}
        for g in ("alpha", "beta", "gamma", "delta"):
            assert f"theta(0) = epsilon on {g}" in names
            assert f"convolution (1,-1) on {g}" in names
            assert f"scaling law on {g}" in names
            for k in (-2, -1, 0, 1, 2):
                assert f"antipode law k={k} on {g}" in names
                assert f"imaginary law k={k} on {g}" in names
        eps = su.hopf.eps
        P = su.pres
        for g in ("alpha", "beta", "gamma", "delta"):
            assert su.characters.theta(0)(P.gen(g)) == eps(P.gen(g))
        assert character_H(su_data(su)).ok
        st["ok"] = True


def su_data(bundle):
    data = MatrixData(bundle.hopf, list(bundle.nabla), bundle.F, bundle.v_matrix(), bundle.v, G=bundle.G,
                      family="AoFG", H=bundle.H)
    d = list(bundle.nabla)
    data.extra["Q"] = bmat.mul(bundle.G, hat(bmat.conj(bundle.G), neg_degrees(d), d))
    return data


def test_4_functor_laws(capsys):
    with criterion(capsys, 4, "intertwiner functors, commutation identities, S^2 = (v^-T)^-T") as st:
        for bundle in (build_sudq2(verify=False), build_classical(verify=False)):
            for t in su_triples(bundle):
                assert check_triple(t).ok
                for f in FUNCTOR_LABELS:
                    assert check_triple(functor_apply(f, t)).ok, (bundle.key, f, t.label)

                def A(f, x):
                    return functor_apply(f, x)

                assert triples_equal(A("op", A("inv_top", t)), A("inv_bot", A("op", t)))
                assert triples_equal(A("inv_top", A("op", t)), A("op", A("inv_bot", t)))
                assert triples_equal(A("inv_top", A("delta", t)), A("delta", A("inv_top", t)))
                assert triples_equal(A("inv_top", A("inv_co_op", t)), A("inv_co_op", A("inv_top", t)))
            V = View(bundle.pres)
            v = bundle.v_matrix()
            assert mat_equal(V, s_power(bundle.hopf, v, 2), transpose(inverse(V, transpose(inverse(V, v)))))
        st["ok"] = True


def test_5_base_change_web(capsys):
    with criterion(capsys, 5, "base-change web at q = 2/3") as st:
        t0 = perf_counter()
        rep = verify_base_change_web(Fraction(2, 3))
        assert rep.ok, [(c.name, c.witness) for c in rep.failures()][:5]
        for item in ("(i)", "(ii)", "(iii)", "(iv)"):
            assert any(c.name.startswith(item) for c in rep.checks)
        assert perf_counter() - t0 < 10
        st["ok"] = True


def random_diagonal(rng, base):
    def entry():
        c = base.const(Fraction(rng.choice([1, 2, 3, -1, -3]), rng.choice([1, 2, 7])))
        return c * base.var("Q") ** rng.randint(-2, 2) * base.Z(rng.randint(-3, 3), rng.randint(-3, 3))

    return bmat.diag(base, [entry(), entry()])


def test_6_generic_constructors(capsys):
    with criterion(capsys, 6, "constructors A_o at n = 1, 2 and A_u at n = 1") as st:
        B = sudq_base()
        one = construct_Ao(B, [(0,)], [["1"]], [["u"]])
        u = one.pres.gen("u")
        assert one.pres.reduce(u * u) == one.pres.one()
        for m in (one.hopf.delta_map, one.hopf.epsilon_map, one.hopf.antipode_coop_map):
            assert check_morphism(m).ok
        assert is_corep(one.v, one.hopf).ok
        # random nabla-odd F drawn from the dressing orbit H F H-hat^T of the SU matrix
        base_su = construct_Ao(B, SU_NABLA, [["0", "-1"], ["Z[0,-1]", "0"]], SU_NAMES, SU_PRECEDENCE)
        rng = random.Random(20240607)
        for _ in range(3):
            _, two, _ = dressing_iso(base_su, random_diagonal(rng, B))
            assert two.F[0][0].is_zero() and two.F[1][1].is_zero()
            for m in (two.hopf.delta_map, two.hopf.epsilon_map, two.hopf.antipode_coop_map):
                assert check_morphism(m).ok
            assert is_corep(two.v, two.hopf).ok
        au = construct_Au(B, [(1,)], [["Q"]])
        assert check_star_hopf(au.hopf).ok
        st["ok"] = True


def test_7_oracle_cross_checks(capsys):
    with criterion(capsys, 7, "independent oracles against the main code path") as st:
        su = build_sudq2(verify=False)
        P = su.pres
        # beta*gamma by Gaussian elimination
        cols, R, piv = su_relations_by_elimination()
        assert len(piv) == 3
        k = piv.index(cols.index("bc"))
        red = P.reduce(P.parse("beta*gamma"))
        assert eq(to_sympy(red.terms[(P.index["gamma"], P.index["beta"])]), -R[k, cols.index("cb")])
        assert eq(to_sympy(red.terms[()]), -R[k, cols.index("")])
        # hat(F), Q and H by 2x2 products in sympy
        d = [1, -1]

        def sym_hat(M):
            return sp.Matrix(2, 2, lambda i, j: act(d[i], M[i, j]))

        def sym(M):
            return sp.Matrix([[to_sympy(x) for x in row] for row in M])

        F = sp.Matrix([[0, -1], [Z(0, -1), 0]])
        G = sp.Matrix([[0, -Q], [1, 0]])
        Fh = sym_hat(F)
        got = sym(hat(su.F, neg_degrees(su.nabla), list(su.nabla)))
        assert all(eq(got[i, j], Fh[i, j]) for i in range(2) for j in range(2))
        Qm = (G * sym_hat(G)).applyfunc(sp.cancel)
        assert Qm == sp.Matrix([[-Q, 0], [0, -Q]])
        assert sym(su_data(su).extra["Q"]) == Qm
        H = (Fh.T * F.inv()).applyfunc(sp.cancel)
        assert eq(H[0, 0], -Z(-1, -2)) and eq(H[1, 1], -Z(-1, 0)) and H[0, 1] == 0 and H[1, 0] == 0
        got = sym(su.H)
        assert all(eq(got[i, j], H[i, j]) for i in range(2) for j in range(2))
        # S(beta) = -(1/s(f)) beta
        assert eq(to_sympy(su.hopf.S(P.gen("beta")).terms[(P.index["beta"],)]), -1 / in_slot(Z(-2, -1), 1))
        # base-change images by substitution
        x = sp.Symbol("x")
        homs = standard_homs(Fraction(2, 3))
        B = su.base
        for kk, ll in [(0, -1), (-1, 0), (-2, -1), (1, -2)]:
            z = Z(kk, ll)
            want = z.subs({Q: sp.Rational(2, 3), X: x, Y: 1 / x}, simultaneous=True)
            assert eq(to_sympy(homs["pi-q-m"].apply(B.Z(kk, ll))), want)
            lim_minus = sp.limit(z.subs({Q: sp.Rational(2, 3), Y: 0}), X, 1)
            lim_plus = sp.limit(z.subs({Q: sp.Rational(2, 3), X: 0}), Y, 1)
            assert homs["pi-q-minus-inf"].apply(B.Z(kk, ll)).constant_value() == Fraction(str(lim_minus))
            assert homs["pi-q-plus-inf"].apply(B.Z(kk, ll)).constant_value() == Fraction(str(lim_plus))
            assert homs["pi-1-cx"].apply(B.Z(kk, ll)).is_one()
        st["ok"] = True
