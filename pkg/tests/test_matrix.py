import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from dynqg import bmat
from dynqg.coeff import cx_base, sudq_base
from dynqg.instances import SU_NABLA, SU_NAMES, SU_PRECEDENCE
from dynqg.matrix import (
    FUNCTOR_LABELS,
    IntertwinerTriple,
    MatrixData,
    MatrixError,
    MissingInverse,
    View,
    bar,
    box,
    check_triple,
    construct_Ao,
    construct_AoFG,
    construct_Au,
    dressing_iso,
    functor_apply,
    hat,
    hat_crossed,
    homogeneity,
    inverse,
    is_corep,
    is_corep_crossed,
    is_intertwiner,
    mat_equal,
    neg_degrees,
    nabla_matrix,
    s_power,
    transpose,
    triples_equal,
    unitarize,
)
from dynqg.ncalg import DegenerateRelations, check_morphism
from oracles import Q, Z, act, eq, to_sympy

B = sudq_base()
SU_F = [["0", "-1"], ["Z[0,-1]", "0"]]
SU_G = [["0", "-Q"], ["1", "0"]]


def sym_matrix(M):
    return sp.Matrix([[to_sympy(x) for x in row] for row in M])


def sym_hat(F, d):
    """Row i twisted by the Gamma-action of d[i]."""
    return sp.Matrix([[act(d[i], F[i, j]) for j in range(F.cols)] for i in range(F.rows)])


def triples(bundle):
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


def test_homogeneity_examples(su):
    P = su.pres
    v = su.v_matrix()
    assert homogeneity(P, v) == [(1,), (-1,)]
    mixed = [[v[0][0] + v[0][1], P.zero()], [P.zero(), v[1][1]]]
    assert homogeneity(P, mixed) is None
    fib = su.hopf.fiber2
    assert homogeneity(fib, box(fib, v, v)) == [(1,), (-1,)]


def test_hat_matches_substitution_and_crossed_product(su):
    F = su.F
    d_u, d_v = neg_degrees(su.nabla), list(su.nabla)
    Fh = hat(F, d_u, d_v)
    assert bmat.equal(Fh, hat_crossed(F, d_u, d_v))
    want = sym_hat(sp.Matrix([[0, -1], [Z(0, -1), 0]]), [1, -1])
    got = sym_matrix(Fh)
    assert all(eq(got[i, j], want[i, j]) for i in range(2) for j in range(2))
    assert eq(got[1, 0], Z(-1, -2))


def test_hat_rejects_bad_support(su):
    with pytest.raises(MatrixError):
        hat(su.F, list(su.nabla), list(su.nabla))
    with pytest.raises(MatrixError):
        hat_crossed(su.F, list(su.nabla), list(su.nabla))


@settings(max_examples=20, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-2, 2))
def test_hat_is_multiplicative(k, l, m):
    # (F G)-hat = F-hat G-hat for d_w = d_v, both diagonal
    d = [(m,), (-m,)]
    F = bmat.diag(B, [B.Z(k, l), B.var("Q") ** k])
    G = bmat.diag(B, [B.var("Q"), B.Z(l, k)])
    assert bmat.equal(hat(bmat.mul(F, G), d, d), bmat.mul(hat(F, d, d), hat(G, d, d)))
    assert bmat.equal(hat(bmat.inverse(F), d, d), bmat.inverse(hat(F, d, d)))


def test_q_matrix_against_sympy(su):
    # Q = G (nabla G-bar nabla); the base involution fixes Q, X, Y
    G = sp.Matrix([[0, -Q], [1, 0]])
    want = (G * sym_hat(G, [1, -1])).applyfunc(sp.cancel)
    assert want == sp.Matrix([[-Q, 0], [0, -Q]])
    got = bmat.mul(su.G, hat(bmat.conj(su.G), neg_degrees(su.nabla), list(su.nabla)))
    assert sym_matrix(got) == want


def test_h_matrix_against_sympy(su):
    # H = (nabla F nabla)^T F^-1 with 2x2 products done by sympy
    F = sp.Matrix([[0, -1], [Z(0, -1), 0]])
    H = (sym_hat(F, [1, -1]).T * F.inv()).applyfunc(sp.cancel)
    assert eq(H[0, 0], -Z(-1, -2)) and eq(H[1, 1], -Z(-1, 0))
    assert H[0, 1] == 0 and H[1, 0] == 0
    got = sym_matrix(su.H)
    assert all(eq(got[i, j], H[i, j]) for i in range(2) for j in range(2))


@pytest.mark.parametrize("name", ["su", "classical"])
def test_every_functor_yields_an_intertwiner(name, request):
    bundle = request.getfixturevalue(name)
    for t in triples(bundle):
        assert check_triple(t).ok, t.label
        for f in FUNCTOR_LABELS:
            out = functor_apply(f, t)
            rep = check_triple(out)
            assert rep.ok, (f, t.label, [c.witness for c in rep.failures()][:2])


@pytest.mark.parametrize("name", ["su", "classical"])
def test_commutation_identities(name, request):
    bundle = request.getfixturevalue(name)

    def A(f, t):
        return functor_apply(f, t)

    for t in triples(bundle):
        assert triples_equal(A("op", A("inv_top", t)), A("inv_bot", A("op", t)))
        assert triples_equal(A("inv_top", A("op", t)), A("op", A("inv_bot", t)))
        assert triples_equal(A("inv_top", A("delta", t)), A("delta", A("inv_top", t)))
        assert triples_equal(A("inv_top", A("inv_co_op", t)), A("inv_co_op", A("inv_top", t)))


def test_bar_op_is_involutive_on_objects(su):
    t = triples(su)[0]
    twice = functor_apply("bar_op", functor_apply("bar_op", t))
    assert triples_equal(twice, t)


@pytest.mark.parametrize("name", ["su", "classical", "frt", "suq"])
def test_antipode_square_is_double_inverse_transpose(name, request):
    bundle = request.getfixturevalue(name)
    V = View(bundle.pres)
    v = bundle.v_matrix()
    twice = transpose(inverse(V, transpose(inverse(V, v))))
    assert mat_equal(V, s_power(bundle.hopf, v, 2), twice)


def test_character_matrix_intertwines_antipode_square(su, classical):
    for b in (su, classical):
        V = View(b.pres)
        v = b.v_matrix()
        d = list(b.nabla)
        assert is_intertwiner(V, v, b.H, s_power(b.hopf, v, 2), d, d)
    cx = cx_base()
    assert bmat.equal(classical.H, bmat.diag(cx, [-cx.one, -cx.one]))


def test_intertwiner_rejects_wrong_matrix(su):
    V = View(su.pres)
    v = su.v_matrix()
    d = list(su.nabla)
    assert not is_intertwiner(V, v, bmat.identity(B, 2), s_power(su.hopf, v, 2), d, d)


def test_missing_inverse_is_reported(su):
    P = su.pres
    v = su.v_matrix()
    with pytest.raises(MissingInverse):
        inverse(P, [[v[0][0] + P.one(), P.zero()], [P.zero(), v[1][1]]])


def test_corepresentations(su):
    assert is_corep(su.v_matrix(), su.hopf).ok
    cp = su.hopf.crossed
    assert is_corep_crossed(cp, nabla_matrix(cp, su.nabla)).ok
    bad = [[cp.group((1,), B.var("Q")), cp.zero()], [cp.zero(), cp.group((-1,))]]
    assert not is_corep_crossed(cp, bad).ok


def test_corep_detects_wrong_matrix(su):
    v = su.v_matrix()
    assert not is_corep(transpose(v), su.hopf).ok


def test_orthogonal_rank_one_is_z2():
    data = construct_Ao(B, [(0,)], [["1"]], [["u"]])
    P = data.pres
    u = P.gen("u")
    assert P.reduce(u * u) == P.one()
    assert check_morphism(data.hopf.delta_map).ok
    assert is_corep(data.v, data.hopf).ok
    assert bmat.equal(data.H, bmat.identity(B, 1))


def test_ao_su_matches_presentation(su):
    data = construct_Ao(B, SU_NABLA, SU_F, SU_NAMES, SU_PRECEDENCE)
    P = data.pres
    for lhs, rhs in su.pres.rules.items():
        assert P.rules[lhs] == rhs


def test_ao_rejects_even_f():
    with pytest.raises(MatrixError):
        construct_Ao(B, SU_NABLA, [["1", "0"], ["0", "1"]])
    with pytest.raises(MatrixError):
        construct_Ao(B, SU_NABLA, [["0", "0"], ["1", "0"]])


def test_aofg_rejects_bad_g():
    with pytest.raises(MatrixError):
        construct_AoFG(B, SU_NABLA, SU_F, [["0", "0"], ["1", "0"]])
    # Q = G (nabla G-bar nabla) is not central here, so r(Q-hat) v = v s(Q) would be a new relation
    with pytest.raises(DegenerateRelations):
        construct_AoFG(B, SU_NABLA, SU_F, [["0", "-1"], ["X", "0"]])


def test_aofg_commuting_square(su):
    data = construct_AoFG(B, SU_NABLA, SU_F, SU_G, SU_NAMES, SU_PRECEDENCE)
    assert data.extra["square"].ok
    assert bmat.equal(data.extra["Q"], bmat.diag(B, [-B.var("Q"), -B.var("Q")]))


def test_unitary_constructor_rank_one():
    data = construct_Au(B, [(1,)], [["Q"]])
    P = data.pres
    v, w = data.v[0][0], data.w[0][0]
    assert P.star(v) == w
    assert is_corep(data.v, data.hopf).ok
    assert is_corep(data.w, data.hopf, neg_degrees(data.nabla)).ok


def random_diagonal(rng, n=2):
    """Invertible diagonal matrix of random rational multiples of powers of Q."""
    return bmat.diag(B, [B.const(Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2, 5])))
                         * B.var("Q") ** rng.randint(-2, 2) for _ in range(n)])


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_dressing_is_a_hopf_morphism(seed):
    data = construct_Ao(B, SU_NABLA, SU_F, SU_NAMES, SU_PRECEDENCE)
    H = random_diagonal(random.Random(seed))
    phi, src, w = dressing_iso(data, H)
    assert check_morphism(phi).ok
    assert is_corep(w, data.hopf, list(data.nabla)).ok
    assert check_morphism(src.hopf.antipode_coop_map).ok


def test_dressing_by_identity_is_identity():
    data = construct_Ao(B, SU_NABLA, SU_F, SU_NAMES, SU_PRECEDENCE)
    phi, src, w = dressing_iso(data, bmat.identity(B, 2))
    V = View(data.pres)
    assert mat_equal(V, w, data.v)
    assert src.pres.rules == data.pres.rules


def test_unitarize(su, suq):
    with pytest.raises(MatrixError):
        unitarize(_data_of(su), bmat.identity(B, 2))
    data = _data_of(suq)
    u = unitarize(data, bmat.identity(suq.base, 2))
    assert mat_equal(View(suq.pres), u, suq.v_matrix())


def _data_of(bundle):
    return MatrixData(bundle.hopf, list(bundle.nabla), bundle.F, bundle.v_matrix(), bundle.v, G=bundle.G,
                      family="AoFG", H=bundle.H)


def test_generic_odd_f_collapses():
    # off the dressing orbit of the SU matrix the degree-(0,0) relations force 1 = 0
    with pytest.raises(DegenerateRelations):
        construct_Ao(B, SU_NABLA, [["0", "-1"], ["X", "0"]], SU_NAMES, SU_PRECEDENCE)
