"""Homogeneous matrices, intertwiners, the functors between matrix groupoids and
the universal constructors A_o(nabla, F), A_u(nabla, F), A_o(nabla, F, G)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import bmat
from .coeff import BaseSpec
from .hopf import CharacterBlock, CharacterFamily, HopfData
from .ncalg import (
    AlgMorphism,
    DegenerateRelations,
    Generator,
    Presentation,
    _vneg,
    orient_relations,
)
from .report import Report
from .tensor import CrossedProduct, FiberAlgebra, View, fiber_embed


class MatrixError(ValueError):
    pass


class MissingInverse(MatrixError):
    pass


# ---------------------------------------------------------------------------
# generic matrices over an algebra object


def _alg(x):
    return View(x) if isinstance(x, Presentation) else x


def mat_mul(alg, U, V):
    n, m, p = len(U), len(V), len(V[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = alg.zero()
            for k in range(m):
                acc = alg.add(acc, alg.mul(U[i][k], V[k][j]))
            row.append(acc)
        out.append(row)
    return out


def transpose(U):
    return [list(col) for col in zip(*U)]


def identity(alg, n: int):
    return [[alg.one() if i == j else alg.zero() for j in range(n)] for i in range(n)]


def r_n(alg, F):
    return [[alg.r(x) for x in row] for row in F]


def s_n(alg, F):
    return [[alg.s(x) for x in row] for row in F]


def mat_equal(alg, U, V) -> bool:
    return all(alg.is_zero(alg.add(a, _neg(b))) for ra, rb in zip(U, V) for a, b in zip(ra, rb))


def _neg(x):
    return -x


def bar(alg, U):
    """Entrywise involution ``(u_ij^*)``."""
    return [[alg.star(x) for x in row] for row in U]


def adjoint(alg, U):
    return transpose(bar(alg, U))


def nabla_matrix(cp: CrossedProduct, degrees: Sequence[tuple], inverse: bool = False):
    n = len(degrees)
    return [[cp.group(_vneg(degrees[i]) if inverse else degrees[i]) if i == j else cp.zero() for j in range(n)]
            for i in range(n)]


def crossed_matrix(cp: CrossedProduct, F):
    return [[cp.coeff(x) for x in row] for row in F]


def fmt_matrix(alg, U) -> list:
    return [[alg.format(x) for x in row] for row in U]


# ---------------------------------------------------------------------------
# degrees and hats


def homogeneity(alg, u) -> list | None:
    """Row degrees ``gamma_i`` with ``u_ij`` of degree ``(gamma_i, gamma_j)``; None if there are none."""
    alg = _alg(alg)
    n = len(u)
    rows: list = [None] * n
    cols: list = [None] * n
    for i in range(n):
        for j in range(n):
            try:
                d = alg.degree(u[i][j])
            except ValueError:
                return None
            if d is None:
                continue
            for arr, k, g in ((rows, i, d[0]), (cols, j, d[1])):
                if arr[k] is None:
                    arr[k] = g
                elif arr[k] != g:
                    return None
    out = []
    for i in range(n):
        g = rows[i] if rows[i] is not None else cols[i]
        if g is None or (cols[i] is not None and cols[i] != g):
            return None
        out.append(g)
    return out


def support_ok(F, du, dv) -> bool:
    return all(F[i][j].is_zero() or dv[i] == du[j] for i in range(len(F)) for j in range(len(F)))


def hat(F, du, dv):
    """``F-hat = d_v F d_u^-1`` computed entrywise as ``d_v,i(F_ij)``."""
    if not support_ok(F, du, dv):
        raise MatrixError("support condition violated: F_ij must vanish unless d_v,i = d_u,j")
    base = F[0][0].base
    return [[base.act(dv[i], x) for x in row] for i, row in enumerate(F)]


def hat_crossed(F, du, dv):
    """The same hat computed as a product in M_n(B x| Gamma); raises if it leaves M_n(B)."""
    base = F[0][0].base
    cp = CrossedProduct(base)
    M = mat_mul(cp, mat_mul(cp, nabla_matrix(cp, dv), crossed_matrix(cp, F)), nabla_matrix(cp, du, inverse=True))
    e = base.identity()
    out = []
    for row in M:
        r = []
        for x in row:
            if set(x.terms) - {e}:
                raise MatrixError("d_v F d_u^-1 is not a matrix over B")
            r.append(x.terms.get(e, base.zero))
        out.append(r)
    return out


def neg_degrees(d):
    return [_vneg(g) for g in d]


# ---------------------------------------------------------------------------
# intertwiners


@dataclass
class IntertwinerTriple:
    """``u --F--> v`` inside ``alg`` with recorded degree vectors."""

    alg: object
    u: list
    F: list
    v: list
    du: list
    dv: list
    label: str = ""

    @property
    def F_hat(self):
        return hat(self.F, self.du, self.dv)


def intertwiner_defect(alg, u, F, v, du=None, dv=None):
    """Entrywise ``r_n(F-hat) u - v s_n(F)``; raises for inhomogeneous input."""
    alg = _alg(alg)
    du = du if du is not None else homogeneity(alg, u)
    dv = dv if dv is not None else homogeneity(alg, v)
    if du is None or dv is None:
        raise MatrixError("intertwiner test needs homogeneous matrices")
    for M, d in ((u, du), (v, dv)):
        h = homogeneity(alg, M)
        if h is not None and any(a != b for a, b in zip(h, d)):
            raise MatrixError("matrix degrees differ from the recorded ones")
    Fh = hat(F, du, dv)
    lhs = mat_mul(alg, r_n(alg, Fh), u)
    rhs = mat_mul(alg, v, s_n(alg, F))
    return [[alg.add(a, -b) for a, b in zip(ra, rb)] for ra, rb in zip(lhs, rhs)]


def is_intertwiner(alg, u, F, v, du=None, dv=None) -> bool:
    alg = _alg(alg)
    D = intertwiner_defect(alg, u, F, v, du, dv)
    return all(alg.is_zero(x) for row in D for x in row)


def check_triple(t: IntertwinerTriple) -> Report:
    rep = Report(f"intertwiner {t.label}")
    try:
        D = intertwiner_defect(t.alg, t.u, t.F, t.v, t.du, t.dv)
    except MatrixError as exc:
        rep.add(f"{t.label} well-formed", False, str(exc), status="error")
        return rep
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            ok = t.alg.is_zero(x)
            rep.add(f"{t.label} entry ({i + 1},{j + 1})", ok, None if ok else t.alg.format(x))
    return rep


# ---------------------------------------------------------------------------
# inverses from a pool of structurally known matrices


def box(fib: FiberAlgebra, u, v):
    """``(u box v)_ij = sum_k u_ik (x) v_kj``."""
    n = len(u)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = fib.zero()
            for k in range(n):
                if u[i][k].terms and v[k][j].terms:
                    acc = fib.add(acc, fiber_embed(fib, [u[i][k], v[k][j]]))
            row.append(acc)
        out.append(row)
    return out


def _pool_in(alg) -> list:
    if isinstance(alg, View):
        pres = alg.pres
        out = []
        for M in pres.matrix_pool:
            out += [M, transpose(M)]
            if pres.star_images is not None:
                B = bar(pres, M)
                out += [B, transpose(B)]
        return out
    if isinstance(alg, FiberAlgebra):
        if alg.n_factors != 2 or alg.factors[0] is not alg.factors[1]:
            raise MissingInverse("inverse search supports A (x) A only")
        out = []
        base = View(alg.factors[0])
        for M in _pool_in(base):
            # only homogeneous matrices can be boxed
            if homogeneity(base, M) is not None:
                out.append(box(alg, M, M))
            Mt = transpose(M)
            if homogeneity(base, Mt) is not None:
                out.append(transpose(box(alg, Mt, Mt)))
        return out
    raise MissingInverse(f"no inverse pool for {type(alg).__name__}")


def inverse(alg, M):
    """Two-sided inverse of ``M`` among the structurally known matrices, verified by both products."""
    alg = _alg(alg)
    n = len(M)
    one = identity(alg, n)
    for C in _pool_in(alg):
        # cheap first entry test before the full products
        e = alg.zero()
        for k in range(n):
            e = alg.add(e, alg.mul(M[0][k], C[k][0]))
        if not alg.is_zero(alg.add(e, -alg.one())):
            continue
        if mat_equal(alg, mat_mul(alg, M, C), one) and mat_equal(alg, mat_mul(alg, C, M), one):
            return C
    raise MissingInverse("no two-sided inverse among the known matrices")


# ---------------------------------------------------------------------------
# functors on triples


def _view(alg, **flags):
    if isinstance(alg, View):
        return alg.toggled(**flags)
    if isinstance(alg, Presentation):
        return View(alg).toggled(**flags)
    raise MatrixError(f"op/co/bar transforms need a presentation, not {type(alg).__name__}")


def _require_star(alg):
    pres = alg.pres if isinstance(alg, View) else alg
    if not isinstance(pres, Presentation) or pres.star_images is None:
        raise MatrixError("functor needs an involution")


FUNCTOR_LABELS = (
    "epsilon", "delta", "op", "top_co", "inv_co", "inv_top", "inv_bot", "inv_co_op",
    "bar_op", "star_co", "overline", "star",
)


def functor_apply(name: str, t: IntertwinerTriple, fiber: FiberAlgebra | None = None) -> IntertwinerTriple:
    """Image of ``u --F--> v`` under one of the functors in ``FUNCTOR_LABELS``."""
    alg = _alg(t.alg)
    u, F, v, du, dv = t.u, t.F, t.v, t.du, t.dv
    lab = f"{name}({t.label})"
    if name == "epsilon":
        cp = CrossedProduct(F[0][0].base)
        return IntertwinerTriple(cp, nabla_matrix(cp, du), F, nabla_matrix(cp, dv), du, dv, lab)
    if name == "delta":
        if not isinstance(alg, View) or alg.op or alg.co or alg.bar:
            raise MatrixError("delta functor acts on the plain algebra")
        fib = fiber or FiberAlgebra([alg.pres, alg.pres])
        return IntertwinerTriple(fib, box(fib, u, u), F, box(fib, v, v), du, dv, lab)
    if name == "op":
        return IntertwinerTriple(_view(alg, op=True), u, t.F_hat, v, neg_degrees(du), neg_degrees(dv), lab)
    if name == "top_co":
        return IntertwinerTriple(_view(alg, co=True), transpose(v), bmat.transpose(F), transpose(u), dv, du, lab)
    if name == "inv_co":
        return IntertwinerTriple(_view(alg, co=True), inverse(alg, v), bmat.inverse(t.F_hat), inverse(alg, u),
                                 neg_degrees(dv), neg_degrees(du), lab)
    if name == "inv_top":
        return IntertwinerTriple(alg, transpose(inverse(alg, u)), bmat.transpose(bmat.inverse(t.F_hat)),
                                 transpose(inverse(alg, v)), neg_degrees(du), neg_degrees(dv), lab)
    if name == "inv_bot":
        return IntertwinerTriple(alg, inverse(alg, transpose(u)), bmat.transpose(bmat.inverse(t.F_hat)),
                                 inverse(alg, transpose(v)), neg_degrees(du), neg_degrees(dv), lab)
    if name == "inv_co_op":
        return IntertwinerTriple(_view(alg, co=True, op=True), inverse(alg, v), bmat.inverse(F), inverse(alg, u),
                                 dv, du, lab)
    if name == "bar_op":
        _require_star(alg)
        return IntertwinerTriple(_view(alg, bar=True, op=True), u, bmat.conj(t.F_hat), v,
                                 neg_degrees(du), neg_degrees(dv), lab)
    if name == "star_co":
        _require_star(alg)
        return IntertwinerTriple(_view(alg, co=True), adjoint(alg, v), bmat.adjoint(t.F_hat), adjoint(alg, u),
                                 neg_degrees(dv), neg_degrees(du), lab)
    if name == "overline":
        _require_star(alg)
        return IntertwinerTriple(alg, bar(alg, u), bmat.conj(t.F_hat), bar(alg, v),
                                 neg_degrees(du), neg_degrees(dv), lab)
    if name == "star":
        _require_star(alg)
        ub, vb = bar(alg, u), bar(alg, v)
        return IntertwinerTriple(alg, transpose(inverse(alg, ub)), bmat.adjoint(bmat.inverse(F)),
                                 transpose(inverse(alg, vb)), du, dv, lab)
    raise MatrixError(f"unknown functor {name!r}")


def triples_equal(a: IntertwinerTriple, b: IntertwinerTriple) -> bool:
    """Object-level equality: same matrices entrywise, same F and degrees."""
    alg = _alg(a.alg)
    return (a.du == b.du and a.dv == b.dv and bmat.equal(a.F, b.F)
            and mat_equal(alg, a.u, b.u) and mat_equal(alg, a.v, b.v))


# ---------------------------------------------------------------------------
# corepresentations


def apply_entrywise(phi, U):
    return [[phi(x) for x in row] for row in U]


def is_corep(v, h: HopfData, dv=None) -> Report:
    """``Delta_n(v) = v box v``, ``epsilon_n(v) = d_v`` and ``S_n(v) = v^-1``."""
    A = h.pres
    rep = Report("corepresentation")
    dv = dv or homogeneity(A, v)
    if dv is None:
        rep.add("homogeneous", False, "matrix is not homogeneous")
        return rep
    n = len(v)
    fib = h.fiber2
    B = box(fib, v, v)
    cp = h.crossed
    S = apply_entrywise(h.S, v)
    VS = mat_mul(View(A), v, S)
    SV = mat_mul(View(A), S, v)
    for i in range(n):
        for j in range(n):
            d = h.Delta(v[i][j]) - B[i][j]
            rep.add(f"Delta entry ({i + 1},{j + 1})", fib.is_zero(d), None if fib.is_zero(d) else str(d))
            want = cp.group(dv[i]) if i == j else cp.zero()
            e = h.eps(v[i][j])
            rep.add(f"epsilon entry ({i + 1},{j + 1})", e == want, None if e == want else str(e))
            one = A.one() if i == j else A.zero()
            ok = VS[i][j] == one and SV[i][j] == one
            rep.add(f"S inverse entry ({i + 1},{j + 1})", ok,
                    None if ok else f"{A.format(VS[i][j] - one)} ; {A.format(SV[i][j] - one)}")
    return rep


def is_corep_crossed(cp: CrossedProduct, M) -> Report:
    """A diagonal matrix of group elements is group-like in the crossed product."""
    rep = Report("corepresentation (crossed product)")
    n = len(M)
    for i in range(n):
        for j in range(n):
            x = M[i][j]
            if i != j:
                rep.add(f"off-diagonal ({i + 1},{j + 1}) vanishes", not x.terms)
                continue
            grouplike = len(x.terms) == 1 and next(iter(x.terms.values())).is_one()
            rep.add(f"entry ({i + 1},{i + 1}) is a group element", grouplike)
            if grouplike:
                rep.add(f"entry ({i + 1},{i + 1}) S-inverse", cp.mul(cp.antipode(x), x) == cp.one())
    return rep


# ---------------------------------------------------------------------------
# constructors


@dataclass
class MatrixData:
    """A constructed algebra with its defining matrices and structure."""

    hopf: HopfData
    nabla: list
    F: list
    v: list  # matrix of generator elements
    names: list  # matrix of generator names
    G: list | None = None
    w: list | None = None
    w_names: list | None = None
    family: str = "Ao"
    characters: CharacterFamily | None = None
    H: list | None = None
    extra: dict = field(default_factory=dict)

    @property
    def pres(self) -> Presentation:
        return self.hopf.pres


def _default_names(n: int, stem: str = "v") -> list:
    return [[f"{stem}{i + 1}{j + 1}" for j in range(n)] for i in range(n)]


def _check_parity(F, nabla, odd: bool) -> None:
    n = len(F)
    for i in range(n):
        for j in range(n):
            if F[i][j].is_zero():
                continue
            if odd and nabla[i] != _vneg(nabla[j]):
                raise MatrixError(f"F is not nabla-odd: entry ({i + 1},{j + 1}) is nonzero")
            if not odd and nabla[i] != nabla[j]:
                raise MatrixError(f"F is not nabla-even: entry ({i + 1},{j + 1}) is nonzero")


def _invert(F):
    try:
        return bmat.inverse(F)
    except ZeroDivisionError:
        raise MatrixError("F is singular")


def _mat_of(pres: Presentation, names):
    return [[pres.gen(nm) for nm in row] for row in names]


def _relations_matrix(pres, M, N):
    """Entries of ``M N - 1``."""
    P = mat_mul(View(pres), M, N)
    n = len(M)
    return [P[i][j] - (pres.one() if i == j else pres.zero()) for i in range(n) for j in range(n)]


def _free_mat_mul(pres: Presentation, U, V):
    n = len(U)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = pres.zero()
            for k in range(n):
                acc = acc + pres.mul_word_free(U[i][k], V[k][j])
            row.append(acc)
        out.append(row)
    return out


def _free_relations(pres, M, N):
    P = _free_mat_mul(pres, M, N)
    n = len(M)
    return [P[i][j] - (pres.one() if i == j else pres.zero()) for i in range(n) for j in range(n)]


def _coeff_matrix(pres: Presentation, F, slot: str):
    f = pres.r if slot == "r" else pres.s
    return [[f(x) for x in row] for row in F]


def _orthogonal_inverse(pres: Presentation, v, F, Fh):
    """``X = (r_n(F-hat^-1) v s_n(F))^T`` computed without rewriting."""
    M = _free_mat_mul(pres, _free_mat_mul(pres, _coeff_matrix(pres, _invert(Fh), "r"), v),
                      _coeff_matrix(pres, F, "s"))
    return transpose(M)


def _gamma_tuple(base: BaseSpec, g) -> tuple:
    if isinstance(g, int):
        g = (g,)
    g = tuple(g)
    if len(g) != base.gamma_rank:
        raise MatrixError("degree has the wrong rank")
    return g


def construct_Ao(base: BaseSpec, nabla: Sequence, F, names=None, precedence=None, name: str = "Ao",
                 extra_relations: Sequence = ()) -> MatrixData:
    """Universal algebra with ``v^-T --F--> v`` and its Hopf structure (v a corepresentation)."""
    nabla = [_gamma_tuple(base, g) for g in nabla]
    n = len(nabla)
    F = bmat.bmatrix(base, F)
    if len(F) != n:
        raise MatrixError("F and nabla differ in size")
    _check_parity(F, nabla, odd=True)
    _invert(F)
    names = names or _default_names(n)
    gens = [Generator(names[i][j], nabla[i], nabla[j]) for i in range(n) for j in range(n)]
    pres = Presentation(base, gens, {}, precedence, name=name)
    v = _mat_of(pres, names)
    Fh = hat(F, neg_degrees(nabla), nabla)
    X = _orthogonal_inverse(pres, v, F, Fh)
    rels = _free_relations(pres, v, X) + _free_relations(pres, X, v)
    rels += [r(pres, v) for r in extra_relations]
    pres.reset_rules(orient_relations(pres, rels))
    X = [[pres.reduce(x) for x in row] for row in X]
    h = _hopf_for(pres, [(names, nabla, X)])
    data = MatrixData(h, nabla, F, v, names, family="Ao")
    data.H = bmat.mul(bmat.transpose(Fh), _invert(F))
    data.characters = CharacterFamily(pres, [CharacterBlock(names, tuple(nabla), data.H, "left")], data.H)
    _fill_pool(data)
    return data


def _hopf_for(pres: Presentation, blocks) -> HopfData:
    """Comultiplication, counit and antipode making each ``(names, degrees, inverse)`` block a corepresentation."""
    fib = FiberAlgebra([pres, pres])
    cp = CrossedProduct(pres.base)
    delta, eps, anti = {}, {}, {}
    for names, degs, inv in blocks:
        n = len(names)
        for i in range(n):
            for j in range(n):
                acc = fib.zero()
                for k in range(n):
                    acc = acc + fiber_embed(fib, [pres.gen(names[i][k]), pres.gen(names[k][j])])
                delta[names[i][j]] = acc
                eps[names[i][j]] = cp.group(degs[i]) if i == j else cp.zero()
                anti[names[i][j]] = inv[i][j]
    h = HopfData(pres, delta, eps, anti)
    h.fiber2 = fib
    h.crossed = cp
    return h


def s_power(h: HopfData, M, k: int):
    """Entrywise ``S^k`` for k >= 0."""
    for _ in range(k):
        M = apply_entrywise(h.S, M)
    return M


def s_inverse_square(pres: Presentation, u, du, H):
    """``S^-2_n(u) = r_n((d H d^-1)^-1) u s_n(H)`` from the scaling law."""
    V = View(pres)
    Hh = hat(H, du, du)
    return mat_mul(V, mat_mul(V, r_n(V, _invert(Hh)), u), s_n(V, H))


def fill_pool(h: HopfData, blocks) -> None:
    """Record ``S^k_n(u)`` for k = -2..3 for each ``(u, d_u, H)``; inverses are searched among these."""
    pool = []
    for u, du, H in blocks:
        pool += [s_power(h, u, k) for k in range(4)]
        if H is not None:
            m2 = s_inverse_square(h.pres, u, du, H)
            pool += [m2, s_power(h, m2, 1)]
    h.pres.matrix_pool = pool


def _fill_pool(data: MatrixData) -> None:
    blocks = [(data.v, data.nabla, data.H)]
    if data.w is not None:
        blocks.append((data.w, neg_degrees(data.nabla), data.extra.get("H_w")))
    fill_pool(data.hopf, blocks)


def construct_AoFG(base: BaseSpec, nabla: Sequence, F, G, names=None, precedence=None,
                   name: str = "AoFG", check_square: bool = True) -> MatrixData:
    """``A_o(nabla, F)`` with ``v --Q--> v`` and the involution making ``v-bar --G--> v`` an intertwiner."""
    nabla_t = [_gamma_tuple(base, g) for g in nabla]
    Fm = bmat.bmatrix(base, F)
    Gm = bmat.bmatrix(base, G)
    _check_parity(Gm, nabla_t, odd=True)
    _invert(Gm)
    if not bmat.equal(bmat.mul(Gm, bmat.adjoint(Fm)), bmat.mul(Fm, bmat.adjoint(Gm))):
        raise MatrixError("G F* differs from F G*")
    Gb = hat(bmat.conj(Gm), neg_degrees(nabla_t), nabla_t)  # nabla G-bar nabla
    Q = bmat.mul(Gm, Gb)
    Qh = hat(Q, nabla_t, nabla_t)

    def q_relations(pres, v):
        n = len(v)
        out = []
        L = mat_mul(View(pres), _coeff_matrix(pres, Qh, "r"), v)
        R = mat_mul(View(pres), v, _coeff_matrix(pres, Q, "s"))
        for i in range(n):
            for j in range(n):
                d = pres.reduce(L[i][j] - R[i][j])
                if d.terms:
                    raise DegenerateRelations(
                        "the relation r(Q-hat) v = v s(Q) is not implied by the shared variables", pres.format(d))
        return out and pres.zero()

    data = construct_Ao(base, nabla_t, Fm, names, precedence, name)
    q_relations(data.pres, data.v)
    pres = data.pres
    data.G = Gm
    data.family = "AoFG"
    data.extra["Q"] = Q
    Gh = hat(Gm, neg_degrees(nabla_t), nabla_t)
    V = View(pres)
    vbar = mat_mul(V, mat_mul(V, r_n(V, _invert(Gh)), data.v), s_n(V, Gm))
    pres.set_star({data.names[i][j]: vbar[i][j] for i in range(len(nabla_t)) for j in range(len(nabla_t))})
    if check_square:
        data.extra["square"] = check_character_square(data)
    _fill_pool(data)
    return data


def construct_Au(base: BaseSpec, nabla: Sequence, F, names=None, w_names=None, precedence=None,
                 name: str = "Au") -> MatrixData:
    """Universal algebra with ``v^-T --1--> w`` and ``w^-T --F--> v``; ``w = v-bar``."""
    nabla = [_gamma_tuple(base, g) for g in nabla]
    n = len(nabla)
    F = bmat.bmatrix(base, F)
    _check_parity(F, nabla, odd=False)
    _invert(F)
    if not bmat.equal(F, bmat.adjoint(F)):
        raise MatrixError("F is not self-adjoint")
    names = names or _default_names(n, "v")
    w_names = w_names or _default_names(n, "w")
    gens = [Generator(names[i][j], nabla[i], nabla[j]) for i in range(n) for j in range(n)]
    gens += [Generator(w_names[i][j], _vneg(nabla[i]), _vneg(nabla[j])) for i in range(n) for j in range(n)]
    if precedence is None:
        precedence = [w_names[i][j] for i in range(n) for j in range(n)] + [names[i][j] for i in range(n) for j in
                                                                             range(n)]
    pres = Presentation(base, gens, {}, precedence, name=name)
    v = _mat_of(pres, names)
    w = _mat_of(pres, w_names)
    Fh = hat(F, nabla, nabla)
    # w^-1 = (r(F-hat^-1) v s(F))^T
    Y = _orthogonal_inverse(pres, v, F, Fh)
    wt = transpose(w)
    rels = _free_relations(pres, v, wt) + _free_relations(pres, wt, v)
    rels += _free_relations(pres, w, Y) + _free_relations(pres, Y, w)
    pres.reset_rules(orient_relations(pres, rels))
    Y = [[pres.reduce(x) for x in row] for row in Y]
    star = {}
    for i in range(n):
        for j in range(n):
            star[names[i][j]] = pres.gen(w_names[i][j])
            star[w_names[i][j]] = pres.gen(names[i][j])
    pres.set_star(star)
    h = _hopf_for(pres, [(names, nabla, wt), (w_names, neg_degrees(nabla), Y)])
    data = MatrixData(h, nabla, F, v, names, w=w, w_names=w_names, family="Au")
    Finv = _invert(F)
    data.H = Finv
    # theta(w) = F^{kT} nabla^-1, so the character matrix of w is F^T with d_w = nabla^-1
    data.extra["H_w"] = bmat.transpose(F)
    data.characters = CharacterFamily(
        pres, [CharacterBlock(names, tuple(nabla), Finv, "left"), CharacterBlock(w_names, tuple(nabla), F, "right")],
        Finv)
    _fill_pool(data)
    return data


# ---------------------------------------------------------------------------
# characters, dressing and unitarization


def character_H(data: MatrixData) -> Report:
    """Check ``v --H--> S^2_n(v)`` (and the commuting-square consequences for AoFG)."""
    rep = Report(f"character matrix {data.pres.name}")
    V = View(data.pres)
    S2 = s_power(data.hopf, data.v, 2)
    d = data.nabla
    rep.add("v --H--> S^2(v)", is_intertwiner(V, data.v, data.H, S2, d, d))
    if data.w is not None:
        S2w = s_power(data.hopf, data.w, 2)
        dw = neg_degrees(d)
        rep.add("w --H_w--> S^2(w)", is_intertwiner(V, data.w, data.extra["H_w"], S2w, dw, dw))
    if data.family == "AoFG":
        rep.extend(data.extra.get("square") or check_character_square(data))
    return rep


def check_character_square(data: MatrixData) -> Report:
    """``HQ = QH``, ``G-bar nabla H^-1 = H-bar G-bar nabla`` and ``QF = F nabla Q^T nabla^-1``."""
    rep = Report("commuting square")
    base = data.pres.base
    cp = CrossedProduct(base)
    H, Q, F, G = data.H, data.extra["Q"], data.F, data.G
    rep.add("HQ = QH", bmat.equal(bmat.mul(H, Q), bmat.mul(Q, H)))
    N = nabla_matrix(cp, data.nabla)
    Ni = nabla_matrix(cp, data.nabla, inverse=True)
    c = lambda M: crossed_matrix(cp, M)  # noqa: E731
    lhs = mat_mul(cp, mat_mul(cp, c(bmat.conj(G)), N), c(_invert(H)))
    rhs = mat_mul(cp, mat_mul(cp, c(bmat.conj(H)), c(bmat.conj(G))), N)
    rep.add("G-bar nabla H^-1 = H-bar G-bar nabla", mat_equal(cp, lhs, rhs))
    lhs = c(bmat.mul(Q, F))
    rhs = mat_mul(cp, mat_mul(cp, mat_mul(cp, c(F), N), c(bmat.transpose(Q))), Ni)
    rep.add("QF = F nabla Q^T nabla^-1", mat_equal(cp, lhs, rhs))
    return rep


def dressing_iso(data: MatrixData, H, names=None, precedence=None):
    """Morphism ``A_o(nabla, H F H-hat^T) -> A_o(nabla, F)`` with ``v -> r(H-hat) v s(H)^-1``."""
    base = data.pres.base
    H = bmat.bmatrix(base, H)
    _check_parity(H, data.nabla, odd=False)
    Hinv = _invert(H)
    Hh = hat(H, data.nabla, data.nabla)
    F2 = bmat.mul(bmat.mul(H, data.F), bmat.transpose(Hh))
    names = names or data.names
    src = construct_Ao(base, data.nabla, F2, names, precedence or list(data.pres.precedence),
                       name=f"{data.pres.name}[dressed]")
    V = View(data.pres)
    w = mat_mul(V, mat_mul(V, r_n(V, Hh), data.v), s_n(V, Hinv))
    n = len(w)
    images = {src.names[i][j]: w[i][j] for i in range(n) for j in range(n)}
    phi = AlgMorphism(src.pres, data.pres, images, name="dressing")
    return phi, src, w


def unitarize(data: MatrixData, H):
    """``u = r(H^-1) v s(nabla^-1 H nabla)`` with a check that ``u-bar = u^-T``."""
    base = data.pres.base
    H = bmat.bmatrix(base, H)
    _check_parity(H, data.nabla, odd=False)
    if data.G is None:
        raise MatrixError("unitarization needs the G matrix of A_o(nabla, F, G)")
    lhs = bmat.mul(bmat.conj(H), bmat.transpose(H))
    target = bmat.mul(_invert(data.G), data.F)
    ratio = bmat.is_scalar_multiple(lhs, target)
    if ratio is None:
        raise MatrixError(f"H-bar H^T = {bmat.fmt(lhs)} is not a constant multiple of G^-1 F = {bmat.fmt(target)}")
    V = View(data.pres)
    Hc = [[base.act(_vneg(data.nabla[i]), x) for x in row] for i, row in enumerate(H)]
    u = mat_mul(V, mat_mul(V, r_n(V, _invert(H)), data.v), s_n(V, Hc))
    S = apply_entrywise(data.hopf.S, u)
    n = len(u)
    one = identity(V, n)
    if not (mat_equal(V, mat_mul(V, u, S), one) and mat_equal(V, mat_mul(V, S, u), one)):
        raise MatrixError("dressed matrix is not inverted by the antipode")
    if not mat_equal(V, bar(data.pres, u), transpose(S)):
        raise MatrixError("u-bar differs from u^-T")
    return u
