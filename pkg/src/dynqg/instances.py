"""Concrete instances: SU_Q^dyn(2), FRT SU_q(2), Woronowicz SU_q(2), classical SU(2),
and the base-change web between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import bmat
from .coeff import BaseHom, BaseSpec, cx_base, mq_base, rational_base, standard_homs, sudq_base
from .hopf import (
    CharacterBlock,
    CharacterFamily,
    HopfData,
    base_change,
    check_character_group,
    check_hopf_axioms,
    check_star_hopf,
)
from .matrix import (
    MatrixData,
    View,
    construct_AoFG,
    fill_pool,
    is_corep,
    mat_equal,
    neg_degrees,
    transpose,
    bar,
)
from .ncalg import AlgElement, Presentation, check_confluence
from .report import Report
from .tensor import transform_presentation

SU_NAMES = [["alpha", "beta"], ["gamma", "delta"]]
SU_PRECEDENCE = ["delta", "alpha", "beta", "gamma"]
SU_NABLA = [(1,), (-1,)]
SUITES = ("hopf", "star", "theta", "confluence", "corep")


@dataclass
class InstanceBundle:
    """A presentation with Hopf data, defining matrices and characters."""

    key: str
    hopf: HopfData
    nabla: list
    F: list
    G: list | None
    v: list  # matrix of generator names
    H: list | None = None
    w: list | None = None
    characters: CharacterFamily | None = None
    provenance: str = ""
    params: dict = field(default_factory=dict)
    H_w: list | None = None

    @property
    def pres(self) -> Presentation:
        return self.hopf.pres

    @property
    def base(self) -> BaseSpec:
        return self.pres.base

    def v_matrix(self) -> list:
        return [[self.pres.gen(nm) for nm in row] for row in self.v]

    def w_matrix(self) -> list | None:
        return None if self.w is None else [[self.pres.gen(nm) for nm in row] for row in self.w]


def _from_data(key: str, data: MatrixData, provenance: str, params=None) -> InstanceBundle:
    return InstanceBundle(key, data.hopf, data.nabla, data.F, data.G, data.names, data.H, data.w_names,
                          data.characters, provenance, dict(params or {}), data.extra.get("H_w"))


def run_suite(bundle: InstanceBundle, suite: str, confluence_len: int = 3) -> Report:
    """One named suite; ``all`` runs every suite."""
    if suite == "all":
        rep = Report(f"all suites {bundle.key}")
        for s in SUITES:
            rep.extend(run_suite(bundle, s, confluence_len), prefix=f"{s}: ")
        return rep
    h = bundle.hopf
    if suite == "hopf":
        return check_hopf_axioms(h)
    if suite == "star":
        if bundle.pres.star_images is None:
            rep = Report("star")
            rep.skip("star structure", "presentation has no involution")
            return rep
        return check_star_hopf(h)
    if suite == "theta":
        if bundle.characters is None:
            rep = Report("characters")
            rep.skip("character family", "no character matrix recorded")
            return rep
        return check_character_group(bundle.characters, h)
    if suite == "confluence":
        return check_confluence(bundle.pres, confluence_len)
    if suite == "corep":
        rep = Report("corepresentations")
        rep.extend(is_corep(bundle.v_matrix(), h, list(bundle.nabla)), prefix="v: ")
        if bundle.w is not None:
            rep.extend(is_corep(bundle.w_matrix(), h, neg_degrees(bundle.nabla)), prefix="w: ")
        return rep
    raise ValueError(f"unknown suite {suite!r}")


def _gate(bundle: InstanceBundle) -> InstanceBundle:
    rep = run_suite(bundle, "all")
    if not rep.ok:
        bad = "; ".join(f"{c.name}: {c.witness}" for c in rep.failures()[:3])
        raise RuntimeError(f"instance {bundle.key} fails its axiom suite: {bad}")
    return bundle


def _admissible_q(q) -> Fraction:
    q = Fraction(q)
    if q in (0, 1, -1):
        raise ValueError("q must differ from 0 and +-1")
    return q


# ---------------------------------------------------------------------------
# builders


def build_sudq2(verify: bool = True) -> InstanceBundle:
    b = sudq_base()
    Q = b.var("Q")
    F = [[b.zero, -b.one], [b.Z(0, -1), b.zero]]
    G = [[b.zero, -Q], [b.one, b.zero]]
    data = construct_AoFG(b, SU_NABLA, F, G, SU_NAMES, SU_PRECEDENCE, name="SUdyn")
    out = _from_data("sudq2", data, "A_o(nabla, F, G) over the Z-ratio base with F = [[0,-1],[Z[0,-1],0]]")
    return _gate(out) if verify else out


def frt_f1(base: BaseSpec, q) -> object:
    """``f_(1) = z_(-1)/z_(0)`` for ``z_(k) = q^-k x - q^k x^-1``."""
    x = base.var("x")
    qq = base.const(q) if q is not None else base.var("q")

    def z(k):
        return qq ** (-k) * x - qq ** k / x

    return z(-1) / z(0)


def frt_f(base: BaseSpec, q) -> object:
    """``f = z_(-2)/z_(-1)``."""
    return base.act((-1,), frt_f1(base, q))


def build_frt_su2(q=Fraction(2, 3), verify: bool = True) -> InstanceBundle:
    q = _admissible_q(q)
    b = mq_base(q)
    F = [[b.zero, -b.one], [frt_f1(b, q).inv(), b.zero]]
    G = [[b.zero, -b.one], [b.const(1 / q), b.zero]]
    data = construct_AoFG(b, SU_NABLA, F, G, SU_NAMES, SU_PRECEDENCE, name=f"FRT[q={q}]")
    out = _from_data("frt-su2", data, "FRT dynamical SU(2) over Q(x) with F = [[0,-1],[f_(1)^-1,0]]", {"q": str(q)})
    return _gate(out) if verify else out


def build_su_q2(q=Fraction(2, 3), verify: bool = True) -> InstanceBundle:
    q = _admissible_q(q)
    b = rational_base()
    F = [[b.zero, -b.one], [b.const(1 / q), b.zero]]
    data = construct_AoFG(b, SU_NABLA, F, F, SU_NAMES, SU_PRECEDENCE, name=f"SUq[q={q}]")
    out = _from_data("su-q2", data, "Woronowicz SU_q(2) as A_o(nabla, F, F) over Q", {"q": str(q)})
    return _gate(out) if verify else out


def build_classical(verify: bool = True) -> InstanceBundle:
    b = cx_base()
    F = [[b.zero, -b.one], [b.one, b.zero]]
    data = construct_AoFG(b, SU_NABLA, F, F, SU_NAMES, SU_PRECEDENCE, name="SU2[X]")
    out = _from_data("classical", data, "classical SU(2) over Q(X) with F = G = [[0,-1],[1,0]]")
    return _gate(out) if verify else out


def build_instance(name: str, q=None) -> InstanceBundle:
    if name == "sudq2":
        return build_sudq2()
    if name == "frt-su2":
        return build_frt_su2(Fraction(2, 3) if q is None else q)
    if name == "su-q2":
        return build_su_q2(Fraction(2, 3) if q is None else q)
    if name == "classical":
        return build_classical()
    raise ValueError(f"unknown instance {name!r}")


# ---------------------------------------------------------------------------
# base change of bundles


def push_bundle(bundle: InstanceBundle, phi: BaseHom, key: str | None = None) -> InstanceBundle:
    """Transport a bundle along a base homomorphism (matrices pushed entrywise)."""
    h = base_change(bundle.hopf, phi)
    push = lambda M: None if M is None else [[phi.apply(x) for x in row] for row in M]  # noqa: E731
    F, G, H = push(bundle.F), push(bundle.G), push(bundle.H)
    chars = None
    if bundle.characters is not None:
        blocks = [CharacterBlock(blk.names, blk.degrees, push(blk.M), blk.kind) for blk in bundle.characters.blocks]
        chars = CharacterFamily(h.pres, blocks, H)
    out = InstanceBundle(key or f"{bundle.key}[{phi.name}]", h, bundle.nabla, F, G, bundle.v, H, bundle.w, chars,
                         f"base change of {bundle.key} along {phi.name}", dict(bundle.params), push(bundle.H_w))
    refill_pool(out)
    return out


def refill_pool(bundle: InstanceBundle) -> None:
    blocks = [(bundle.v_matrix(), list(bundle.nabla), bundle.H)]
    if bundle.w is not None:
        blocks.append((bundle.w_matrix(), neg_degrees(bundle.nabla), bundle.H_w))
    fill_pool(bundle.hopf, blocks)


def same_ideal(P1: Presentation, P2: Presentation) -> Report:
    """Every rule of either presentation reduces to 0 in the other (generators matched by name)."""
    rep = Report(f"relations {P1.name} vs {P2.name}")
    for src, tgt in ((P1, P2), (P2, P1)):
        for lhs, rhs in src.rules.items():
            terms = {lhs: src.base.one}
            for w, c in rhs.items():
                terms[w] = terms.get(w, src.base.zero) - c
            x = AlgElement(tgt, {tuple(tgt.index[src.gens[i].name] for i in w): c for w, c in terms.items()})
            red = tgt.reduce(x)
            rep.add(f"{src.word_str(lhs)} rule of {src.name} holds in {tgt.name}", red.is_zero(),
                    None if red.is_zero() else tgt.format(red))
    return rep


def same_structure(a: InstanceBundle, b: InstanceBundle) -> Report:
    """Same relations, star, Delta, epsilon and S on generators, matched by name."""
    rep = same_ideal(a.pres, b.pres)
    Pa, Pb = a.pres, b.pres
    for g in Pa.gens:
        i, j = Pa.index[g.name], Pb.index[g.name]
        rep.add(f"S({g.name}) agrees", Pa.format(a.hopf.antipode[i]) == Pb.format(b.hopf.antipode[j]))
        rep.add(f"epsilon({g.name}) agrees", str(a.hopf.epsilon[i]) == str(b.hopf.epsilon[j]))
        rep.add(f"Delta({g.name}) agrees", str(a.hopf.delta[i]) == str(b.hopf.delta[j]))
        if Pa.star_images is not None and Pb.star_images is not None:
            rep.add(f"star({g.name}) agrees", Pa.format(Pa.star_images[i]) == Pb.format(Pb.star_images[j]))
    return rep


def is_unitary(bundle: InstanceBundle) -> bool:
    """``v-bar = v^-T``, i.e. ``v-bar = S_n(v)^T``."""
    P = bundle.pres
    v = bundle.v_matrix()
    S = [[bundle.hopf.S(x) for x in row] for row in v]
    return mat_equal(View(P), bar(P, v), transpose(S))


def suq2_relations(P: Presentation, q) -> dict:
    """The six defining relations of Woronowicz SU_q(2) in ``a = alpha``, ``c = gamma``."""
    q = P.coeff(P.base.const(q))
    a, c = P.gen("alpha"), P.gen("gamma")
    a_, c_ = P.star(a), P.star(c)
    return {
        "ac = q ca": a * c - q * (c * a),
        "ac* = q c*a": a * c_ - q * (c_ * a),
        "cc* = c*c": c * c_ - c_ * c,
        "c*a* = q a*c*": c_ * a_ - q * (a_ * c_),
        "a*a + c*c = 1": a_ * a + c_ * c - P.one(),
        "aa* + q^2 c*c = 1": a * a_ + q * q * (c_ * c) - P.one(),
    }


def is_commutative(P: Presentation) -> Report:
    rep = Report(f"commutativity {P.name}")
    for g in P.gens:
        for h in P.gens:
            if P.index[g.name] < P.index[h.name]:
                d = P.reduce(P.gen(g.name) * P.gen(h.name) - P.gen(h.name) * P.gen(g.name))
                rep.add(f"{g.name}*{h.name} = {h.name}*{g.name}", d.is_zero(), None if d.is_zero() else P.format(d))
    return rep


def verify_base_change_web(q=Fraction(2, 3), su: InstanceBundle | None = None) -> Report:
    """Specializations of SU_Q^dyn(2): FRT, Woronowicz SU_q(2), its opposite, classical SU(2)."""
    q = _admissible_q(q)
    rep = Report(f"base-change web q={q}")
    su = su or build_sudq2()
    homs = standard_homs(q)

    # (i) generic parameter: reproduces the FRT presentation
    frt = push_bundle(su, homs["pi-q-m"])
    rep.extend(same_structure(frt, build_frt_su2(q)), prefix="(i) ")
    b = frt.base
    rep.add("(i) f_(1)^-1 = Z[0,-1] under the specialization",
            homs["pi-q-m"].apply(su.base.Z(0, -1)) == frt_f1(b, q).inv())

    # (ii) X -> 1, Y -> 0: unitary matrix, Woronowicz relations
    minus = push_bundle(su, homs["pi-q-minus-inf"])
    qq = minus.base
    want = [[qq.zero, -qq.one], [qq.const(1 / q), qq.zero]]
    rep.add("(ii) image of F is [[0,-1],[1/q,0]]", bmat.equal(minus.F, want), bmat.fmt(minus.F))
    rep.add("(ii) image of F equals image of G", bmat.is_scalar_multiple(minus.F, minus.G) is not None)
    rep.add("(ii) v is unitary", is_unitary(minus))
    for nm, x in suq2_relations(minus.pres, q).items():
        red = minus.pres.reduce(x)
        rep.add(f"(ii) {nm}", red.is_zero(), None if red.is_zero() else minus.pres.format(red))
    rep.extend(same_ideal(minus.pres, build_su_q2(q).pres), prefix="(ii) ")

    # (iii) X -> 0, Y -> 1: opposite algebra of (ii)
    plus = push_bundle(su, homs["pi-q-plus-inf"])
    want = [[qq.zero, -qq.one], [qq.const(q), qq.zero]]
    rep.add("(iii) image of F is [[0,-1],[q,0]]", bmat.equal(plus.F, want), bmat.fmt(plus.F))
    rep.extend(same_ideal(plus.pres, transform_presentation(minus.pres, "op")), prefix="(iii) ")

    # (iv) Q, Z -> 1 into Q(X): classical SU(2)
    one = push_bundle(su, homs["pi-1-cx"])
    cx = one.base
    want = [[cx.zero, -cx.one], [cx.one, cx.zero]]
    rep.add("(iv) image of F is [[0,-1],[1,0]]", bmat.equal(one.F, want), bmat.fmt(one.F))
    rep.add("(iv) image of G is [[0,-1],[1,0]]", bmat.equal(one.G, want), bmat.fmt(one.G))
    rep.extend(is_commutative(one.pres), prefix="(iv) ")
    rep.add("(iv) v is unitary", is_unitary(one))
    rep.extend(same_structure(one, build_classical()), prefix="(iv) ")
    return rep
