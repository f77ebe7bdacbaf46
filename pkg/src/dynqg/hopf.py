"""Hopf algebroid structure maps, axiom suites, base change and character groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import bmat
from .coeff import BaseHom, RatFunc
from .ncalg import (
    R_SLOT,
    S_SLOT,
    AlgElement,
    AlgMorphism,
    Generator,
    Presentation,
    _vneg,
    check_confluence,
    check_morphism,
    check_star,
)
from .report import Report
from .tensor import (
    CrossedElement,
    CrossedProduct,
    FiberAlgebra,
    FiberChain,
    View,
    apply_factorwise,
    convert_element,
    fiber_embed,
    transform_presentation,
)

PLAIN = None


@dataclass
class HopfData:
    """Generator images of the comultiplication, counit and antipode."""

    pres: Presentation
    delta: dict  # generator index -> FiberChain over (A, A)
    epsilon: dict  # generator index -> CrossedElement
    antipode: dict  # generator index -> AlgElement (S viewed as antihomomorphism of A)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.fiber2 = FiberAlgebra([self.pres, self.pres])
        self.crossed = CrossedProduct(self.pres.base)
        self.delta = {self._idx(k): v for k, v in self.delta.items()}
        self.epsilon = {self._idx(k): v for k, v in self.epsilon.items()}
        self.antipode = {self._idx(k): v for k, v in self.antipode.items()}
        self.pres.hopf = self

    def _idx(self, k):
        return self.pres.index[k] if isinstance(k, str) else k

    # morphism objects -------------------------------------------------------
    @property
    def delta_map(self) -> AlgMorphism:
        m = self._cache.get("delta")
        if m is None:
            m = AlgMorphism(self.pres, self.fiber2, self.delta, (0, 2), name="Delta")
            self._cache["delta"] = m
        return m

    @property
    def epsilon_map(self) -> AlgMorphism:
        m = self._cache.get("eps")
        if m is None:
            m = AlgMorphism(self.pres, self.crossed, self.epsilon, (PLAIN, PLAIN), name="epsilon")
            self._cache["eps"] = m
        return m

    @property
    def antipode_map(self) -> AlgMorphism:
        """S as an antihomomorphism of A exchanging r and s."""
        m = self._cache.get("S")
        if m is None:
            m = AlgMorphism(self.pres, View(self.pres), self.antipode, (S_SLOT, R_SLOT), anti=True,
                            name="S")
            self._cache["S"] = m
        return m

    def coop(self) -> Presentation:
        p = self._cache.get("coop")
        if p is None:
            p = transform_presentation(self.pres, "co,op")
            self._cache["coop"] = p
        return p

    @property
    def antipode_coop_map(self) -> AlgMorphism:
        """S as a homomorphism into the co,op-transformed presentation."""
        m = self._cache.get("Scoop")
        if m is None:
            target = self.coop()
            images = {i: convert_element(x, target, op=True, co=True) for i, x in self.antipode.items()}
            m = AlgMorphism(self.pres, target, images, name="S:A->A^co,op")
            self._cache["Scoop"] = m
        return m

    def Delta(self, x: AlgElement) -> FiberChain:
        return self.delta_map(x)

    def eps(self, x: AlgElement) -> CrossedElement:
        return self.epsilon_map(x)

    def S(self, x: AlgElement) -> AlgElement:
        return self.antipode_map(x)

    def Delta2(self, x: AlgElement) -> FiberChain:
        """``(Delta (x) id) Delta``."""
        return apply_factorwise(self.Delta(x), [self.delta_map, None])


# ---------------------------------------------------------------------------
# helpers on chains


def chain_star(x: FiberChain) -> FiberChain:
    """Factorwise involution on a fiber chain."""
    alg = x.alg
    base = alg.base
    out = alg.zero()
    slots = list(range(alg.n_factors + 1))
    for ws, c in x.terms.items():
        parts = [p.star(p.word(w)) for p, w in zip(alg.factors, ws)]
        emb = fiber_embed(alg, parts)
        out = out + alg.mul(emb, alg.coeff(base.involve(c, slots)))
    return out


def left_antipode_value(h: HopfData, x: AlgElement) -> AlgElement:
    """``m-check (S (x) id) Delta(x)`` computed in A."""
    A = h.pres
    base = A.base
    out = A.zero()
    for (w1, w2), c in h.Delta(x).terms.items():
        cc = base.rename_slots(c, {0: S_SLOT, 1: R_SLOT, 2: S_SLOT})
        out = out + A.mul(A.mul(h.S(A.word(w1)), A.coeff(cc)), A.word(w2))
    return out


def right_antipode_value(h: HopfData, x: AlgElement) -> AlgElement:
    """``m-hat (id (x) S) Delta(x)`` computed in A."""
    A = h.pres
    out = A.zero()
    for (w1, w2), c in h.Delta(x).terms.items():
        out = out + _right_term(A, h, w1, w2, c)
    return out


def _right_term(A: Presentation, h: HopfData, w1, w2, c: RatFunc) -> AlgElement:
    """``r(b0) s(b1) w1 S(w2) r(b2)`` for a coefficient in chain slots 0, 1, 2.

    The slot-2 variable is moved to the far left across ``w1 S(w2)`` before it
    becomes an r-variable, so the coefficient never has to be factored.
    """
    base = A.base
    body = A.mul(A.word(w1), h.S(A.word(w2)))
    out = A.zero()
    for w, cb in body.terms.items():
        d = A.degree_of_word(w)
        # r(b2) to the right of w: w r(b2) = r(d_r . b2) w
        c2 = base.act_slots(c, {2: d[0]})
        cc = base.rename_slots(c2, {0: R_SLOT, 1: S_SLOT, 2: R_SLOT})
        out = out + A.coeff(cc) * AlgElement(A, {w: cb})
    return out


def s_check(h: HopfData, e: CrossedElement) -> AlgElement:
    """``s-check(g b) = s(b)``; for ``b g`` this is ``s(g^-1 b)``."""
    A = h.pres
    out = A.zero()
    for g, b in e.terms.items():
        out = out + A.s(A.base.act(_vneg(g), b))
    return out


def r_hat(h: HopfData, e: CrossedElement) -> AlgElement:
    A = h.pres
    out = A.zero()
    for g, b in e.terms.items():
        out = out + A.r(b)
    return out


# ---------------------------------------------------------------------------
# axiom suites


def check_grading(h: HopfData) -> Report:
    rep = Report("grading of structure maps")
    A = h.pres
    for i, g in enumerate(A.gens):
        d = h.fiber2.degree(h.delta[i]) if h.delta[i].terms else None
        rep.add(f"deg Delta({g.name})", d is None or d == g.degree, d)
        e = h.crossed.degree(h.epsilon[i])
        rep.add(f"deg epsilon({g.name})", e is None or e == g.degree, e)
        s = A.degree(A.reduce(h.antipode[i]))
        want = (_vneg(g.deg_s), _vneg(g.deg_r))
        rep.add(f"deg S({g.name})", s is None or s == want, s)
    return rep


def check_hopf_axioms(h: HopfData, with_star: bool | None = None) -> Report:
    """Morphism checks, coassociativity, counit and both antipode identities on generators."""
    A = h.pres
    rep = Report(f"hopf {A.name}")
    rep.extend(check_grading(h))
    rep.extend(check_morphism(h.delta_map), "Delta: ")
    rep.extend(check_morphism(h.epsilon_map), "epsilon: ")
    rep.extend(check_morphism(h.antipode_coop_map), "S (co,op): ")
    rep.extend(check_morphism(h.antipode_map), "S (anti): ")
    for i, g in enumerate(A.gens):
        x = A.gen(g.name)
        lhs = apply_factorwise(h.Delta(x), [h.delta_map, None])
        rhs = apply_factorwise(h.Delta(x), [None, h.delta_map])
        rep.add(f"coassociative on {g.name}", lhs == rhs, None if lhs == rhs else f"{lhs} != {rhs}")
        left = apply_factorwise(h.Delta(x), [h.epsilon_map, None])
        right = apply_factorwise(h.Delta(x), [None, h.epsilon_map])
        rep.add(f"left counit on {g.name}", left == x, None if left == x else str(left))
        rep.add(f"right counit on {g.name}", right == x, None if right == x else str(right))
        la = left_antipode_value(h, x)
        lw = s_check(h, h.eps(x))
        rep.add(f"left antipode on {g.name}", la == lw, None if la == lw else f"{la} != {lw}")
        ra = right_antipode_value(h, x)
        rw = r_hat(h, h.eps(x))
        rep.add(f"right antipode on {g.name}", ra == rw, None if ra == rw else f"{ra} != {rw}")
    if with_star is None:
        with_star = A.star_images is not None
    if with_star:
        rep.extend(check_star_hopf(h))
    return rep


def check_star_hopf(h: HopfData) -> Report:
    A = h.pres
    rep = Report(f"star {A.name}")
    rep.extend(check_star(A))
    for g in A.gens:
        x = A.gen(g.name)
        d1 = h.Delta(A.star(x))
        d2 = chain_star(h.Delta(x))
        rep.add(f"Delta preserves * on {g.name}", d1 == d2, None if d1 == d2 else f"{d1} != {d2}")
        e1 = h.eps(A.star(x))
        e2 = h.crossed.star(h.eps(x))
        rep.add(f"epsilon preserves * on {g.name}", e1 == e2, None if e1 == e2 else f"{e1} != {e2}")
        back = A.star(h.S(A.star(h.S(x))))
        rep.add(f"*S*S = id on {g.name}", back == x, None if back == x else str(back))
    return rep


def check_all(h: HopfData, max_overlap_len: int = 3) -> Report:
    rep = Report(f"all {h.pres.name}")
    rep.extend(check_confluence(h.pres, max_overlap_len), "confluence: ")
    rep.extend(check_hopf_axioms(h))
    return rep


# ---------------------------------------------------------------------------
# base change


def push_coeff(phi: BaseHom, c: RatFunc, slots: Sequence[int]) -> RatFunc:
    return phi.apply(c, tuple(slots))


def base_change(h: HopfData, phi: BaseHom, name: str | None = None) -> HopfData:
    """Transport a presented Hopf algebroid along a base homomorphism."""
    A = h.pres
    if not phi.source.same_as(A.base):
        raise ValueError("homomorphism source differs from the base of the algebra")
    tgt = phi.target
    gens = [Generator(g.name, g.deg_r, g.deg_s) for g in A.gens]
    if tgt.gamma_rank != A.base.gamma_rank:
        raise ValueError("Gamma rank mismatch")
    P = Presentation(tgt, gens, {}, A.precedence, A.reverse_order, name=name or f"{A.name}[{phi.name}]",
                     budget=A.budget)
    rules = {}
    for lhs, rhs in A.rules.items():
        rules[lhs] = {w: push_coeff(phi, c, (0, 1)) for w, c in rhs.items()}
        rules[lhs] = {w: c for w, c in rules[lhs].items() if not c.is_zero()}
    P.reset_rules(rules)

    def push_elem(x: AlgElement) -> AlgElement:
        return P.reduce(AlgElement(P, {w: push_coeff(phi, c, (0, 1)) for w, c in x.terms.items()}))

    if A.star_images is not None:
        P.set_star({A.gens[i].name: push_elem(x) for i, x in A.star_images.items()})
    fib = FiberAlgebra([P, P])
    cp = CrossedProduct(tgt)
    delta = {i: fib.reduce(FiberChain(fib, {ws: push_coeff(phi, c, (0, 1, 2)) for ws, c in ch.terms.items()}))
             for i, ch in h.delta.items()}
    eps = {i: CrossedElement(cp, {g: phi.apply(b) for g, b in e.terms.items()}) for i, e in h.epsilon.items()}
    anti = {i: push_elem(x) for i, x in h.antipode.items()}
    out = HopfData(P, delta, eps, anti)
    P.matrix_pool = []
    return out


# ---------------------------------------------------------------------------
# characters


@dataclass
class CharacterBlock:
    """Generators arranged as a matrix with ``theta^(k)`` given by ``d M^k`` or ``(M^k)^T d^-1``."""

    names: list  # matrix of generator names
    degrees: tuple  # the diagonal of d
    M: list  # B-matrix
    kind: str = "left"  # "left": d M^k ; "right": (M^k)^T d^-1


class CharacterFamily:
    def __init__(self, pres: Presentation, blocks: Sequence[CharacterBlock], H=None):
        self.pres = pres
        self.blocks = list(blocks)
        self.H = H if H is not None else self.blocks[0].M
        self.crossed = CrossedProduct(pres.base)
        self._maps: dict = {}

    def images(self, k: int) -> dict:
        base = self.pres.base
        out = {}
        for blk in self.blocks:
            Mk = bmat.power(blk.M, k)
            n = len(blk.names)
            for i in range(n):
                for j in range(n):
                    nm = blk.names[i][j]
                    if blk.kind == "left":
                        g = tuple(blk.degrees[i])
                        b = Mk[i][j]
                        out[nm] = self.crossed.group(g, base.act(g, b)) if not b.is_zero() else self.crossed.zero()
                    else:
                        g = _vneg(tuple(blk.degrees[j]))
                        b = Mk[j][i]
                        out[nm] = self.crossed.group(g, b) if not b.is_zero() else self.crossed.zero()
        return out

    def theta(self, k: int) -> AlgMorphism:
        m = self._maps.get(k)
        if m is None:
            m = AlgMorphism(self.pres, self.crossed, self.images(k), (PLAIN, PLAIN), name=f"theta({k})")
            self._maps[k] = m
        return m


def convolution_power(h: HopfData, theta1: AlgMorphism, k: int, x: AlgElement):
    """``(theta1 (x) ... (x) theta1) Delta^(k-1) (x)`` for k >= 1."""
    chain = x
    for _ in range(k - 1):
        chain = apply_factorwise(chain, [h.delta_map] + [None] * (_nf(chain) - 1))
    return apply_factorwise(chain, [theta1] * _nf(chain))


def _nf(x) -> int:
    return 1 if isinstance(x, AlgElement) else x.alg.n_factors


def check_character_group(fam: CharacterFamily, h: HopfData, k_range: Sequence[int] = (-2, -1, 0, 1, 2),
                          power_range: int = 3) -> Report:
    A = h.pres
    rep = Report(f"theta {A.name}")
    cp = fam.crossed
    for k in k_range:
        rep.extend(check_morphism(fam.theta(k)), f"theta({k}) morphism: ")
    gens = [A.gen(g.name) for g in A.gens]
    for g, x in zip(A.gens, gens):
        t0 = fam.theta(0)(x)
        e = h.eps(x)
        rep.add(f"theta(0) = epsilon on {g.name}", t0 == e, None if t0 == e else f"{t0} != {e}")
    for k in k_range:
        for l in k_range:
            for g, x in zip(A.gens, gens):
                lhs = apply_factorwise(h.Delta(x), [fam.theta(k), fam.theta(l)], crossed=cp)
                rhs = fam.theta(k + l)(x)
                rep.add(f"convolution ({k},{l}) on {g.name}", lhs == rhs, None if lhs == rhs else f"{lhs} != {rhs}")
    for k in k_range:
        for g, x in zip(A.gens, gens):
            lhs = fam.theta(k)(h.S(x))
            rhs = cp.antipode(fam.theta(-k)(x))
            rep.add(f"antipode law k={k} on {g.name}", lhs == rhs, None if lhs == rhs else f"{lhs} != {rhs}")
    for g, x in zip(A.gens, gens):
        s2 = h.S(h.S(x))
        sc = apply_factorwise(h.Delta2(x), [fam.theta(1), None, fam.theta(-1)])
        rep.add(f"scaling law on {g.name}", s2 == sc, None if s2 == sc else f"{s2} != {sc}")
    if A.star_images is not None:
        for k in k_range:
            for g, x in zip(A.gens, gens):
                lhs = fam.theta(k)(A.star(x))
                rhs = cp.star(fam.theta(-k)(x))
                rep.add(f"imaginary law k={k} on {g.name}", lhs == rhs, None if lhs == rhs else f"{lhs} != {rhs}")
    for k in range(2, power_range + 1):
        for sign in (1, -1):
            t1 = fam.theta(sign)
            for g, x in zip(A.gens, gens):
                lhs = convolution_power(h, t1, k, x)
                rhs = fam.theta(sign * k)(x)
                rep.add(f"H_{sign * k} = H_{sign}^{k} on {g.name}", lhs == rhs,
                        None if lhs == rhs else f"{lhs} != {rhs}")
    return rep
