"""Fiber products, the crossed product B x| Gamma and op/co/bar structures.

A fiber chain with k factors carries coefficients in slots 0..k: slot 0 is the
r-slot of the first factor, slot k the s-slot of the last and slot i the junction
where ``s(b)`` of factor i-1 equals ``r(b)`` of factor i.  A factor-local
coefficient therefore moves to the far left of a chain term without any twist.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .coeff import BaseSpec, RatFunc
from .ncalg import (
    R_SLOT,
    S_SLOT,
    AlgElement,
    Generator,
    Presentation,
    _vadd,
    _vneg,
    format_term,
    join_terms,
    orient_relations,
)
from .parser import BaseContext, ParseError, evaluate, parse


def _gamma_str(g: tuple) -> str:
    return "<" + ",".join(str(x) for x in g) + ">"


# ---------------------------------------------------------------------------
# crossed product


class CrossedElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: "CrossedProduct", terms: dict):
        self.alg = alg
        self.terms = {g: b for g, b in terms.items() if not b.is_zero()}

    def __add__(self, other):
        return self.alg.add(self, self.alg.coerce(other))

    def __neg__(self):
        return CrossedElement(self.alg, {g: -b for g, b in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.alg.coerce(other))

    def __mul__(self, other):
        return self.alg.mul(self, self.alg.coerce(other))

    def __rmul__(self, other):
        return self.alg.mul(self.alg.coerce(other), self)

    def __eq__(self, other):
        if not isinstance(other, CrossedElement):
            return NotImplemented
        return self.alg.is_zero(self - other)

    __hash__ = None

    def __repr__(self):
        return f"CrossedElement({self.alg.format(self)})"

    def __str__(self):
        return self.alg.format(self)


class CrossedProduct:
    """B x| Gamma: ``(b g)(b' g') = b g(b') g g'``; r and s both embed B on the left."""

    n_factors = 0

    def __init__(self, base: BaseSpec):
        self.base = base

    def zero(self):
        return CrossedElement(self, {})

    def one(self):
        return CrossedElement(self, {self.base.identity(): self.base.one})

    def group(self, g: tuple, b: RatFunc | None = None):
        return CrossedElement(self, {tuple(g): b if b is not None else self.base.one})

    def coeff(self, c: RatFunc):
        return CrossedElement(self, {self.base.identity(): c})

    def r(self, b: RatFunc):
        return self.coeff(b)

    s = r

    def coerce(self, x):
        if isinstance(x, CrossedElement):
            return x
        if isinstance(x, RatFunc):
            return self.coeff(x)
        if isinstance(x, (int, Fraction)):
            return self.coeff(self.base.const(x))
        raise TypeError(f"cannot coerce {x!r}")

    def add(self, x, y):
        out = dict(x.terms)
        for g, b in y.terms.items():
            out[g] = out[g] + b if g in out else b
        return CrossedElement(self, out)

    def mul(self, x, y):
        out: dict = {}
        for g1, b1 in x.terms.items():
            for g2, b2 in y.terms.items():
                g = _vadd(g1, g2)
                t = b1 * self.base.act(g1, b2)
                out[g] = out[g] + t if g in out else t
        return CrossedElement(self, out)

    def is_zero(self, x) -> bool:
        return not x.terms

    def reduce(self, x):
        return x

    def degree(self, x):
        gs = set(x.terms)
        if not gs:
            return None
        if len(gs) > 1:
            raise ValueError("crossed element is not homogeneous")
        g = gs.pop()
        return (g, g)

    def star(self, x):
        """``(b g)* = g^-1(b*) g^-1``."""
        out = {}
        for g, b in x.terms.items():
            gi = _vneg(g)
            out[gi] = self.base.act(gi, self.base.involve(b))
        return CrossedElement(self, out)

    def antipode(self, x):
        """``S(b g) = g^-1(b) g^-1``."""
        out = {}
        for g, b in x.terms.items():
            gi = _vneg(g)
            out[gi] = self.base.act(gi, b)
        return CrossedElement(self, out)

    def format(self, x) -> str:
        if not x.terms:
            return "0"
        parts = []
        for g, b in sorted(x.terms.items(), reverse=True):
            bs = self.base.format(b)
            if not any(g):
                parts.append(bs)
            else:
                parts.append(format_term(bs, b, _gamma_str(g)))
        return join_terms(parts)

    def parse(self, text: str):
        return evaluate(parse(text), CrossedContext(self))


class CrossedContext(BaseContext):
    def __init__(self, alg: CrossedProduct):
        super().__init__(alg.base)
        self.alg = alg

    def number(self, q):
        return self.alg.coeff(self.base.const(q))

    def name(self, nm):
        return self.alg.coeff(BaseContext.name(self, nm))

    def zsugar(self, k, l):
        return self.alg.coeff(self.base.Z(k, l))

    def group(self, vec):
        if len(vec) != self.base.gamma_rank:
            raise ParseError("group element has the wrong rank")
        return self.alg.group(vec)

    def call(self, fname, arg):
        if fname in ("r", "s"):
            return self.alg.coeff(evaluate(arg, BaseContext(self.base)))
        raise ParseError(f"unknown function {fname!r}")

    def divide(self, a, b):
        if set(b.terms) != {self.base.identity()}:
            raise ParseError("can only divide by a base element")
        return a * self.alg.coeff(b.terms[self.base.identity()].inv())

    def power(self, a, k):
        if set(a.terms) == {self.base.identity()}:
            return self.alg.coeff(a.terms[self.base.identity()] ** k)
        if k < 0:
            raise ParseError("negative power of a crossed element")
        out = self.alg.one()
        for _ in range(k):
            out = out * a
        return out

    def shift(self, a, vec):
        if set(a.terms) != {self.base.identity()}:
            raise ParseError("shifts apply to base elements")
        return self.alg.coeff(BaseContext.shift(self, a.terms[self.base.identity()], vec))


# ---------------------------------------------------------------------------
# fiber products


class FiberChain:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: "FiberAlgebra", terms: dict):
        self.alg = alg
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def __add__(self, other):
        return self.alg.add(self, self.alg.coerce(other))

    def __neg__(self):
        return FiberChain(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.alg.coerce(other))

    def __mul__(self, other):
        return self.alg.mul(self, self.alg.coerce(other))

    def __rmul__(self, other):
        return self.alg.mul(self.alg.coerce(other), self)

    def __eq__(self, other):
        if not isinstance(other, FiberChain):
            return NotImplemented
        return self.alg.is_zero(self - other)

    __hash__ = None

    def __repr__(self):
        return f"FiberChain({self.alg.format(self)})"

    def __str__(self):
        return self.alg.format(self)


class FiberAlgebra:
    """Iterated fiber product ``A_1 (x) ... (x) A_k`` of presentations over one base."""

    def __init__(self, factors: Sequence[Presentation]):
        self.factors = tuple(factors)
        if not self.factors:
            raise ValueError("use CrossedProduct for the empty fiber product")
        self.base = self.factors[0].base
        if any(f.base is not self.base for f in self.factors):
            raise ValueError("factors must share the base")
        self.n_factors = len(self.factors)
        if self.n_factors + 1 > self.base.max_slots:
            raise ValueError("too many factors for the coefficient slots")
        self._local_cache: dict = {}

    def same_as(self, other) -> bool:
        return isinstance(other, FiberAlgebra) and len(other.factors) == len(self.factors) and all(
            a is b for a, b in zip(self.factors, other.factors)
        )

    def empty(self) -> tuple:
        return ((),) * self.n_factors

    def zero(self):
        return FiberChain(self, {})

    def one(self):
        return FiberChain(self, {self.empty(): self.base.one})

    def coeff(self, c: RatFunc):
        return FiberChain(self, {self.empty(): c})

    def r(self, b: RatFunc):
        return self.coeff(self.base.rename_slots(b, {None: 0}))

    def s(self, b: RatFunc):
        return self.coeff(self.base.rename_slots(b, {None: self.n_factors}))

    def slot(self, b: RatFunc, i: int):
        return self.coeff(self.base.rename_slots(b, {None: i}))

    def coerce(self, x):
        if isinstance(x, FiberChain):
            return x
        if isinstance(x, RatFunc):
            return self.coeff(x)
        if isinstance(x, (int, Fraction)):
            return self.coeff(self.base.const(x))
        raise TypeError(f"cannot coerce {x!r}")

    def add(self, x, y):
        out = dict(x.terms)
        for w, c in y.terms.items():
            out[w] = out[w] + c if w in out else c
        return FiberChain(self, out)

    def localize(self, c: RatFunc, i: int) -> RatFunc:
        """Rename a factor-local coefficient of factor ``i`` into chain slots i, i+1."""
        if c.is_constant():
            return c
        if i == 0:
            return c
        return self.base.rename_slots(c, {R_SLOT: i, S_SLOT: i + 1})

    def _nf_factor(self, i: int, w: tuple) -> list:
        key = (i, w)
        hit = self._local_cache.get(key)
        if hit is None:
            hit = [(ww, self.localize(c, i)) for ww, c in self.factors[i].nf_word(w).items()]
            self._local_cache[key] = hit
        return hit

    def junction_degrees(self, words: tuple) -> list:
        """Degrees at slots 0..k for a tuple of words; raises if junctions disagree."""
        out = []
        for i, (p, w) in enumerate(zip(self.factors, words)):
            r, s = p.degree_of_word(w)
            if i == 0:
                out.append(r)
            elif out[-1] != r:
                raise ValueError("fiber chain term with mismatched junction degrees")
            out.append(s)
        return out

    def normalize(self, c: RatFunc, words: tuple) -> dict:
        """Normal form of ``c * (w_1 (x) ... (x) w_k)`` as a dict."""
        self.junction_degrees(words)
        out = {}
        parts = [self._nf_factor(i, w) for i, w in enumerate(words)]
        for combo in itertools.product(*parts):
            t = c
            for _, cc in combo:
                t = t * cc
            ws = tuple(ww for ww, _ in combo)
            out[ws] = out[ws] + t if ws in out else t
        return out

    def from_words(self, c: RatFunc, words: tuple):
        return FiberChain(self, self.normalize(c, tuple(words)))

    def shift(self, c: RatFunc, words: tuple) -> RatFunc:
        if c.is_constant():
            return c
        degs = self.junction_degrees(words)
        return self.base.act_slots(c, {i: g for i, g in enumerate(degs)})

    def mul(self, x, y):
        out: dict = {}
        for w1, c1 in x.terms.items():
            for w2, c2 in y.terms.items():
                c = c1 * self.shift(c2, w1)
                for ws, cc in self.normalize(c, tuple(a + b for a, b in zip(w1, w2))).items():
                    out[ws] = out[ws] + cc if ws in out else cc
        return FiberChain(self, out)

    def is_zero(self, x) -> bool:
        return not x.terms

    def reduce(self, x):
        out: dict = {}
        for ws, c in x.terms.items():
            for w2, c2 in self.normalize(c, ws).items():
                out[w2] = out[w2] + c2 if w2 in out else c2
        return FiberChain(self, out)

    def degree(self, x):
        degs = set()
        for ws in x.terms:
            d = self.junction_degrees(ws)
            degs.add((d[0], d[-1]))
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("chain is not homogeneous")
        return degs.pop()

    def slot_names(self) -> dict:
        names = {0: "r", self.n_factors: "s"}
        for i in range(1, self.n_factors):
            names[i] = f"m{i}"
        return names

    def format(self, x) -> str:
        if not x.terms:
            return "0"
        names = self.slot_names()
        parts = []
        keyed = sorted(
            x.terms.items(),
            key=lambda t: tuple(p.word_key(w) for p, w in zip(self.factors, t[0])),
            reverse=True,
        )
        for ws, c in keyed:
            body = " (x) ".join(p.word_str(w) for p, w in zip(self.factors, ws))
            cs = self.base.format(c, names)
            if c.is_one():
                parts.append(f"({body})")
            elif c.is_constant() and (-c).is_one():
                parts.append(f"-({body})")
            else:
                parts.append(f"({cs})*({body})")
        return join_terms(parts)

    def parse(self, text: str):
        return evaluate(parse(text), ChainContext(self))


def fiber_embed(alg: FiberAlgebra, elems: Sequence[AlgElement]) -> FiberChain:
    """``x_1 (x) ... (x) x_k`` for elements of the factors (terms with mismatched junctions vanish)."""
    out = alg.zero()
    for combo in itertools.product(*[list(e.terms.items()) for e in elems]):
        words = tuple(w for w, _ in combo)
        try:
            alg.junction_degrees(words)
        except ValueError:
            raise ValueError("fiber product of elements with mismatched degrees")
        c = alg.base.one
        for i, (_, cc) in enumerate(combo):
            c = c * alg.localize(cc, i)
        out = alg.add(out, FiberChain(alg, {words: c}))
    return alg.reduce(out)


class ChainContext(BaseContext):
    def __init__(self, alg: FiberAlgebra):
        super().__init__(alg.base)
        self.alg = alg

    def number(self, q):
        return self.alg.coeff(self.base.const(q))

    def name(self, nm):
        if nm in self.base.shared:
            return self.alg.coeff(self.base.var(nm))
        raise ParseError(f"bare name {nm!r} in a chain expression; use 'a (x) b'")

    def call(self, fname, arg):
        b = evaluate(arg, BaseContext(self.base))
        k = self.alg.n_factors
        if fname == "r":
            return self.alg.slot(b, 0)
        if fname == "s":
            return self.alg.slot(b, k)
        if fname.startswith("m") and fname[1:].isdigit() and 0 < int(fname[1:]) < k:
            return self.alg.slot(b, int(fname[1:]))
        raise ParseError(f"unknown function {fname!r}")

    def fiber(self, parts):
        if len(parts) != self.alg.n_factors:
            raise ParseError(f"expected {self.alg.n_factors} factors")
        elems = [evaluate(p, _factor_ctx(f)) for f, p in zip(self.alg.factors, parts)]
        return fiber_embed(self.alg, elems)

    def divide(self, a, b):
        if set(b.terms) != {self.alg.empty()}:
            raise ParseError("can only divide by a coefficient")
        return a * self.alg.coeff(b.terms[self.alg.empty()].inv())

    def power(self, a, k):
        if set(a.terms) == {self.alg.empty()}:
            return self.alg.coeff(a.terms[self.alg.empty()] ** k)
        raise ParseError("powers of chains are not supported")

    def zsugar(self, k, l):
        raise ParseError("Z[k,l] must appear inside a slot function")

    def shift(self, a, vec):
        raise ParseError("shifts apply to base expressions only")


def _factor_ctx(pres: Presentation):
    from .ncalg import AlgebraContext

    return AlgebraContext(pres)


# ---------------------------------------------------------------------------
# factorwise maps on chains


def as_chain(x):
    """View an algebra element as a one-factor chain."""
    if isinstance(x, FiberChain):
        return x
    alg = FiberAlgebra([x.pres])
    return FiberChain(alg, {(w,): c for w, c in x.terms.items()})


def chain_to_element(x: FiberChain) -> AlgElement:
    if x.alg.n_factors != 1:
        raise ValueError("not a one-factor chain")
    p = x.alg.factors[0]
    return AlgElement(p, {ws[0]: c for ws, c in x.terms.items()})


def _image_terms(img):
    """(local coefficient, words, gamma, n_factors) for each term of a factor image."""
    if isinstance(img, CrossedElement):
        return [(b, (), g) for g, b in img.terms.items()], 0
    if isinstance(img, AlgElement):
        return [(c, (w,), None) for w, c in img.terms.items()], 1
    if isinstance(img, FiberChain):
        return [(c, ws, None) for ws, c in img.terms.items()], img.alg.n_factors
    raise TypeError(f"unsupported image {type(img).__name__}")


def apply_factorwise(x, maps: Sequence, crossed: CrossedProduct | None = None):
    """Apply one map per factor of a chain (``None`` means identity).

    Each map sends words of its factor to an algebra element, a chain or a
    crossed element; crossed pieces contribute no factors and merge their two
    junction slots.  Returns a chain, an element (one factor) or a crossed
    element (no factors).
    """
    x = as_chain(x)
    src = x.alg
    base = src.base
    if len(maps) != src.n_factors:
        raise ValueError("one map per factor required")
    out_factors = None
    acc: dict = {}
    cache: dict = {}
    for words, c in x.terms.items():
        degs = src.junction_degrees(words)
        pieces = []
        for i, (w, f) in enumerate(zip(words, maps)):
            key = (i, w)
            if key not in cache:
                if f is None:
                    img = src.factors[i].word(w)
                else:
                    img = f.word_image(w) if hasattr(f, "word_image") else f(src.factors[i].word(w))
                cache[key] = img
            pieces.append(cache[key])
        # result factor structure and slot positions
        facs = []
        starts = []
        for img in pieces:
            starts.append(sum(_n_factors(p) for p in pieces[: len(starts)]))
            facs += _factor_list(img)
        total = len(facs)
        if out_factors is None:
            out_factors = facs
        elif [id(f) for f in out_factors] != [id(f) for f in facs]:
            raise ValueError("factor images disagree on their algebras")
        slot_pos = starts + [total]

        def to_result(coef, mapping):
            return base.rename_slots(coef, mapping)

        # source coefficient: slot j -> slot_pos[j]
        cmap = {j: slot_pos[j] for j in range(src.n_factors + 1)}
        if total == 0:
            cmap = {j: None for j in range(src.n_factors + 1)}
        c0 = to_result(c, cmap)
        per = []
        for i, img in enumerate(pieces):
            terms, nf = _image_terms(img)
            lst = []
            for lc, ws, g in terms:
                if nf == 0:
                    m = {None: (slot_pos[i] if total else None)}
                    if g != degs[i]:
                        raise ValueError("crossed image has the wrong group element")
                else:
                    m = {k: slot_pos[i] + k for k in range(nf + 1)}
                    if total == 0:
                        m = {k: None for k in range(nf + 1)}
                lst.append((to_result(lc, m), ws, g))
            per.append(lst)
        for combo in itertools.product(*per):
            t = c0
            ws: tuple = ()
            g = None
            for lc, w, gg in combo:
                t = t * lc
                ws += w
                if gg is not None:
                    g = gg
            k = (ws, g) if total == 0 else ws
            acc[k] = acc[k] + t if k in acc else t
    if out_factors is None:
        return None
    if not out_factors:
        cp = crossed or CrossedProduct(base)
        out = {}
        for (ws, g), t in acc.items():
            out[g] = out[g] + t if g in out else t
        return CrossedElement(cp, out)
    alg = FiberAlgebra(out_factors)
    chain = alg.reduce(FiberChain(alg, acc))
    if len(out_factors) == 1:
        return chain_to_element(chain)
    return chain


def _n_factors(img) -> int:
    if isinstance(img, CrossedElement):
        return 0
    if isinstance(img, AlgElement):
        return 1
    return img.alg.n_factors


def _factor_list(img) -> list:
    if isinstance(img, CrossedElement):
        return []
    if isinstance(img, AlgElement):
        return [img.pres]
    return list(img.alg.factors)


# ---------------------------------------------------------------------------
# op / co / bar views and presentations


class View:
    """A presentation seen as ``A^op``, ``A^co`` and/or ``A-bar`` on the same set."""

    def __init__(self, pres: Presentation, op: bool = False, co: bool = False, bar: bool = False):
        self.pres = pres
        self.op, self.co, self.bar = op, co, bar
        self.base = pres.base

    def toggled(self, op=False, co=False, bar=False) -> "View":
        return View(self.pres, self.op ^ op, self.co ^ co, self.bar ^ bar)

    @property
    def label(self) -> str:
        bits = [b for b, f in (("op", self.op), ("co", self.co), ("bar", self.bar)) if f]
        return self.pres.name + ("^" + ",".join(bits) if bits else "")

    def zero(self):
        return self.pres.zero()

    def one(self):
        return self.pres.one()

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return self.pres.mul(y, x) if self.op else self.pres.mul(x, y)

    def _coeff_to_pres(self, c: RatFunc) -> RatFunc:
        if self.bar:
            c = self.base.involve(c, (R_SLOT, S_SLOT))
        if self.co:
            c = self.base.rename_slots(c, {R_SLOT: S_SLOT, S_SLOT: R_SLOT})
        return c

    def coeff(self, c: RatFunc):
        return self.pres.coeff(self._coeff_to_pres(c))

    def r(self, b: RatFunc):
        return self.coeff(self.base.rename_slots(b, {None: R_SLOT}))

    def s(self, b: RatFunc):
        return self.coeff(self.base.rename_slots(b, {None: S_SLOT}))

    def is_zero(self, x) -> bool:
        return self.pres.is_zero(x)

    def reduce(self, x):
        return self.pres.reduce(x)

    def degree(self, x):
        d = self.pres.degree(x)
        if d is None:
            return None
        g, h = d
        if self.op:
            g, h = _vneg(g), _vneg(h)
        if self.co:
            g, h = h, g
        return (g, h)

    def star(self, x):
        return self.pres.star(x)

    def format(self, x) -> str:
        return self.pres.format(x)


def as_view(alg):
    return View(alg) if isinstance(alg, Presentation) else alg


def convert_element(x: AlgElement, target: Presentation, op=False, co=False, bar=False) -> AlgElement:
    """Rewrite an element of A in the generators of the transformed presentation."""
    src = x.pres
    base = src.base
    out: dict = {}
    for w, c in x.terms.items():
        if bar:
            c = base.involve(c, (R_SLOT, S_SLOT))
        if co:
            c = base.rename_slots(c, {R_SLOT: S_SLOT, S_SLOT: R_SLOT})
        if op:
            d = src.degree_of_word(w)
            dd = (_vneg(d[0]), _vneg(d[1]))
            if co:
                dd = (dd[1], dd[0])
            # c *_A w = w *_op c = (-deg w) . c  *_op  w_reversed
            c = target.shift(c, dd)
            w = tuple(reversed(w))
        ww = tuple(target.index[src.gens[i].name] for i in w)
        out[ww] = out[ww] + c if ww in out else c
    return target.reduce(AlgElement(target, out))


def transform_presentation(pres: Presentation, which: str) -> Presentation:
    """``A^op``, ``A^co``, ``A-bar`` or a composite such as ``co,op`` as a new presentation."""
    flags = set(which.replace("+", ",").split(","))
    if not flags <= {"op", "co", "bar"}:
        raise ValueError(f"unknown transformation {which!r}")
    op, co, bar = "op" in flags, "co" in flags, "bar" in flags
    gens = []
    for g in pres.gens:
        r, s = g.deg_r, g.deg_s
        if op:
            r, s = _vneg(r), _vneg(s)
        if co:
            r, s = s, r
        gens.append(Generator(g.name, r, s))
    label = pres.name + "^" + ",".join(sorted(flags))
    out = Presentation(pres.base, gens, {}, pres.precedence, pres.reverse_order ^ op, name=label,
                       budget=pres.budget)
    rels = []
    for lhs, rhs in pres.rules.items():
        rel = AlgElement(pres, {lhs: pres.base.one, **{w: -c for w, c in rhs.items()}})
        rels.append(_convert_free(rel, out, op, co, bar))
    out.reset_rules(orient_relations(out, rels))
    if pres.star_images is not None:
        out.set_star({pres.gens[i].name: convert_element(x, out, op, co, bar)
                      for i, x in pres.star_images.items()})
    return out


def _convert_free(x: AlgElement, target: Presentation, op: bool, co: bool, bar: bool) -> AlgElement:
    src = x.pres
    base = src.base
    out: dict = {}
    for w, c in x.terms.items():
        if bar:
            c = base.involve(c, (R_SLOT, S_SLOT))
        if co:
            c = base.rename_slots(c, {R_SLOT: S_SLOT, S_SLOT: R_SLOT})
        if op:
            d = src.degree_of_word(w)
            dd = (_vneg(d[0]), _vneg(d[1]))
            if co:
                dd = (dd[1], dd[0])
            c = target.shift(c, dd)
            w = tuple(reversed(w))
        ww = tuple(target.index[src.gens[i].name] for i in w)
        out[ww] = out[ww] + c if ww in out else c
    return AlgElement(target, out)
