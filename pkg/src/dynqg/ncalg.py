"""Presented (B, Gamma)-algebras with coefficient-left normal forms.

An element is a finite sum ``sum c_w * w`` with ``w`` a word in the generators
and ``c_w`` a coefficient in slots 0 (``r``) and 1 (``s``).  Moving a
coefficient past a word ``w`` of degree ``(g, h)`` applies ``g`` to the r-slot
and ``h`` to the s-slot.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .coeff import BaseSpec, RatFunc
from .parser import BaseContext, ParseError, evaluate, parse
from .report import Report

R_SLOT, S_SLOT = 0, 1
DEFAULT_BUDGET = 10 ** 6


class ReductionBudgetExceeded(RuntimeError):
    pass


class DegenerateRelations(ValueError):
    """The relations force a nonzero coefficient to vanish."""

    def __init__(self, msg: str, witness=None):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class Generator:
    name: str
    deg_r: tuple
    deg_s: tuple

    @property
    def degree(self) -> tuple:
        return (self.deg_r, self.deg_s)


def _vadd(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _vneg(a: tuple) -> tuple:
    return tuple(-x for x in a)


class AlgElement:
    """Immutable linear combination of words; use the owning presentation for products."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: "Presentation", terms: dict):
        self.pres = pres
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def __add__(self, other):
        other = self.pres.coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return AlgElement(self.pres, out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return AlgElement(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.pres.coerce(other))

    def __rsub__(self, other):
        return self.pres.coerce(other) - self

    def __mul__(self, other):
        return self.pres.mul(self, self.pres.coerce(other))

    def __rmul__(self, other):
        return self.pres.mul(self.pres.coerce(other), self)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of algebra elements are not defined")
        out = self.pres.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            try:
                other = self.pres.coerce(other)
            except TypeError:
                return NotImplemented
        return self.pres.is_zero(self - other)

    def __hash__(self):
        raise TypeError("algebra elements are unhashable")

    def is_zero(self) -> bool:
        return self.pres.is_zero(self)

    def __repr__(self):
        return f"AlgElement({self.pres.format(self)})"

    def __str__(self):
        return self.pres.format(self)


class Presentation:
    """Generators, a rewriting system and an optional involution on generators.

    Words are compared degree-lexicographically using ``precedence`` (first is
    largest); with ``reverse_order`` words are compared from the right, which is
    the order induced on the opposite algebra.
    """

    def __init__(
        self,
        base: BaseSpec,
        generators: Sequence[Generator],
        rules: dict | None = None,
        precedence: Sequence[str] | None = None,
        reverse_order: bool = False,
        name: str = "A",
        budget: int = DEFAULT_BUDGET,
    ):
        self.base = base
        self.gens = tuple(generators)
        self.name = name
        self.budget = budget
        self.reverse_order = reverse_order
        self.index = {g.name: i for i, g in enumerate(self.gens)}
        if len(self.index) != len(self.gens):
            raise ValueError("duplicate generator names")
        for g in self.gens:
            if len(g.deg_r) != base.gamma_rank or len(g.deg_s) != base.gamma_rank:
                raise ValueError(f"degree of {g.name} has the wrong rank")
        prec = list(precedence) if precedence else [g.name for g in self.gens]
        if sorted(prec) != sorted(self.index):
            raise ValueError("precedence must list every generator once")
        self.precedence = tuple(prec)
        # rank: larger means bigger in the order
        self._rank = {self.index[nm]: len(prec) - k for k, nm in enumerate(prec)}
        self.rules: dict = {}
        self._lhs_lengths: list = []
        self.star_images: dict | None = None
        self.hopf = None
        self.matrix_pool: list = []
        self.reset_rules(rules or {})

    # bookkeeping ------------------------------------------------------------
    def reset_rules(self, rules: dict) -> None:
        """Install rules ``lhs word -> dict(word -> coefficient)``; lhs must exceed rhs words."""
        for lhs, rhs in rules.items():
            for w in rhs:
                if not self.word_less(w, lhs):
                    raise ValueError(f"rule {self.word_str(lhs)} is not decreasing")
        self.rules = {tuple(l): dict(r) for l, r in rules.items()}
        self._lhs_lengths = sorted({len(l) for l in self.rules})
        self._nf_cache: dict = {}
        self._shift_cache: dict = {}
        self._star_cache: dict = {}
        self._deg_cache: dict = {(): (self.base.identity(), self.base.identity())}
        self.steps = 0

    def word_key(self, w: tuple) -> tuple:
        ranks = [self._rank[i] for i in (reversed(w) if self.reverse_order else w)]
        return (len(w), ranks)

    def word_less(self, a: tuple, b: tuple) -> bool:
        return self.word_key(a) < self.word_key(b)

    def degree_of_word(self, w: tuple) -> tuple:
        hit = self._deg_cache.get(w)
        if hit is None:
            r, s = self.degree_of_word(w[:-1])
            g = self.gens[w[-1]]
            hit = (_vadd(r, g.deg_r), _vadd(s, g.deg_s))
            self._deg_cache[w] = hit
        return hit

    def degree(self, x: AlgElement):
        """Common degree of the terms of ``x``; None for zero, ValueError if mixed."""
        degs = {self.degree_of_word(w) for w in x.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self, x: AlgElement) -> bool:
        return len({self.degree_of_word(w) for w in x.terms}) <= 1

    # construction ---------------------------------------------------------
    def zero(self) -> AlgElement:
        return AlgElement(self, {})

    def one(self) -> AlgElement:
        return AlgElement(self, {(): self.base.one})

    def gen(self, name: str) -> AlgElement:
        return AlgElement(self, {(self.index[name],): self.base.one})

    def coeff(self, c: RatFunc) -> AlgElement:
        return AlgElement(self, {(): c})

    def r(self, b: RatFunc) -> AlgElement:
        return self.coeff(self.base.rename_slots(b, {None: R_SLOT}))

    def s(self, b: RatFunc) -> AlgElement:
        return self.coeff(self.base.rename_slots(b, {None: S_SLOT}))

    def word(self, w: Sequence[int], c: RatFunc | None = None) -> AlgElement:
        return AlgElement(self, {tuple(w): c if c is not None else self.base.one})

    def coerce(self, x) -> AlgElement:
        if isinstance(x, AlgElement):
            if x.pres is not self:
                raise TypeError("element of a different presentation")
            return x
        if isinstance(x, RatFunc):
            return self.coeff(x)
        if isinstance(x, (int, Fraction)):
            return self.coeff(self.base.const(x))
        raise TypeError(f"cannot coerce {x!r}")

    # coefficient shifts ---------------------------------------------------
    def shift(self, c: RatFunc, deg: tuple) -> RatFunc:
        """Coefficient ``c'`` with ``w * c = c' * w`` for a word of degree ``deg``."""
        g, h = deg
        if c.is_constant() or (not any(g) and not any(h)):
            return c
        key = (c.key(), g, h)
        hit = self._shift_cache.get(key)
        if hit is None:
            hit = self.base.act_slots(c, {R_SLOT: g, S_SLOT: h})
            self._shift_cache[key] = hit
        return hit

    # reduction ------------------------------------------------------------
    def _find(self, w: tuple):
        for i in range(len(w)):
            for L in self._lhs_lengths:
                if i + L <= len(w) and w[i:i + L] in self.rules:
                    return i, L
        return None

    def is_normal_word(self, w: tuple) -> bool:
        return self._find(tuple(w)) is None

    def nf_word(self, w: tuple) -> dict:
        """Normal form of a single word as ``{word: coefficient}``."""
        hit = self._nf_cache.get(w)
        if hit is not None:
            return hit
        pos = self._find(w)
        if pos is None:
            out = {w: self.base.one}
        else:
            self.steps += 1
            if self.steps > self.budget:
                raise ReductionBudgetExceeded(f"more than {self.budget} rewriting steps")
            i, L = pos
            u, v = w[:i], w[i + L:]
            du = self.degree_of_word(u)
            out = {}
            for m, c in self.rules[w[i:i + L]].items():
                cc = self.shift(c, du)
                for w2, c2 in self.nf_word(u + m + v).items():
                    t = cc * c2
                    out[w2] = out[w2] + t if w2 in out else t
            out = {k: c for k, c in out.items() if not c.is_zero()}
        self._nf_cache[w] = out
        return out

    def reduce(self, x: AlgElement) -> AlgElement:
        out: dict = {}
        for w, c in x.terms.items():
            for w2, c2 in self.nf_word(w).items():
                t = c * c2
                out[w2] = out[w2] + t if w2 in out else t
        return AlgElement(self, out)

    def is_zero(self, x: AlgElement) -> bool:
        return not self.reduce(x).terms

    def mul(self, x: AlgElement, y: AlgElement) -> AlgElement:
        out: dict = {}
        for w1, c1 in x.terms.items():
            d1 = self.degree_of_word(w1)
            for w2, c2 in y.terms.items():
                c = c1 * self.shift(c2, d1)
                for w3, c3 in self.nf_word(w1 + w2).items():
                    t = c * c3
                    out[w3] = out[w3] + t if w3 in out else t
        return AlgElement(self, out)

    def add(self, x: AlgElement, y: AlgElement) -> AlgElement:
        return x + y

    def prod(self, xs: Iterable[AlgElement]) -> AlgElement:
        out = self.one()
        for x in xs:
            out = self.mul(out, x)
        return out

    def mul_word_free(self, x: AlgElement, y: AlgElement) -> AlgElement:
        """Product in the free algebra over the coefficients (no rewriting)."""
        out: dict = {}
        for w1, c1 in x.terms.items():
            d1 = self.degree_of_word(w1)
            for w2, c2 in y.terms.items():
                t = c1 * self.shift(c2, d1)
                w = w1 + w2
                out[w] = out[w] + t if w in out else t
        return AlgElement(self, out)

    # involution -------------------------------------------------------------
    def set_star(self, images: dict) -> None:
        """Install ``generator name -> element``; each image must have the negated degree."""
        out = {}
        for nm, x in images.items():
            x = self.reduce(self.coerce(x))
            g = self.gens[self.index[nm]]
            d = self.degree(x)
            if d is not None and d != (_vneg(g.deg_r), _vneg(g.deg_s)):
                raise ValueError(f"star image of {nm} has degree {d}")
            out[self.index[nm]] = x
        if len(out) != len(self.gens):
            raise ValueError("star image needed for every generator")
        self.star_images = out
        self._star_cache = {}

    def star_word(self, w: tuple) -> AlgElement:
        hit = self._star_cache.get(w)
        if hit is None:
            if not w:
                hit = self.one()
            else:
                hit = self.mul(self.star_images[w[-1]], self.star_word(w[:-1]))
            self._star_cache[w] = hit
        return hit

    def star(self, x: AlgElement) -> AlgElement:
        if self.star_images is None:
            raise ValueError(f"{self.name} has no involution")
        out = self.zero()
        for w, c in x.terms.items():
            cs = self.base.involve(c, (R_SLOT, S_SLOT))
            sw = self.star_word(w)
            d = self.degree_of_word(w)
            cs = self.shift(cs, (_vneg(d[0]), _vneg(d[1])))
            out = out + AlgElement(self, {k: cs * v for k, v in sw.terms.items()})
        return out

    # printing and parsing ---------------------------------------------------
    def word_str(self, w: tuple) -> str:
        return "*".join(self.gens[i].name for i in w) if w else "1"

    def coeff_str(self, c: RatFunc) -> str:
        return self.base.format(c, {R_SLOT: "r", S_SLOT: "s"})

    def sorted_terms(self, x: AlgElement) -> list:
        return sorted(x.terms.items(), key=lambda t: self.word_key(t[0]), reverse=True)

    def format(self, x: AlgElement) -> str:
        if not x.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms(x):
            parts.append(format_term(self.coeff_str(c), c, self.word_str(w) if w else ""))
        return join_terms(parts)

    def parse(self, text: str) -> AlgElement:
        return evaluate(parse(text), AlgebraContext(self))

    def __repr__(self):
        return f"Presentation({self.name}, {len(self.gens)} generators, {len(self.rules)} rules)"


def format_term(cstr: str, c: RatFunc, wstr: str) -> str:
    """Render ``c * w``; a term string may begin with '-'."""
    if not wstr:
        return cstr
    if c.is_one():
        return wstr
    if c.is_constant() and (-c).is_one():
        return "-" + wstr
    if c.d.is_one() and len(c.n) == 1:
        return f"{cstr}*{wstr}"
    return f"({cstr})*{wstr}"


def join_terms(parts: list) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class AlgebraContext(BaseContext):
    """Evaluate parsed expressions inside a presentation."""

    def __init__(self, pres: Presentation):
        super().__init__(pres.base)
        self.pres = pres

    def number(self, q):
        return self.pres.coeff(self.base.const(q))

    def name(self, nm):
        if nm in self.pres.index:
            return self.pres.gen(nm)
        if nm in self.base.shared:
            return self.pres.coeff(self.base.var(nm))
        raise ParseError(f"unknown generator {nm!r}")

    def call(self, fname, arg):
        b = evaluate(arg, BaseContext(self.base))
        if fname == "r":
            return self.pres.r(b)
        if fname == "s":
            return self.pres.s(b)
        raise ParseError(f"unknown function {fname!r}")

    def zsugar(self, k, l):
        raise ParseError("Z[k,l] must appear inside r(...) or s(...)")

    def divide(self, a, b):
        if set(b.terms) - {()}:
            raise ParseError("can only divide by a coefficient")
        if not b.terms:
            raise ZeroDivisionError("division by zero")
        return self.pres.mul(a, self.pres.coeff(b.terms[()].inv()))

    def power(self, a, k):
        if set(a.terms) <= {()} and a.terms:
            return self.pres.coeff(a.terms[()] ** k)
        return a ** k

    def shift(self, a, vec):
        raise ParseError("shifts apply to base expressions only")


# ---------------------------------------------------------------------------
# orientation of relations


def homogeneous_parts(pres: Presentation, x: AlgElement) -> list:
    parts: dict = {}
    for w, c in x.terms.items():
        parts.setdefault(pres.degree_of_word(w), {})[w] = c
    return [AlgElement(pres, t) for _, t in sorted(parts.items())]


def orient_relations(pres: Presentation, relations: Sequence[AlgElement]) -> dict:
    """Rules from relations by row reduction within each degree component.

    Each relation is split into homogeneous parts; the left span of each degree
    component is brought to reduced echelon form with pivots at the largest
    words.  Rules whose left side contains another left side are reduced again
    until the system is interreduced.  Raises ``DegenerateRelations`` when a
    nonzero pure coefficient lies in the span.
    """
    rows = []
    for rel in relations:
        for part in homogeneous_parts(pres, rel):
            if part.terms:
                rows.append(dict(part.terms))
    while True:
        rules = _echelon(pres, rows)
        # a left side containing another left side must be rewritten
        lhs_set = set(rules)
        redo = []
        for lhs in rules:
            for other in lhs_set:
                if other != lhs and len(other) <= len(lhs) and _contains(lhs, other):
                    redo.append(lhs)
                    break
        if not redo:
            break
        tmp = Presentation(pres.base, pres.gens, {}, pres.precedence, pres.reverse_order)
        tmp.reset_rules({l: r for l, r in rules.items() if l not in redo})
        rows = [
            {**{l: pres.base.one}, **{w: -c for w, c in r.items()}} for l, r in rules.items() if l not in redo
        ]
        for lhs in redo:
            rel = AlgElement(tmp, {lhs: pres.base.one, **{w: -c for w, c in rules[lhs].items()}})
            red = tmp.reduce(rel)
            if red.terms:
                rows.append(dict(red.terms))
    # final pass: right sides in normal form
    tmp = Presentation(pres.base, pres.gens, {}, pres.precedence, pres.reverse_order)
    tmp.reset_rules(rules)
    out = {}
    for lhs, rhs in rules.items():
        tmp2 = Presentation(pres.base, pres.gens, {}, pres.precedence, pres.reverse_order)
        tmp2.reset_rules({l: r for l, r in rules.items() if l != lhs})
        out[lhs] = dict(tmp2.reduce(AlgElement(tmp2, rhs)).terms)
    return out


def _contains(big: tuple, small: tuple) -> bool:
    L = len(small)
    return any(big[i:i + L] == small for i in range(len(big) - L + 1))


def _echelon(pres: Presentation, rows: list) -> dict:
    groups: dict = {}
    for row in rows:
        degs = {pres.degree_of_word(w) for w in row}
        if len(degs) != 1:
            raise ValueError("row is not homogeneous")
        groups.setdefault(degs.pop(), []).append(dict(row))
    rules = {}
    for deg in sorted(groups):
        rws = [r for r in groups[deg] if r]
        words = sorted({w for r in rws for w in r}, key=pres.word_key, reverse=True)
        pivots: list = []  # (word, row) with row normalized at its pivot
        for row in rws:
            row = dict(row)
            for pw, prow in pivots:
                if pw in row:
                    f = row[pw]
                    for w, c in prow.items():
                        row[w] = row[w] - f * c if w in row else -(f * c)
                    row = {w: c for w, c in row.items() if not c.is_zero()}
            if not row:
                continue
            lead = max(row, key=pres.word_key)
            inv = row[lead].inv()
            row = {w: c * inv for w, c in row.items()}
            # eliminate the new pivot from earlier rows
            new_pivots = []
            for pw, prow in pivots:
                if lead in prow:
                    f = prow[lead]
                    prow = dict(prow)
                    for w, c in row.items():
                        prow[w] = prow[w] - f * c if w in prow else -(f * c)
                    prow = {w: c for w, c in prow.items() if not c.is_zero()}
                new_pivots.append((pw, prow))
            pivots = new_pivots + [(lead, row)]
        for pw, prow in pivots:
            if pw == ():
                raise DegenerateRelations(
                    "relations force a nonzero coefficient to vanish", pres.coeff_str(prow[()])
                )
            rules[pw] = {w: -c for w, c in prow.items() if w != pw}
        del words
    return rules


# ---------------------------------------------------------------------------
# confluence


def ambiguities(pres: Presentation, max_len: int = 3) -> list:
    """Overlap and inclusion ambiguities of the rule left sides up to ``max_len`` letters."""
    out = []
    lhss = sorted(pres.rules, key=pres.word_key)
    for l1 in lhss:
        for l2 in lhss:
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    w = l1 + l2[k:]
                    if len(w) <= max_len:
                        out.append(("overlap", l1, l2, w, len(l1) - k))
            if l1 != l2 and len(l2) < len(l1):
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i:i + len(l2)] == l2 and len(l1) <= max_len:
                        out.append(("inclusion", l1, l2, l1, i))
    return out


def _one_step(pres: Presentation, w: tuple, i: int, lhs: tuple) -> AlgElement:
    u, v = w[:i], w[i + len(lhs):]
    du = pres.degree_of_word(u)
    terms: dict = {}
    for m, c in pres.rules[lhs].items():
        ww = u + m + v
        cc = pres.shift(c, du)
        terms[ww] = terms[ww] + cc if ww in terms else cc
    return AlgElement(pres, terms)


def check_confluence(pres: Presentation, max_overlap_len: int = 3) -> Report:
    rep = Report(f"confluence {pres.name}")
    for kind, l1, l2, w, pos in ambiguities(pres, max_overlap_len):
        a = _one_step(pres, w, 0, l1)
        b = _one_step(pres, w, pos, l2)
        diff = pres.reduce(a - b)
        label = f"{kind} {pres.word_str(l1)} / {pres.word_str(l2)} on {pres.word_str(w)}"
        rep.add(label, not diff.terms, None if not diff.terms else pres.format(diff))
    return rep


def normal_words(pres: Presentation, max_len: int) -> list:
    """All irreducible words up to ``max_len`` letters (a PBW-type basis when confluent)."""
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for i in range(len(pres.gens)):
                ww = w + (i,)
                if pres.is_normal_word(ww):
                    nxt.append(ww)
        out += nxt
        frontier = nxt
    return out


# ---------------------------------------------------------------------------
# morphisms


class AlgMorphism:
    """Multiplicative map out of a presentation given by generator images.

    ``target`` is any algebra object (presentation, view, fiber algebra, crossed
    product).  ``slot_map`` sends the source coefficient slots 0/1 to target
    coefficient slots; ``anti`` reverses products (and then the map must also
    exchange r and s to respect the grading, which ``slot_map`` expresses).
    """

    def __init__(self, source: Presentation, target, images: dict, slot_map=(R_SLOT, S_SLOT),
                 anti: bool = False, name: str = "phi"):
        self.source = source
        self.target = target
        self.images = {}
        for k, v in images.items():
            idx = source.index[k] if isinstance(k, str) else k
            self.images[idx] = v
        missing = [g.name for i, g in enumerate(source.gens) if i not in self.images]
        if missing:
            raise ValueError(f"no image for generators {missing}")
        self.slot_map = tuple(slot_map)
        self.anti = anti
        self.name = name
        self._word_cache: dict = {}

    def coeff_image(self, c: RatFunc):
        mapping = {R_SLOT: self.slot_map[0], S_SLOT: self.slot_map[1]}
        return self.target.coeff(self.source.base.rename_slots(c, mapping))

    def word_image(self, w: tuple):
        hit = self._word_cache.get(w)
        if hit is None:
            if not w:
                hit = self.target.one()
            elif self.anti:
                hit = self.target.mul(self.images[w[-1]], self.word_image(w[:-1]))
            else:
                hit = self.target.mul(self.word_image(w[:-1]), self.images[w[-1]])
            self._word_cache[w] = hit
        return hit

    def __call__(self, x: AlgElement):
        out = self.target.zero()
        for w, c in x.terms.items():
            ci = self.coeff_image(c)
            wi = self.word_image(w)
            t = self.target.mul(wi, ci) if self.anti else self.target.mul(ci, wi)
            out = self.target.add(out, t)
        return out

    def apply_free(self, terms: dict):
        """Image of an unreduced combination of words."""
        return self(AlgElement(self.source, terms))


def check_morphism(phi: AlgMorphism) -> Report:
    """Every rule ``lhs - rhs`` must map to zero (plus degree compatibility)."""
    rep = Report(f"morphism {phi.name}")
    src = phi.source
    for lhs, rhs in sorted(src.rules.items(), key=lambda kv: src.word_key(kv[0])):
        rel = AlgElement(src, {lhs: src.base.one, **{w: -c for w, c in rhs.items()}})
        img = phi(rel)
        ok = phi.target.is_zero(img)
        rep.add(f"relation {src.word_str(lhs)}", ok, None if ok else phi.target.format(img))
    return rep


def check_star(pres: Presentation, probes: int = 2) -> Report:
    """The involution respects the relations and squares to the identity."""
    rep = Report(f"star {pres.name}")
    if pres.star_images is None:
        rep.add("involution present", False, "no star images")
        return rep
    for lhs, rhs in sorted(pres.rules.items(), key=lambda kv: pres.word_key(kv[0])):
        rel = AlgElement(pres, {lhs: pres.base.one, **{w: -c for w, c in rhs.items()}})
        img = pres.star(rel)
        rep.add(f"star respects {pres.word_str(lhs)}", img.is_zero(), None if img.is_zero() else pres.format(img))
    for g in pres.gens:
        x = pres.gen(g.name)
        back = pres.star(pres.star(x))
        rep.add(f"star^2 = id on {g.name}", back == x, None if back == x else pres.format(back))
    for a, b in itertools.islice(itertools.product(pres.gens, repeat=2), probes * len(pres.gens)):
        x, y = pres.gen(a.name), pres.gen(b.name)
        lhs = pres.star(x * y)
        rhs = pres.star(y) * pres.star(x)
        rep.add(f"star antimultiplicative on {a.name}*{b.name}", lhs == rhs)
    return rep
