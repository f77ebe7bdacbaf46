"""Coefficient fields for dynamical quantum groups.

A base is a field of rational functions carrying an action of Gamma = Z^d and
an involution.  Coefficients of algebra elements live in the same field with
one copy of every dynamical variable per tensor slot, so that ``r(b)`` and
``s(b)`` (and the middle slots of a fiber chain) are independent.  Shared
variables are never duplicated, which identifies ``r(b) = s(b)`` for them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import flint

Gamma = tuple  # tuple[int, ...]

EPS = "~eps"


class CoeffError(ArithmeticError):
    pass


class PoleError(CoeffError):
    """A denominator vanishes under a substitution."""


def _fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, str):
        f = Fraction(x)
        return flint.fmpq(f.numerator, f.denominator)
    raise TypeError(f"not a rational constant: {x!r}")


def to_fraction(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class RatFunc:
    """Quotient ``n/d`` of coprime polynomials, denominator with leading coefficient 1."""

    __slots__ = ("base", "n", "d", "_key")

    def __init__(self, base: "BaseSpec", n, d=None, normalized: bool = False):
        self.base = base
        if d is None:
            d = base.ctx.constant(1)
        if not normalized:
            if d.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if n.is_zero():
                d = base.ctx.constant(1)
            elif not d.is_constant():
                g = n.gcd(d)
                if not g.is_one():
                    n = n / g
                    d = d / g
            lc = d.leading_coefficient()
            if lc != 1:
                n = n / lc
                d = d / lc
        self.n = n
        self.d = d
        self._key = None

    # construction helpers -------------------------------------------------
    def _new(self, n, d=None, normalized=False) -> "RatFunc":
        return RatFunc(self.base, n, d, normalized)

    def key(self):
        if self._key is None:
            self._key = (str(self.n), str(self.d))
        return self._key

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.base.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.n == other.n and self.d == other.d

    def is_zero(self) -> bool:
        return self.n.is_zero()

    def is_one(self) -> bool:
        return self.n.is_one() and self.d.is_one()

    def is_constant(self) -> bool:
        return self.n.is_constant() and self.d.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise CoeffError("not a constant")
        return to_fraction(self.n.leading_coefficient()) if not self.n.is_zero() else Fraction(0)

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return self.base.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        if o.n.is_zero():
            return self
        if self.n.is_zero():
            return o
        if self.d == o.d:
            return self._new(self.n + o.n, self.d)
        return self._new(self.n * o.d + o.n * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.n, self.d, normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if self.n.is_zero() or o.n.is_zero():
            return self.base.zero
        if o.d.is_one() and o.n.is_constant():
            return self._new(self.n * o.n.leading_coefficient(), self.d, normalized=True)
        if self.d.is_one() and self.n.is_constant():
            return o._new(o.n * self.n.leading_coefficient(), o.d, normalized=True)
        n1, d1, n2, d2 = self.n, self.d, o.n, o.d
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 / g, d2 / g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 / g, d1 / g
        n, d = n1 * n2, d1 * d2
        lc = d.leading_coefficient()
        if lc != 1:
            n, d = n / lc, d / lc
        return self._new(n, d, normalized=True)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.n.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self._new(self.d, self.n)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return self._new(self.n ** k, self.d ** k, normalized=True)

    def __repr__(self):
        return f"RatFunc({self.base.format(self)})"

    def __str__(self):
        return self.base.format(self)


@dataclass(frozen=True)
class VarSpec:
    name: str
    leg: str = "dynamical"  # or "shared"
    star: str | None = None  # expression for the involution image; default fixes the variable


@dataclass(eq=False)
class BaseSpec:
    """Base field with a Gamma-action by substitution and an involution.

    ``action[j]`` and ``inverse[j]`` map variable names to expressions giving the
    image under the j-th generator of Gamma and its inverse.  Variables absent
    from a map are fixed.  ``zeta`` (optional) enables the ``Z[k,l]`` sugar for
    ``zeta@k / zeta@l``.  ``ring_gens`` lists expressions generating the subring
    on which homomorphisms are checked; by default the variables are used.
    """

    name: str
    vars: Sequence[VarSpec]
    gamma_rank: int = 1
    action: Sequence[dict] = ()
    inverse: Sequence[dict] = ()
    zeta: str | None = None
    ring_gens: Sequence[str] | None = None
    max_slots: int = 6
    _act_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.vars = tuple(self.vars)
        self.action = tuple(dict(a) for a in self.action) or tuple({} for _ in range(self.gamma_rank))
        self.inverse = tuple(dict(a) for a in self.inverse) or tuple({} for _ in range(self.gamma_rank))
        if len(self.action) != self.gamma_rank or len(self.inverse) != self.gamma_rank:
            raise ValueError("need one action and one inverse map per generator of Gamma")
        names = [v.name for v in self.vars]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.var_names = names
        self.shared = [v.name for v in self.vars if v.leg == "shared"]
        self.dynamical = [v.name for v in self.vars if v.leg != "shared"]
        ctx_names = list(self.shared) + list(self.dynamical)
        for s in range(self.max_slots):
            ctx_names += [f"{x}~{s}" for x in self.dynamical]
        ctx_names.append(EPS)
        self.ctx = flint.fmpq_mpoly_ctx.get(tuple(ctx_names), "lex")
        self.nvars = len(ctx_names)
        self.index = {nm: i for i, nm in enumerate(ctx_names)}
        self.gens = self.ctx.gens()
        self.zero = RatFunc(self, self.ctx.constant(0), normalized=False)
        self.one = RatFunc(self, self.ctx.constant(1), normalized=False)
        self.eps_index = self.index[EPS]
        # parsed action images, on plain variables
        from .parser import parse_base

        self._parse = parse_base
        self._act = [self._images(a) for a in self.action]
        self._inv = [self._images(a) for a in self.inverse]
        self._star = self._images({v.name: v.star for v in self.vars if v.star is not None})
        self._rename_cache: dict = {}
        self._slot_images: dict = {}
        self._zeta = self.parse(self.zeta) if self.zeta else None
        for acts in (self._act, self._inv):
            for a in acts:
                for i, im in a.items():
                    if self.ctx.names()[i] in self.shared and not im == self.gens_rf(i):
                        raise ValueError("shared variables must be fixed by the Gamma-action")

    def signature(self) -> tuple:
        """Data determining the base up to identity of the Python object."""
        return (self.name, tuple((v.name, v.leg, v.star) for v in self.vars), self.gamma_rank,
                tuple(tuple(sorted(a.items())) for a in self.action), self.zeta)

    def same_as(self, other: "BaseSpec") -> bool:
        return self is other or self.signature() == other.signature()

    # variables and constants ---------------------------------------------
    def _images(self, mapping: dict) -> dict:
        out = {}
        for nm, expr in mapping.items():
            if nm not in self.var_names:
                raise ValueError(f"unknown variable {nm!r} in base {self.name}")
            out[self.index[nm]] = self.parse(expr)
        return out

    def const(self, c) -> RatFunc:
        return RatFunc(self, self.ctx.constant(_fmpq(c)), normalized=True)

    def var(self, name: str, slot: int | None = None) -> RatFunc:
        if slot is not None and name in self.dynamical:
            name = f"{name}~{slot}"
        return RatFunc(self, self.gens[self.index[name]], normalized=True)

    def parse(self, text: str) -> RatFunc:
        return self._parse(text, self)

    def is_shared(self, name: str) -> bool:
        return name in self.shared

    def zeta_element(self) -> RatFunc:
        if self._zeta is None:
            raise CoeffError(f"base {self.name} has no zeta element")
        return self._zeta

    def Z(self, k: int, l: int) -> RatFunc:
        """``zeta@k / zeta@l``."""
        z = self.zeta_element()
        return self.act_int(k, z) / self.act_int(l, z)

    # substitution ----------------------------------------------------------
    def subst(self, f: RatFunc, images: dict) -> RatFunc:
        """Substitute ctx-variable index -> RatFunc (same base) into ``f``."""
        if not images:
            return f
        n, nd = self._subst_poly(f.n, images)
        d, dd = self._subst_poly(f.d, images)
        if d.is_zero():
            raise PoleError("denominator vanishes under substitution")
        return RatFunc(self, n * dd, d * nd)

    def _subst_poly(self, p, images: dict):
        if p.is_constant():
            return p, self.ctx.constant(1)
        degs = p.degrees()
        live = {i: im for i, im in images.items() if degs[i] > 0}
        if not live:
            return p, self.ctx.constant(1)
        if all(im.d.is_one() for im in live.values()):
            args = list(self.gens)
            for i, im in live.items():
                args[i] = im.n
            return p.compose(*args), self.ctx.constant(1)
        # clear denominators: sum c_m prod N_i^{m_i} D_i^{e_i - m_i}
        order = list(live)
        pw: dict = {}

        def power(i, k, which):
            lst = pw.setdefault((i, which), [self.ctx.constant(1)])
            base = live[i].n if which == 0 else live[i].d
            while len(lst) <= k:
                lst.append(lst[-1] * base)
            return lst[k]

        groups: dict = {}
        for exps, c in p.terms():
            key = tuple(exps[i] for i in order)
            rest = list(exps)
            for i in order:
                rest[i] = 0
            mono = self.ctx.term(exp_vec=tuple(rest), coeff=c)
            groups[key] = groups[key] + mono if key in groups else mono
        total = self.ctx.constant(0)
        for key, mono in groups.items():
            t = mono
            for i, m in zip(order, key):
                t = t * power(i, m, 0)
                if not live[i].d.is_one():
                    t = t * power(i, degs[i] - m, 1)
            total = total + t
        den = self.ctx.constant(1)
        for i in order:
            if not live[i].d.is_one():
                den = den * power(i, degs[i], 1)
        return total, den

    def _rename(self, f: RatFunc, mapping: tuple) -> RatFunc:
        """Apply a variable permutation/merge given as a tuple of target indices."""
        args = [self.gens[j] for j in mapping]
        return RatFunc(self, f.n.compose(*args), f.d.compose(*args))

    def _slot_vars(self, slot: int | None) -> list:
        if slot is None:
            return [self.index[x] for x in self.dynamical]
        return [self.index[f"{x}~{slot}"] for x in self.dynamical]

    def rename_slots(self, f: RatFunc, mapping: dict) -> RatFunc:
        """Move coefficient slots: ``mapping`` sends slot (int or None for plain) to slot."""
        mapping = {k: v for k, v in mapping.items() if k != v}
        if not mapping:
            return f
        key = tuple(sorted(mapping.items(), key=lambda kv: (-1 if kv[0] is None else kv[0])))
        perm = self._rename_cache.get(key)
        if perm is None:
            perm = list(range(self.nvars))
            for src, dst in mapping.items():
                for a, b in zip(self._slot_vars(src), self._slot_vars(dst)):
                    perm[a] = b
            perm = tuple(perm)
            self._rename_cache[key] = perm
        if f.is_constant():
            return f
        return self._rename(f, perm)

    # Gamma-action ----------------------------------------------------------
    def _power_images(self, g: Gamma) -> dict:
        """Images of plain variables under the group element ``g``."""
        g = tuple(g)
        hit = self._act_cache.get(g)
        if hit is not None:
            return hit
        if all(x == 0 for x in g):
            images = {}
        else:
            j = next(i for i, x in enumerate(g) if x != 0)
            step = [0] * len(g)
            step[j] = 1 if g[j] > 0 else -1
            rest = tuple(x - s for x, s in zip(g, step))
            first = self._act[j] if g[j] > 0 else self._inv[j]
            inner = self._power_images(rest)
            # g = step * rest ; (g.b) = step.(rest.b): substitute rest images, then step
            images = {}
            for i in self._slot_vars(None):
                images[i] = self.subst(inner.get(i, self.gens_rf(i)), first)
            images = {i: im for i, im in images.items() if not (im.n == self.gens[i] and im.d.is_one())}
        self._act_cache[g] = images
        return images

    def gens_rf(self, i: int) -> RatFunc:
        return RatFunc(self, self.gens[i], normalized=True)

    def act(self, g: Gamma, b: RatFunc, slot: int | None = None) -> RatFunc:
        """Gamma-action of ``g`` on ``b`` (acting on the given slot's copies)."""
        if b.is_constant():
            return b
        images = self.slot_images(tuple(g), slot)
        return self.subst(b, images)

    def slot_images(self, g: Gamma, slot: int | None) -> dict:
        key = (g, slot)
        hit = self._slot_images.get(key)
        if hit is None:
            plain = self._power_images(g)
            if slot is None:
                hit = plain
            else:
                hit = {}
                for i, im in plain.items():
                    nm = self.ctx.names()[i]
                    tgt = self.index[f"{nm}~{slot}"] if nm in self.dynamical else i
                    hit[tgt] = self.rename_slots(im, {None: slot})
            self._slot_images[key] = hit
        return hit

    def act_slots(self, c: RatFunc, shifts: dict) -> RatFunc:
        """Apply independent group elements on several slots at once."""
        if c.is_constant():
            return c
        images = {}
        for slot, g in shifts.items():
            if any(g):
                images.update(self.slot_images(tuple(g), slot))
        return self.subst(c, images)

    def act_int(self, k: int, b: RatFunc) -> RatFunc:
        g = [0] * self.gamma_rank
        g[0] = k
        return self.act(tuple(g), b)

    def involve(self, b: RatFunc, slots: Iterable[int | None] = (None,)) -> RatFunc:
        """Involution, applied to the plain variables or to each listed slot."""
        if not self._star or b.is_constant():
            return b
        images = {}
        for slot in slots:
            for i, im in self._star.items():
                nm = self.ctx.names()[i]
                if nm in self.shared:
                    images[i] = im if slot is None else self.rename_slots(im, {None: slot})
                else:
                    tgt = i if slot is None else self.index[f"{nm}~{slot}"]
                    images[tgt] = im if slot is None else self.rename_slots(im, {None: slot})
        return self.subst(b, images)

    def identity(self) -> Gamma:
        return (0,) * self.gamma_rank

    # formatting ------------------------------------------------------------
    def slot_of(self, idx: int):
        """Return (variable name, slot) for a ctx index; slot None means plain/shared."""
        nm = self.ctx.names()[idx]
        if "~" in nm:
            v, s = nm.split("~")
            return v, (None if s == "eps" else int(s))
        return nm, None

    def format(self, f: RatFunc, slot_names: dict | None = None) -> str:
        n = format_poly(self, f.n, slot_names)
        if f.d.is_one():
            return n
        return f"({n})/({format_poly(self, f.d, slot_names)})"


def _fmt_q(c) -> str:
    fr = to_fraction(c)
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def format_poly(base: BaseSpec, p, slot_names: dict | None = None) -> str:
    """Print a polynomial; slot variables are grouped into ``r(...)``/``s(...)`` atoms."""
    if p.is_zero():
        return "0"
    slot_names = slot_names or {}
    pieces = []
    for exps, c in p.terms():
        groups: dict = {}
        for i, e in enumerate(exps):
            if e == 0:
                continue
            nm, slot = base.slot_of(i)
            groups.setdefault(slot, []).append(nm if e == 1 else f"{nm}^{e}")
        factors = []
        if None in groups:
            factors.append("*".join(groups.pop(None)))
        for slot in sorted(groups):
            label = slot_names.get(slot, f"m{slot}")
            factors.append(f"{label}({'*'.join(groups[slot])})")
        neg = c < 0
        mag = -c if neg else c
        if factors:
            body = "*".join(factors)
            if mag != 1:
                body = f"{_fmt_q(mag)}*{body}"
        else:
            body = _fmt_q(mag)
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# ---------------------------------------------------------------------------
# homomorphisms between bases


@dataclass(eq=False)
class BaseHom:
    """Gamma-equivariant *-homomorphism given by images of the source variables.

    With ``limit=True`` the images may contain the auxiliary symbol ``eps`` and the
    value is the limit ``eps -> 0``; this realizes maps such as the classical limit
    that are defined only on the relevant subring.
    """

    name: str
    source: BaseSpec
    target: BaseSpec
    assignment: dict
    limit: bool = False

    def __post_init__(self):
        tgt = self.target
        self._images = {}
        for nm, expr in self.assignment.items():
            if nm not in self.source.var_names:
                raise ValueError(f"unknown source variable {nm!r}")
            self._images[nm] = tgt.parse(expr)
        missing = [v for v in self.source.var_names if v not in self._images]
        if missing:
            raise ValueError(f"no image for {missing}")
        for nm in self.source.shared:
            im = self._images[nm]
            for i in range(tgt.nvars):
                if im.n.degrees()[i] or im.d.degrees()[i]:
                    v, _ = tgt.slot_of(i)
                    if v in tgt.dynamical:
                        raise ValueError(f"shared variable {nm} must map into shared variables")
        self._cache: dict = {}

    def _slot_image_map(self, slots: Sequence[int | None]) -> dict:
        key = tuple(slots)
        hit = self._cache.get(key)
        if hit is None:
            src, tgt = self.source, self.target
            hit = {}
            for nm, im in self._images.items():
                if nm in src.shared:
                    hit[src.index[nm]] = im
                    continue
                for s in slots:
                    i = src.index[nm] if s is None else src.index[f"{nm}~{s}"]
                    hit[i] = tgt.rename_slots(im, {None: s}) if s is not None else im
            self._cache[key] = hit
        return hit

    def apply(self, b: RatFunc, slots: Sequence[int | None] = (None,)) -> RatFunc:
        """Image of ``b``; every listed slot of the source goes to the same slot of the target."""
        tgt = self.target
        images = self._slot_image_map(slots)
        n = _eval_poly(b.n, images, tgt)
        d = _eval_poly(b.d, images, tgt)
        if d.is_zero():
            raise PoleError(f"{self.name}: denominator maps to zero")
        val = n / d
        if self.limit:
            val = _eps_limit(val, self.name)
        return val


def _eval_poly(p, images: dict, tgt: BaseSpec) -> RatFunc:
    """Evaluate a source polynomial at target rational functions."""
    total = tgt.zero
    cache: dict = {}
    for exps, c in p.terms():
        t = tgt.const(to_fraction(c))
        for i, e in enumerate(exps):
            if e:
                k = (i, e)
                pw = cache.get(k)
                if pw is None:
                    pw = images[i] ** e if i in images else _missing(i)
                    cache[k] = pw
                t = t * pw
        total = total + t
    return total


def _missing(i):
    raise CoeffError(f"source variable index {i} has no image")


def _eps_limit(val: RatFunc, name: str) -> RatFunc:
    base = val.base
    args = list(base.gens)
    args[base.eps_index] = base.ctx.constant(0)
    n0 = val.n.compose(*args)
    d0 = val.d.compose(*args)
    if d0.is_zero():
        raise PoleError(f"{name}: limit eps -> 0 has a pole")
    return RatFunc(base, n0, d0)


def apply_hom(phi: BaseHom, b: RatFunc) -> RatFunc:
    return phi.apply(b)


def check_hom(phi: BaseHom):
    """Check Gamma-equivariance and *-compatibility on the source ring generators."""
    from .report import Report

    rep = Report(f"hom {phi.name}")
    src, tgt = phi.source, phi.target
    probes = src.ring_gens if src.ring_gens is not None else src.var_names
    for expr in probes:
        b = src.parse(expr)
        for j in range(src.gamma_rank):
            for sign in (1, -1):
                g = [0] * src.gamma_rank
                g[j] = sign
                g = tuple(g)
                try:
                    lhs = phi.apply(src.act(g, b))
                    rhs = tgt.act(g, phi.apply(b))
                    ok = lhs == rhs
                    wit = None if ok else f"{lhs} != {rhs}"
                except PoleError as exc:
                    ok, wit = False, str(exc)
                rep.add(f"equivariant[{expr}; g={g}]", ok, wit)
        try:
            lhs = phi.apply(src.involve(b))
            rhs = tgt.involve(phi.apply(b))
            rep.add(f"star[{expr}]", lhs == rhs, None if lhs == rhs else f"{lhs} != {rhs}")
        except PoleError as exc:
            rep.add(f"star[{expr}]", False, str(exc))
    return rep


# ---------------------------------------------------------------------------
# standard bases

SUDQ_RING_GENS = (
    "Q", "Q^-1", "1/(1 + Q^2)",
    "Z[0,-1]", "Z[-1,0]", "Z[-2,-1]", "Z[-1,-2]", "Z[1,0]", "Z[0,1]", "Z[1,-1]", "Z[-1,1]",
)


def sudq_base() -> BaseSpec:
    """Q(Q)(X, Y) with X -> Q^-1 X, Y -> Q Y; holds the ratios Z[k,l] of (X - Y) shifts."""
    return BaseSpec(
        name="sudQ",
        vars=[VarSpec("Q", "shared"), VarSpec("X"), VarSpec("Y")],
        action=[{"X": "Q^-1*X", "Y": "Q*Y"}],
        inverse=[{"X": "Q*X", "Y": "Q^-1*Y"}],
        zeta="X - Y",
        ring_gens=SUDQ_RING_GENS,
    )


def mq_base(q=None) -> BaseSpec:
    """Q(q)(x) with x -> q^-1 x, or Q(x) when ``q`` is a rational number."""
    if q is None:
        return BaseSpec(
            name="Mq",
            vars=[VarSpec("q", "shared"), VarSpec("x")],
            action=[{"x": "q^-1*x"}],
            inverse=[{"x": "q*x"}],
            zeta="x - x^-1",
        )
    q = Fraction(q)
    return BaseSpec(
        name=f"Mq[{q}]",
        vars=[VarSpec("x")],
        action=[{"x": f"({q.denominator}/{q.numerator})*x"}],
        inverse=[{"x": f"({q.numerator}/{q.denominator})*x"}],
        zeta="x - x^-1",
    )


def lambda_base() -> BaseSpec:
    return BaseSpec(
        name="lambda",
        vars=[VarSpec("lam")],
        action=[{"lam": "lam - 1"}],
        inverse=[{"lam": "lam + 1"}],
        zeta="lam",
    )


def r_base() -> BaseSpec:
    return BaseSpec(name="R", vars=[VarSpec("Q", "shared")])


def cx_base() -> BaseSpec:
    return BaseSpec(
        name="CX",
        vars=[VarSpec("X")],
        action=[{"X": "X - 1"}],
        inverse=[{"X": "X + 1"}],
        zeta="X",
    )


def rational_base() -> BaseSpec:
    """The field Q with trivial Z-action."""
    return BaseSpec(name="QQ", vars=[])


def standard_bases() -> dict:
    return {
        "sudQ": sudq_base(),
        "Mq": mq_base(),
        "lambda": lambda_base(),
        "R": r_base(),
        "CX": cx_base(),
        "QQ": rational_base(),
    }


def standard_homs(q=None) -> dict:
    """The base changes out of the sudQ base; ``q`` fixes the deformation parameter."""
    src = sudq_base()
    qs = "q" if q is None else str(Fraction(q))
    mq = mq_base(q)
    out = {
        "pi-q-m": BaseHom("pi-q-m", src, mq, {"Q": qs, "X": "x", "Y": "x^-1"}),
        "pi-minus-inf": BaseHom("pi-minus-inf", src, r_base(), {"Q": "Q", "X": "1", "Y": "0"}),
        "pi-plus-inf": BaseHom("pi-plus-inf", src, r_base(), {"Q": "Q", "X": "0", "Y": "1"}),
        "pi-1": BaseHom("pi-1", src, lambda_base(),
                        {"Q": "1 + eps", "X": "1 + lam*eps", "Y": "1 - lam*eps"}, limit=True),
        "pi-1-cx": BaseHom("pi-1-cx", src, cx_base(), {"Q": "1", "X": "1", "Y": "0"}),
    }
    if q is not None:
        qq = rational_base()
        out["pi-q-minus-inf"] = BaseHom("pi-q-minus-inf", src, qq, {"Q": qs, "X": "1", "Y": "0"})
        out["pi-q-plus-inf"] = BaseHom("pi-q-plus-inf", src, qq, {"Q": qs, "X": "0", "Y": "1"})
    return out
