"""JSON algebra spec files: one self-contained document per instance."""

from __future__ import annotations

import json

from .coeff import BaseSpec, VarSpec
from .hopf import CharacterBlock, CharacterFamily, HopfData
from .instances import InstanceBundle, refill_pool
from .ncalg import AlgElement, Generator, Presentation
from .tensor import CrossedProduct, FiberAlgebra

FORMAT = "dynqg-spec/1"


class SpecError(ValueError):
    pass


def _mat_str(M):
    return None if M is None else [[str(x) for x in row] for row in M]


def _mat_parse(base: BaseSpec, M):
    return None if M is None else [[base.parse(x) for x in row] for row in M]


def bundle_to_dict(b: InstanceBundle) -> dict:
    P, h, base = b.pres, b.hopf, b.base
    doc = {
        "format": FORMAT,
        "meta": {"name": P.name, "key": b.key, "provenance": b.provenance, "params": dict(sorted(b.params.items()))},
        "base": {
            "name": base.name,
            "vars": [{"name": v.name, "leg": v.leg, **({"star": v.star} if v.star else {})} for v in base.vars],
            "gamma_rank": base.gamma_rank,
            "action": [dict(a) for a in base.action],
            "inverse": [dict(a) for a in base.inverse],
            "zeta": base.zeta,
            "ring_gens": list(base.ring_gens) if base.ring_gens is not None else None,
        },
        "generators": [
            {"name": g.name, "deg": [list(g.deg_r), list(g.deg_s)],
             "star": None if P.star_images is None else P.format(P.star_images[i])}
            for i, g in enumerate(P.gens)
        ],
        "order": {"precedence": list(P.precedence), "reverse": P.reverse_order},
        "rules": [{"lhs": P.word_str(lhs), "rhs": P.format(AlgElement(P, rhs))} for lhs, rhs in P.rules.items()],
        "hopf": {
            "delta": {g.name: h.fiber2.format(h.delta[i]) for i, g in enumerate(P.gens)},
            "epsilon": {g.name: h.crossed.format(h.epsilon[i]) for i, g in enumerate(P.gens)},
            "antipode": {g.name: P.format(h.antipode[i]) for i, g in enumerate(P.gens)},
        },
        "matrices": {
            "nabla": [list(g) for g in b.nabla],
            "v": b.v,
            "w": b.w,
            "F": _mat_str(b.F),
            "G": _mat_str(b.G),
            "H": _mat_str(b.H),
            "H_w": _mat_str(b.H_w),
            "characters": None if b.characters is None else [
                {"names": blk.names, "degrees": [list(d) for d in blk.degrees], "M": _mat_str(blk.M),
                 "kind": blk.kind}
                for blk in b.characters.blocks
            ],
        },
    }
    return doc


def dumps(b: InstanceBundle) -> str:
    return json.dumps(bundle_to_dict(b), indent=1, ensure_ascii=False) + "\n"


def save(b: InstanceBundle, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(b))


def _word(P: Presentation, text: str) -> tuple:
    try:
        return tuple(P.index[nm] for nm in text.split("*"))
    except KeyError as exc:
        raise SpecError(f"unknown generator in rule {text!r}") from exc


def bundle_from_dict(doc: dict) -> InstanceBundle:
    if doc.get("format") != FORMAT:
        raise SpecError(f"not a {FORMAT} document")
    try:
        bd = doc["base"]
        base = BaseSpec(
            name=bd["name"],
            vars=[VarSpec(v["name"], v.get("leg", "dynamical"), v.get("star")) for v in bd["vars"]],
            gamma_rank=bd["gamma_rank"],
            action=bd["action"],
            inverse=bd["inverse"],
            zeta=bd.get("zeta"),
            ring_gens=bd.get("ring_gens"),
        )
        gens = [Generator(g["name"], tuple(g["deg"][0]), tuple(g["deg"][1])) for g in doc["generators"]]
        order = doc["order"]
        P = Presentation(base, gens, {}, order["precedence"], order["reverse"], name=doc["meta"]["name"])
        # rule right-hand sides are normal words, so they parse correctly without rules
        rules = {}
        for r in doc["rules"]:
            rules[_word(P, r["lhs"])] = dict(P.parse(r["rhs"]).terms)
        P.reset_rules(rules)
        if any(g.get("star") is not None for g in doc["generators"]):
            P.set_star({g["name"]: P.parse(g["star"]) for g in doc["generators"]})
        fib = FiberAlgebra([P, P])
        cp = CrossedProduct(base)
        hd = doc["hopf"]
        h = HopfData(P, {k: fib.parse(x) for k, x in hd["delta"].items()},
                     {k: cp.parse(x) for k, x in hd["epsilon"].items()},
                     {k: P.parse(x) for k, x in hd["antipode"].items()})
        h.fiber2, h.crossed = fib, cp
        m = doc["matrices"]
        chars = None
        if m.get("characters"):
            blocks = [CharacterBlock(c["names"], tuple(tuple(d) for d in c["degrees"]), _mat_parse(base, c["M"]),
                                     c["kind"]) for c in m["characters"]]
            chars = CharacterFamily(P, blocks, _mat_parse(base, m.get("H")))
        meta = doc["meta"]
        out = InstanceBundle(meta["key"], h, [tuple(g) for g in m["nabla"]], _mat_parse(base, m["F"]),
                             _mat_parse(base, m.get("G")), m["v"], _mat_parse(base, m.get("H")), m.get("w"), chars,
                             meta.get("provenance", ""), dict(meta.get("params", {})), _mat_parse(base, m.get("H_w")))
    except SpecError:
        raise
    except (KeyError, TypeError, IndexError) as exc:
        raise SpecError(f"malformed spec file: missing or invalid field {exc}") from exc
    refill_pool(out)
    return out


def loads(text: str) -> InstanceBundle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from exc
    return bundle_from_dict(doc)


def load(path) -> InstanceBundle:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
