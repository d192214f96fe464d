"""JSON forms of the exact types (schema version 1).

* big rational: the string "p/q" (always with the denominator)
* ParamPoly:    [{"alpha": a, "beta": b, "omega": w, "coef": "p/q"}, ...]
                in decreasing graded lex order
* RatFunc:      {"num": <ParamPoly>, "den": <ParamPoly>}
* ZPoly:        [[z_exponent, <RatFunc>], ...] in decreasing exponent order

`canonical_json` renders any report dict with sorted keys and a fixed
indent, so parsing and re-serialising is byte-identical.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .parampoly import ParamPoly, _order_key
from .ratfunc import RatFunc
from .zpoly import ZPoly

SCHEMA_VERSION = 1


def fraction_to_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fraction_from_json(s: str) -> Fraction:
    return Fraction(s)


def parampoly_to_json(p: ParamPoly) -> list:
    out = []
    for exp in sorted(p.terms, key=_order_key, reverse=True):
        a, b, w = exp
        out.append({"alpha": a, "beta": b, "omega": w, "coef": fraction_to_json(p.terms[exp])})
    return out


def parampoly_from_json(data) -> ParamPoly:
    terms = {}
    for item in data:
        exp = (item["alpha"], item["beta"], item["omega"])
        terms[exp] = fraction_from_json(item["coef"])
    return ParamPoly(terms)


def ratfunc_to_json(r: RatFunc) -> dict:
    return {"num": parampoly_to_json(r.num), "den": parampoly_to_json(r.den)}


def ratfunc_from_json(data) -> RatFunc:
    return RatFunc(parampoly_from_json(data["num"]), parampoly_from_json(data["den"]))


def zpoly_to_json(p: ZPoly) -> list:
    out = []
    for exp in range(p.degree, -1, -1):
        c = p.coeff(exp)
        if not c.is_zero():
            out.append([exp, ratfunc_to_json(c)])
    return out


def zpoly_from_json(data) -> ZPoly:
    if not data:
        return ZPoly.zero()
    coeffs = [RatFunc.zero()] * (data[0][0] + 1)
    for exp, c in data:
        coeffs[exp] = ratfunc_from_json(c)
    return ZPoly(coeffs)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
