"""Command line front end.

Integer lists are comma separated with literal negative numbers and the
empty list spelled '' (for example --psi 3,1,-2 --phi '').  All results go
to stdout, diagnostics to stderr.  Exit codes: 0 success or verified, 1
verification failure, 2 usage error.

Text output prints polynomials in descending powers of z with every
coefficient as a reduced rational function in parentheses; the parameter
symbols alpha, beta, omega print as a, b, w.
"""
from __future__ import annotations

import argparse
import sys

from .algebra import NotProportional, RatFunc
from .algebra.serialize import (
    SCHEMA_VERSION,
    canonical_json,
    ratfunc_to_json,
    zpoly_to_json,
)
from .classical import Model
from .maya import (
    DuplicateIndex,
    MayaDiagram,
    UniversalCharacter,
    conjugate,
    durfee_from_maya,
    canonical_flat,
    maya_from_entries,
    orbit_maya,
    partition_of,
    render_maya,
    render_young,
)
from .wronskians import (
    OracleMismatch,
    PotentialMismatch,
    ROW_CONVENTION,
    extended_potential,
    oracle_check,
    pseudo_wronskian,
    random_characters,
    verify_equivalence,
    verify_potential_equivalence,
)


class UsageError(ValueError):
    pass


def _parse_int_list(text: str) -> list[int]:
    if text.strip() == "":
        return []
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"malformed integer list: {text!r}") from exc


def _parse_range(text: str) -> tuple[int, int]:
    parts = _parse_int_list(text)
    if len(parts) != 2 or parts[0] > parts[1]:
        raise UsageError(f"range must be lo,hi with lo <= hi, got {text!r}")
    return parts[0], parts[1]


def _diagram(text: str) -> MayaDiagram:
    return maya_from_entries(_parse_int_list(text))


def _character(args) -> UniversalCharacter:
    return UniversalCharacter(_diagram(args.psi), _diagram(args.phi))


def _maya_json(m: MayaDiagram) -> list[int]:
    return list(m.entries)


def _uc_json(uc: UniversalCharacter) -> dict:
    return {"psi": _maya_json(uc.psi), "phi": _maya_json(uc.phi)}


def _exps_json(exps) -> dict:
    return {base.value: e for base, e in exps.items()}


def _emit(args, text_lines, json_obj) -> None:
    if args.format == "json":
        json_obj["schema_version"] = SCHEMA_VERSION
        sys.stdout.write(canonical_json(json_obj))
    else:
        for line in text_lines:
            print(line)


def _cmd_orbit(args) -> int:
    m = _diagram(args.entries)
    chain = orbit_maya(m)
    lines = [f"{d}  {durfee_from_maya(d)}" for d in chain]
    _emit(
        args,
        lines,
        {
            "entries": _maya_json(m),
            "orbit": [
                {"maya": _maya_json(d), "durfee": {"d": list(ds.d), "dbar": list(ds.dbar)}}
                for d in chain
                for ds in [durfee_from_maya(d)]
            ],
        },
    )
    return 0


def _cmd_render(args) -> int:
    m = _diagram(args.entries)
    flat, shifts = canonical_flat(m)
    part = partition_of(flat).reduced()
    ds = durfee_from_maya(m)
    lines = [
        f"maya {m}",
        render_maya(m),
        "",
        render_young(m),
        f"partition: {part}   conjugate: {conjugate(part)}",
        f"canonical flat: {flat} after {shifts} right shifts",
    ]
    _emit(
        args,
        lines,
        {
            "entries": _maya_json(m),
            "maya_ascii": render_maya(m),
            "young_ascii": render_young(m),
            "durfee": {"d": list(ds.d), "dbar": list(ds.dbar)},
            "partition": list(part.parts),
            "conjugate": list(conjugate(part).parts),
            "canonical_flat": {"maya": _maya_json(flat), "shifts": shifts},
        },
    )
    return 0


def _cmd_pw(args) -> int:
    uc = _character(args)
    p = pseudo_wronskian(Model(args.model), uc)
    _emit(
        args,
        [str(p)],
        {"model": args.model, "uc": _uc_json(uc), "pseudowronskian": zpoly_to_json(p)},
    )
    return 0


def _equiv_json(report) -> dict:
    return {
        "model": report.model.value,
        "uc": _uc_json(report.source),
        "canonical": _uc_json(report.canonical),
        "shifts": {"alpha": report.alpha_shift, "beta": report.beta_shift},
        "exponents": _exps_json(report.exps),
        "constant": ratfunc_to_json(report.constant),
        "verified": report.verified,
        "convention": ROW_CONVENTION,
    }


def _cmd_equiv(args) -> int:
    uc = _character(args)
    report = verify_equivalence(Model(args.model), uc)
    lines = [
        f"source:    {report.source}",
        f"canonical: {report.canonical}",
        f"shifts:    alpha {report.alpha_shift:+d}, beta {report.beta_shift:+d}",
        "exponents: " + ", ".join(f"({b})^{e}" for b, e in report.exps.items()),
        f"constant:  {report.constant}",
        f"verified:  {report.verified}",
        f"convention: {report.convention}",
    ]
    _emit(args, lines, _equiv_json(report))
    return 0 if report.verified else 1


def _cmd_oracle(args) -> int:
    uc = _character(args)
    try:
        report = oracle_check(Model(args.model), uc, bound=args.bound)
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return 1
    lines = [
        f"uc: {uc}",
        "exponents: " + ", ".join(f"({b})^{e}" for b, e in report.exps.items()),
        f"constant: {report.constant}",
        "oracle: match",
    ]
    _emit(
        args,
        lines,
        {
            "model": args.model,
            "uc": _uc_json(uc),
            "exponents": _exps_json(report.exps),
            "constant": ratfunc_to_json(report.constant),
            "verified": True,
        },
    )
    return 0


def _cmd_potential(args) -> int:
    uc = _character(args)
    model = Model(args.model)
    expr = extended_potential(model, uc)
    try:
        report = verify_potential_equivalence(model, uc)
    except PotentialMismatch as exc:
        print(f"potential mismatch: {exc}", file=sys.stderr)
        return 1
    lines = [
        f"uc: {uc}",
        f"potential numerator:   {expr.value.num}",
        f"potential denominator: {expr.value.den}",
        f"canonical: {report.canonical} at alpha {report.alpha_shift:+d}, beta {report.beta_shift:+d}",
        f"energy shift: {report.energy_shift}",
    ]
    _emit(
        args,
        lines,
        {
            "model": args.model,
            "uc": _uc_json(uc),
            "potential": {
                "num": zpoly_to_json(expr.value.num),
                "den": zpoly_to_json(expr.value.den),
            },
            "canonical": _uc_json(report.canonical),
            "shifts": {"alpha": report.alpha_shift, "beta": report.beta_shift},
            "energy_shift": ratfunc_to_json(RatFunc(report.energy_shift)),
            "verified": True,
        },
    )
    return 0


def _cmd_sweep(args) -> int:
    model = Model(args.model)
    lo, hi = _parse_range(args.range)
    if args.max_size * 2 > hi - lo + 1:
        raise UsageError("range too small for the requested per-family size")
    chars = random_characters(args.seed, args.count, args.max_size, lo, hi)
    failures = []
    results = []
    for uc in chars:
        report = verify_equivalence(model, uc)
        results.append(report)
        if not report.verified:
            failures.append(report)
    lines = [
        f"sweep: model={args.model} seed={args.seed} count={args.count} "
        f"max-size={args.max_size} range={lo},{hi}",
        f"verified {len(results) - len(failures)}/{len(results)}",
    ]
    lines += [f"FAILED {r.source}" for r in failures]
    _emit(
        args,
        lines,
        {
            "model": args.model,
            "seed": args.seed,
            "count": args.count,
            "max_size": args.max_size,
            "range": [lo, hi],
            "verified": len(failures) == 0,
            "reports": [_equiv_json(r) for r in results],
        },
    )
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudowronskians",
        description="Exact Laguerre/Jacobi pseudo-Wronskians over Maya diagrams",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("orbit", help="Durfee and Maya chain of a shape class")
    p.add_argument("--entries", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("render", help="ASCII Maya diagram and punctured Young diagram")
    p.add_argument("--entries", required=True)
    add_format(p)
    p.set_defaults(func=_cmd_render)

    def add_uc(p):
        p.add_argument("--model", choices=("laguerre", "jacobi"), required=True)
        p.add_argument("--psi", required=True)
        p.add_argument("--phi", required=True)
        add_format(p)

    p = sub.add_parser("pw", help="print the pseudo-Wronskian polynomial")
    add_uc(p)
    p.set_defaults(func=_cmd_pw)

    p = sub.add_parser("equiv", help="verify the equivalence with the flat representative")
    add_uc(p)
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("oracle", help="check against the symbolic Wronskian oracle")
    add_uc(p)
    p.add_argument("--bound", type=int, default=6)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("potential", help="extended potential and its energy shift")
    add_uc(p)
    p.set_defaults(func=_cmd_potential)

    p = sub.add_parser("sweep", help="randomised equivalence sweep (exit 0 iff all verified)")
    p.add_argument("--model", choices=("laguerre", "jacobi"), required=True)
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--range", default="-5,6")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=200)
    add_format(p)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except NotProportional as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (UsageError, DuplicateIndex, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
