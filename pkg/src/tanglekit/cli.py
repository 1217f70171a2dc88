"""Command-line front end.

Every subcommand prints one JSON document on stdout (deterministic key
order; ``--pretty`` switches to indented rendering) and exits with 0 for
verified/solved, 1 for a negative verification result and 2 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .diagram import (
    diagram_from_fraction,
    diagram_of_value,
    from_pd_text,
    numerator_close,
    tangle_sum,
)
from .errors import ScaleExceededError, TangleError
from .fourplat import FourPlat, fourplat_eq
from .invariants import determinant, jones, jones_equal
from .montesinos import (
    MontesinosExpr,
    NotFourPlat,
    closure_of_value,
    value_text,
)
from .notation import parse_value
from .rational import TangleFraction, add_horizontal, cf_expand, classify, fraction
from .solver import (
    SystemSpec,
    brute_force_montesinos,
    brute_force_rational,
    chiral_refinement,
    class_descriptors,
    fourth_solution,
    parametric_family,
    verify_solution,
    xer_darcy_family,
    xer_demo,
)

__all__ = ["main"]


def _dump(obj, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(obj, args) -> None:
    print(_dump(obj, args.pretty))


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _closure_json(result) -> dict:
    if isinstance(result, NotFourPlat):
        return {"not_fourplat": result.reason}
    return result.to_json()


def _parse_fraction_arg(text: str) -> TangleFraction:
    value, _ = parse_value(text)
    if not isinstance(value, TangleFraction):
        raise TangleError(f"{text!r} is not a rational tangle")
    return value


def cmd_closure(args) -> int:
    value, warnings = parse_value(args.expr)
    result = closure_of_value(value)
    out = {
        "input": args.expr,
        "value": value_text(value),
        "closure": _closure_json(result),
    }
    if warnings:
        out["warnings"] = list(warnings)
    _emit(out, args)
    return 0


def cmd_cf(args) -> int:
    value, warnings = parse_value(args.expr)
    if not isinstance(value, TangleFraction):
        raise TangleError("cf needs a rational tangle expression")
    vector = [] if value.is_infinity else list(cf_expand(value))
    out = {
        "fraction": str(value),
        "vector": vector,
        "class": classify(value).value,
    }
    if warnings:
        out["warnings"] = list(warnings)
    _emit(out, args)
    return 0


def _branches(arg: str) -> list[str]:
    return ["upper", "lower"] if arg == "both" else [arg]


def cmd_solve(args) -> int:
    config = _load_config(args.config)
    branch_arg = args.branch or config.get("branch", "both")
    t_values = list(range(args.t_min, args.t_max + 1))
    families = []
    ok = True
    for branch in _branches(branch_arg):
        if args.family == "parametric":
            if args.P is None:
                raise TangleError("parametric families need a P argument")
            system = SystemSpec(args.system, (0, 1, 2, 3), branch)
            fam = parametric_family(system, _parse_fraction_arg(args.P))
            data = fam.to_json(t_values)
            ok = ok and all(row["pass"] for row in data.get("instantiations", []))
            families.append(data)
        elif args.family == "fourth":
            if args.system != "inverted":
                raise TangleError("the Montesinos family exists only for inverted sites")
            fam = fourth_solution(args.p, branch)
            data = fam.to_json()
            ok = ok and data["pass"]
            families.append(data)
        else:  # chiral
            if args.system != "inverted":
                raise TangleError("the chirality refinement is for inverted sites")
            if branch == "upper":
                continue  # pinned to right-handed products
            fam = chiral_refinement(args.p)
            data = fam.to_json()
            data["pinned_k1"] = True
            ok = ok and data["pass"]
            families.append(data)
    _emit({"families": families}, args)
    return 0 if ok else 1


def cmd_classes(args) -> int:
    _emit({"system": args.system, "classes": class_descriptors(args.system)}, args)
    return 0


def _oracle_check_closure(o_value, partner: TangleFraction, algebraic) -> Optional[bool]:
    """Diagram-level confirmation of one algebraic closure; None when skipped."""
    if isinstance(algebraic, NotFourPlat):
        return None
    try:
        left = diagram_of_value(o_value)
        right = diagram_from_fraction(partner)
        composed = numerator_close(tangle_sum(left, right))
        reference = numerator_close(
            diagram_from_fraction(fraction(algebraic.p, algebraic.q))
        )
    except ScaleExceededError:
        return None
    return jones_equal(composed, reference)


def cmd_verify(args) -> int:
    if args.solution == "-":
        payload = json.load(sys.stdin)
    else:
        with open(args.solution, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    system = SystemSpec(
        payload["system"],
        tuple(sorted(int(k) for k in payload["O_f"])),
        payload.get("branch", "lower"),
    )
    P = _parse_fraction_arg(payload["P"])
    R = _parse_fraction_arg(payload["R"])
    O_c = _parse_fraction_arg(payload.get("O_c", "(0)"))
    O_f = {int(k): parse_value(text)[0] for k, text in payload["O_f"].items()}
    expected = {
        int(k): _parse_fourplat(text)
        for k, text in payload.get("expected_products", {}).items()
    }
    report = verify_solution(P, R, O_c, O_f, system, expected or None)
    _emit(report.to_json(), args)
    if args.oracle:
        for check in report.checks:
            o_value = O_f[check.k]
            sub_ok = _oracle_check_closure(o_value, add_horizontal(P, O_c.num), check.substrate)
            prod_ok = _oracle_check_closure(o_value, add_horizontal(R, O_c.num), check.product)
            for label, confirmed in (("substrate", sub_ok), ("product", prod_ok)):
                if confirmed is False:
                    print(
                        f"oracle disagreement at k={check.k} ({label})",
                        file=sys.stderr,
                    )
                    return 2
    return 0 if report.passed else 1


def _parse_fourplat(text: str) -> FourPlat:
    body = text.strip()
    if not (body.startswith("b(") and body.endswith(")")):
        raise TangleError(f"expected b(p,q), found {text!r}")
    p_str, q_str = body[2:-1].split(",")
    return FourPlat(int(p_str), int(q_str))


def _diagram_from_arg(text: str, as_pd: bool):
    if as_pd:
        with open(text, "r", encoding="utf-8") as fh:
            d = from_pd_text(fh.read())
        return numerator_close(d) if not d.is_closed else d
    value, _ = parse_value(text)
    return numerator_close(diagram_of_value(value))


def cmd_oracle(args) -> int:
    d1 = _diagram_from_arg(args.first, args.pd)
    d2 = _diagram_from_arg(args.second, args.pd)
    equal = jones_equal(d1, d2)
    out = {
        "jones": [jones(d1).format("t", half_grid=True), jones(d2).format("t", half_grid=True)],
        "determinant": [determinant(d1), determinant(d2)],
        "jones_equal": equal,
    }
    _emit(out, args)
    return 0 if equal else 1


def cmd_search(args) -> int:
    config = _load_config(args.config)
    bound = args.bound or config.get("bound", 12)
    if args.montesinos:
        hits = brute_force_montesinos(min(bound, 8))
        rows = [h.to_json() | {"text": value_text(h)} for h in hits]
        _emit({"montesinos": rows, "bound": min(bound, 8)}, args)
        return 0
    if args.system is None or args.P is None or args.k is None:
        raise TangleError("search needs system, P and --k (or --montesinos)")
    system = SystemSpec(args.system, (0, 1, 2, 3), "lower")
    r_candidates = None
    if args.r:
        r_candidates = [_parse_fraction_arg(t) for t in args.r]
    hits = brute_force_rational(system, _parse_fraction_arg(args.P), bound, args.k, r_candidates)
    rows = [{"O": value_text(o), "R": value_text(r)} for o, r in hits]
    _emit({"system": args.system, "P": args.P, "k": args.k, "bound": bound, "hits": rows}, args)
    return 0


def cmd_xer(args) -> int:
    config = _load_config(args.config)
    bound = args.bound or config.get("bound", 12)
    rows = []
    for o, r in xer_demo(bound):
        rows.append(
            {
                "O": value_text(o),
                "R": value_text(r),
                "darcy_family": xer_darcy_family(r),
            }
        )
    _emit({"bound": bound, "hits": rows}, args)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanglekit",
        description="Exact tangle calculus for recombination tangle equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")
        p.add_argument("--config", help="JSON config file with default bound/branch")

    p = sub.add_parser("closure", help="numerator closure of a tangle expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("cf", help="continued-fraction data of a rational expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("solve", help="emit a solution family")
    p.add_argument("system", choices=["direct", "inverted"])
    p.add_argument("P", nargs="?", help="parental tangle, e.g. '(11/7)'")
    p.add_argument("--family", choices=["parametric", "fourth", "chiral"], default="parametric")
    p.add_argument("--p", type=int, default=0, help="parameter of the fourth/chiral family")
    p.add_argument("--branch", choices=["upper", "lower", "both"])
    p.add_argument("--t-min", type=int, default=-3)
    p.add_argument("--t-max", type=int, default=3)
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classes", help="describe all solution classes")
    p.add_argument("system", choices=["direct", "inverted"])
    common(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("verify", help="verify a solution JSON document")
    p.add_argument("solution", help="path to the solution JSON, or - for stdin")
    p.add_argument("--oracle", action="store_true", help="re-check closures on diagrams")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare invariants of two closed diagrams")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--pd", action="store_true", help="arguments are planar-code files")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("search", help="bounded brute-force solution search")
    p.add_argument("system", nargs="?", choices=["direct", "inverted"])
    p.add_argument("P", nargs="?")
    p.add_argument("--k", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--r", action="append", help="restrict R to these tangles")
    p.add_argument("--montesinos", action="store_true", help="search two-summand expressions")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("xer", help="deletion-system demo search")
    p.add_argument("--bound", type=int)
    common(p)
    p.set_defaults(func=cmd_xer)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TangleError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
