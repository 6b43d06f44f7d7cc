"""Command-line interface.

Every subcommand prints a human-readable report by default, the same data
as JSON with --json, and can mirror the JSON payload to a file with --out.
Output is deterministic (sorted keys, fixed iteration orders).  Exit codes:
0 success, 1 a verification failed, 2 usage or value errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cf import (
    VerificationError,
    complementary_expansions,
    eval_neg_cf,
    honda_count,
    neg_cf,
    torus_knot_params,
)
from .checks import check_names, run_all
from .classify import classify_level, transverse_classes
from .diagram import chain_tbs, chains_for, enumerate_presentations
from .floer import hfk_minus, match_invariants
from .invariants import classical_invariants
from .lens import surjectivity_check


def _json_default(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    raise TypeError(f"not JSON serializable: {value!r}")


def _emit(args, payload, lines) -> None:
    rendered = json.dumps(payload, indent=2, sort_keys=True, default=_json_default)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(rendered + "\n")
    if args.quiet:
        return
    print(rendered if args.json else "\n".join(lines))


def _format_class(index: int, cls) -> str:
    inv = cls.invariants
    if cls.ambient_tight:
        kind = "tight ambient"
    elif cls.strongly_nonloose:
        kind = "strongly non-loose" + (", transverse" if cls.transverse else "")
    else:
        kind = "loose"
    return (
        f"#{index}: size {cls.size:3d}  [{kind}]  tb = {inv.tb}, rot = {inv.rot}, "
        f"d3 = {inv.d3}, (A, M) = ({inv.alexander}, {inv.maslov})"
    )


# ---- subcommands


def cmd_cf(args) -> int:
    entries = neg_cf(args.num, args.den)
    value = eval_neg_cf(entries)
    payload = {"num": args.num, "den": args.den, "entries": list(entries)}
    lines = [f"{value.numerator}/{value.denominator} = {list(entries)}"]
    _emit(args, payload, lines)
    return 0


def cmd_params(args) -> int:
    params = torus_knot_params(args.p, args.q)
    cf1, cf2 = complementary_expansions(params)
    coeff1, coeff2 = params.chain1_coefficient, params.chain2_coefficient
    s1, s2 = params.seifert_constants
    payload = {
        "p": params.p,
        "q": params.q,
        "n": params.n,
        "k": params.k,
        "c": params.c,
        "d": params.d,
        "p_prime": params.p_prime,
        "q_prime": params.q_prime,
        "genus": params.genus,
        "seifert_constants": [s1, s2],
        "chains": [
            {"coefficient": coeff1, "entries": list(cf1), "tb": list(chain_tbs(cf1))},
            {"coefficient": coeff2, "entries": list(cf2), "tb": list(chain_tbs(cf2))},
        ],
    }
    lines = [
        f"T({params.p}, -{params.q}):  q = {params.n}p - {params.k}",
        f"  c = {params.c}, d = {params.d}, p' = {params.p_prime}, q' = {params.q_prime}",
        f"  genus = {params.genus}",
        f"  Seifert constants {s1}, {s2}",
        f"  chain 1: coefficient {coeff1} -> entries {list(cf1)}, tb {list(chain_tbs(cf1))}",
        f"  chain 2: coefficient {coeff2} -> entries {list(cf2)}, tb {list(chain_tbs(cf2))}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_enumerate(args) -> int:
    items = []
    lines = []
    for pres in enumerate_presentations(args.p, args.q, args.level):
        inv = classical_invariants(pres)
        items.append(
            {
                "presentation": pres.to_dict(),
                "invariants": {
                    "tb": inv.tb,
                    "rot": inv.rot,
                    "d3": inv.d3,
                    "A": inv.alexander,
                    "M": inv.maslov,
                },
            }
        )
        lines.append(
            f"rots {list(pres.rots1)} {list(pres.rots2)} stabs (+{pres.stab_pos}, -{pres.stab_neg})"
            f"  tb = {inv.tb}, rot = {inv.rot}, d3 = {inv.d3}, (A, M) = ({inv.alexander}, {inv.maslov})"
        )
    lines.append(f"{len(items)} presentations of T({args.p}, -{args.q}) at level {args.level}")
    _emit(args, {"p": args.p, "q": args.q, "level": args.level, "presentations": items}, lines)
    return 0


def cmd_classify(args) -> int:
    classes = classify_level(args.p, args.q, args.level)
    payload = {
        "p": args.p,
        "q": args.q,
        "level": args.level,
        "classes": [cls.to_dict() for cls in classes],
    }
    lines = [_format_class(i, cls) for i, cls in enumerate(classes)]
    lines.append(
        f"{len(classes)} classes of T({args.p}, -{args.q}) at level {args.level} "
        f"({sum(cls.size for cls in classes)} presentations)"
    )
    _emit(args, payload, lines)
    return 0


def cmd_transverse(args) -> int:
    classes = transverse_classes(args.p, args.q)
    payload = {"p": args.p, "q": args.q, "classes": [cls.to_dict() for cls in classes]}
    lines = [_format_class(i, cls) for i, cls in enumerate(classes)]
    lines.append(f"{len(classes)} strongly non-loose transverse classes of T({args.p}, -{args.q})")
    _emit(args, payload, lines)
    return 0


def cmd_hfk(args) -> int:
    module = hfk_minus(args.p, args.q)
    payload = {"p": args.p, "q": args.q, **module.to_dict()}
    lines = []
    for tower in module.towers:
        location = f"({tower.bottom_alexander}, {tower.bottom_maslov})"
        if tower.order is None:
            lines.append(f"F[U] tower with bottom at {location}")
        else:
            lines.append(f"F[U]/U^{tower.order} tower with bottom at {location}")
    lines.append(
        f"HFK-minus of T({args.p}, {args.q}): {len(module.towers) - 1} torsion towers + 1 free"
    )
    _emit(args, payload, lines)
    return 0


def cmd_match(args) -> int:
    report = match_invariants(args.p, args.q)
    lines = [
        f"T({args.p}, -{args.q}): {report['transverse_count']} transverse classes on "
        f"{report['bottom_count']} torsion-tower bottoms",
        "realized:   " + ", ".join(f"({a}, {m})" for a, m in report["realized"]),
        "unrealized: " + (", ".join(f"({a}, {m})" for a, m in report["unrealized"]) or "(none)"),
    ]
    _emit(args, report, lines)
    return 0


def cmd_lens(args) -> int:
    report = surjectivity_check(args.p, args.q)
    u = args.p * args.q + 1
    sizes = ",".join(str(len(f)) for f in report["fibers"])
    lines = [
        f"L({u}, {args.p * args.p % u}): Honda count {report['honda_count']}, "
        f"image size {report['image_size']} -> {'surjective' if report['ok'] else 'NOT surjective'}",
        f"fiber sizes: {sizes}",
    ]
    _emit(args, report, lines)
    if not report["ok"]:
        raise VerificationError(f"lens reduction not surjective for T({args.p}, -{args.q})")
    return 0


def cmd_verify(args) -> int:
    results = run_all(args.only or None, threads=args.threads)
    payload = [{"name": name, "ok": ok, "detail": detail} for name, ok, detail in results]
    failed = [name for name, ok, _ in results if not ok]
    if args.json or args.out:
        _emit(args, payload, [])
    if not args.json and not args.quiet:
        for name, ok, detail in results:
            print(f"[{'PASS' if ok else 'FAIL'}] {name} - {detail}")
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


# ---- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legknots",
        description="Legendrian and transverse negative torus knots: presentations, "
        "invariants, classification, knot Floer towers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON payload")
    common.add_argument("--out", metavar="FILE", help="also write the JSON payload to FILE")
    common.add_argument("--quiet", action="store_true", help="suppress stdout output")
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_command(name, func, help_text, extra=None):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("p", type=int)
        cmd.add_argument("q", type=int)
        if extra:
            extra(cmd)
        cmd.set_defaults(func=func)
        return cmd

    cf_cmd = sub.add_parser(
        "cf", parents=[common], help="negative continued fraction of num/den"
    )
    cf_cmd.add_argument("num", type=int)
    cf_cmd.add_argument("den", type=int)
    cf_cmd.set_defaults(func=cmd_cf)

    knot_command("params", cmd_params, "numerical data attached to T(p, -q)")
    knot_command(
        "enumerate",
        cmd_enumerate,
        "all presentations at one stabilization level, with invariants",
        extra=lambda cmd: cmd.add_argument("--level", type=int, default=0),
    )
    knot_command(
        "classify",
        cmd_classify,
        "equivalence classes of the level-l presentations",
        extra=lambda cmd: cmd.add_argument("--level", type=int, default=1),
    )
    knot_command("transverse", cmd_transverse, "strongly non-loose transverse classes")
    knot_command("hfk", cmd_hfk, "tower decomposition of HFK-minus of T(p, q)")
    knot_command("match", cmd_match, "locate transverse classes at tower bottoms")
    knot_command("lens", cmd_lens, "lens-space reduction surjectivity report")

    verify_cmd = sub.add_parser("verify", parents=[common], help="run the verification suite")
    verify_cmd.add_argument(
        "--only",
        action="append",
        metavar="CHECK",
        choices=check_names(),
        help="run just this check (repeatable)",
    )
    verify_cmd.add_argument("--threads", type=int, default=1, help="parallel check workers")
    verify_cmd.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
