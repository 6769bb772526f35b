"""Command-line front-end.

Exit codes: 0 success, 2 parse error, 3 domain error (e.g. a certify pair
whose commutator is not 1), 4 out-of-scope input (mass hypotheses violated).
All output is deterministic given the arguments and --seed; --json switches
to the canonical single-line JSON forms.
"""

from __future__ import annotations

import argparse
import json
import sys

from .centralizer import centralizer_generator, centralizer_rational
from .certify import certify_pair, impossibility_sweep
from .errors import DomainError, OutOfScopeError, ParseError
from .parser import format_pretty, normalize_text, print_canonical
from .polynomials import NEG_INF, rat_to_str
from .tame import AutoWord, apply_auto, random_tame
from .weyl import HomogeneousElement, commutator, mass, total_degree


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(args, json_obj, text):
    print(dumps_canonical(json_obj) if args.json else text)


def _cmd_normalize(args):
    element = normalize_text(args.expr)
    _emit(args, element.to_json(), format_pretty(element))


def _cmd_commute(args):
    result = commutator(normalize_text(args.left), normalize_text(args.right))
    _emit(args, result.to_json(), format_pretty(result))


def _cmd_mass(args):
    value = mass(normalize_text(args.expr))
    _emit(args, {"mass": value}, str(value))


def _cmd_components(args):
    element = normalize_text(args.expr)
    if args.json:
        print(dumps_canonical(element.to_json()))
        return
    for i, f in element.components():
        print(f"{i}: {f.format()}")


def _cmd_degree(args):
    degree = total_degree(normalize_text(args.expr))
    text = "-inf" if degree == NEG_INF else str(degree)
    _emit(args, {"total_degree": None if degree == NEG_INF else degree}, text)


def _cmd_centralizer(args):
    element = normalize_text(args.expr)
    comps = element.components()
    if not comps:
        raise DomainError("the zero element is not homogeneous")
    if len(comps) != 1:
        raise DomainError("centralizer computation needs a homogeneous element")
    u = HomogeneousElement.from_graded_component(*comps[0])
    if u.degree == 0:
        if u.coeff.is_constant():
            raise DomainError("constants are central")
        marker = centralizer_rational(u.coeff)
        _emit(args, {"centralizer": marker}, marker)
        return
    lead, monic = u.monic_split()
    result = centralizer_generator(monic)
    v_graded = result.v.to_graded()
    v_text = (
        print_canonical(v_graded.to_weyl()) if v_graded.is_weyl()
        else " + ".join(f"({c}) * v_{i}" for i, c in v_graded.components())
    )
    payload = result.to_json()
    payload["input_lead"] = rat_to_str(lead)
    payload["v_text"] = v_text
    if args.json:
        print(dumps_canonical(payload))
    else:
        print(f"s = {result.s}")
        print(f"beta = {result.beta.format()}")
        print(f"v = {v_text}")
        for cert in result.infeasible_divisors:
            print(f"infeasible: {cert}")


def _cmd_certify(args):
    P = normalize_text(args.left)
    Q = normalize_text(args.right)
    word = certify_pair(P, Q)
    _emit(args, word.to_json(), str(word))


def _cmd_sweep(args):
    bounds = {"p": args.p, "q": args.q, "max_coeff_deg": args.max_coeff_deg}
    report = impossibility_sweep(args.pattern, bounds)
    if args.json:
        print(dumps_canonical(report.to_json()))
        return
    for cell in report.cells:
        degs = "" if cell.deg_a is None else f" deg_a={cell.deg_a} deg_b={cell.deg_b}"
        print(f"{cell.pattern} p={cell.p} q={cell.q}{degs}: {cell.status}")
    print(f"{len(report.empty_cells())} empty, {len(report.solution_cells())} with solutions")


def _cmd_random_auto(args):
    word = random_tame(
        args.seed, word_len=args.word_len, max_n=args.max_n, coeff_height=args.coeff_height
    )
    _emit(args, word.to_json(), str(word))


def _cmd_apply(args):
    with open(args.word_file, "r", encoding="utf-8") as handle:
        word = AutoWord.from_json(json.load(handle))
    element = apply_auto(word, normalize_text(args.expr))
    _emit(args, element.to_json(), format_pretty(element))


def build_arg_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="weyl", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, func, **arguments):
        cmd = sub.add_parser(name)
        for arg_name, opts in arguments.items():
            cmd.add_argument(arg_name, **opts)
        cmd.add_argument("--json", action="store_true", help="canonical JSON output")
        cmd.set_defaults(func=func)
        return cmd

    add("normalize", _cmd_normalize, expr={})
    add("commute", _cmd_commute, left={}, right={})
    add("mass", _cmd_mass, expr={})
    add("components", _cmd_components, expr={})
    add("degree", _cmd_degree, expr={})
    add("centralizer", _cmd_centralizer, expr={})
    add("certify", _cmd_certify, left={}, right={})

    sweep = sub.add_parser("sweep")
    sweep.add_argument("pattern", choices=["case-ii", "case-iii", "case-v"])
    sweep.add_argument("--p", type=int, default=3)
    sweep.add_argument("--q", type=int, default=3)
    sweep.add_argument("--max-coeff-deg", type=int, default=2)
    sweep.add_argument("--json", action="store_true")
    sweep.set_defaults(func=_cmd_sweep)

    rand = sub.add_parser("random-auto")
    rand.add_argument("--seed", type=int, required=True)
    rand.add_argument("--word-len", type=int, default=4)
    rand.add_argument("--max-n", type=int, default=3)
    rand.add_argument("--coeff-height", type=int, default=5)
    rand.add_argument("--json", action="store_true")
    rand.set_defaults(func=_cmd_random_auto)

    apply_cmd = sub.add_parser("apply")
    apply_cmd.add_argument("word_file")
    apply_cmd.add_argument("expr")
    apply_cmd.add_argument("--json", action="store_true")
    apply_cmd.set_defaults(func=_cmd_apply)

    return top


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OutOfScopeError as exc:
        print(f"out of scope: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
