"""
Command-line front end.

Exit codes: 0 = YES / ok, 1 = NO, 2 = INCONCLUSIVE, 3 = error.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .braid import BraidError, BraidWord, crossing_number, invert, multiply, parse_word, permutation_of
from .centralizer import centralizer_generators
from .dcp import INCONCLUSIVE, NO, YES, InvariantViolation, parse_instance, solve_dcp, verify_solution
from .garside import equal, normal_form, simple_word
from .oracle import (
    OracleBudgetExceeded,
    brute_conjugator,
    brute_dcp,
    brute_double_centralizer,
    brute_membership,
)
from .parabolic import (
    Interval,
    NotInZH,
    ParabolicSpec,
    decompose_center_times_parabolic,
    tau_word,
)
from .simconj import DEFAULT_BUDGET, ConjTuple, Inconclusive, parse_tuple_lines, solve_simultaneous_conjugacy

EXIT_CODES = {"OK": 0, YES: 0, NO: 1, INCONCLUSIVE: 2, "ERROR": 3}


@dataclasses.dataclass
class CommandResult:
    status: str
    payload: dict[str, Any] = dataclasses.field(default_factory=dict)
    lines: list[str] = dataclasses.field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps({"status": self.status, **_jsonable(self.payload)}, sort_keys=True)
        return "\n".join(self.lines)


def _jsonable(value):
    if isinstance(value, BraidWord):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Interval):
        return [value.k, value.l]
    return value


def _word(text: str, n: int) -> BraidWord:
    return parse_word(text, n)


# ----------------------------------------------------------------------------------------------------------

def cmd_nf(args) -> CommandResult:
    nf = normal_form(_word(args.word, args.n))
    factors = [" ".join(map(str, simple_word(x))) for x in nf.factors]
    lines = [f"delta_power: {nf.delta_power}",
             "factors: " + (" | ".join(factors) if factors else "none"),
             f"inf: {nf.inf}  sup: {nf.sup}  canonical_length: {nf.canonical_length}"]
    payload = {"delta_power": nf.delta_power, "factors": factors, "inf": nf.inf, "sup": nf.sup,
               "canonical_length": nf.canonical_length, "word": nf.to_word()}
    return CommandResult("OK", payload, lines)


def cmd_eq(args) -> CommandResult:
    same = equal(_word(args.u, args.n), _word(args.v, args.n))
    status = YES if same else NO
    return CommandResult(status, {"equal": same}, [status])


def cmd_perm(args) -> CommandResult:
    p = permutation_of(_word(args.word, args.n))
    return CommandResult("OK", {"images": list(p.images)}, [" ".join(map(str, p.images))])


def cmd_cross(args) -> CommandResult:
    i, j = args.pair
    c = crossing_number(_word(args.word, args.n), i, j)
    return CommandResult("OK", {"pair": [i, j], "crossing_number": c}, [str(c)])


def cmd_tau(args) -> CommandResult:
    w = tau_word(args.p, args.q, args.n)
    return CommandResult("OK", {"word": w, "permutation": list(permutation_of(w).images)}, [str(w)])


def cmd_member(args) -> CommandResult:
    spec = ParabolicSpec(args.n, _word(args.alpha, args.n), Interval(*args.interval))
    u = _word(args.word, args.n)
    if args.center:
        v = multiply(invert(spec.alpha), u, spec.alpha)
        try:
            q, h = decompose_center_times_parabolic(v, spec.interval)
        except NotInZH as exc:
            return CommandResult(NO, {"reason": str(exc)}, [NO])
        h = multiply(spec.alpha, h, invert(spec.alpha))
        return CommandResult(YES, {"q": q, "h": h}, [f"YES q={q} h={h}"])
    ok = spec.contains(u)
    status = YES if ok else NO
    return CommandResult(status, {"member": ok}, [status])


def cmd_centralizer(args) -> CommandResult:
    cg = centralizer_generators(args.n, Interval(*args.interval))
    return CommandResult("OK", {"gens": list(cg.gens), "labels": list(cg.labels)}, [str(w) for w in cg.gens])


def _conj_result(s: ConjTuple, t: ConjTuple, args) -> CommandResult:
    try:
        x = solve_simultaneous_conjugacy(s, t, budget=args.budget, threads=args.threads)
    except Inconclusive as exc:
        return CommandResult(INCONCLUSIVE, {"budget": exc.budget}, [f"INCONCLUSIVE({exc.budget})"])
    if x is None:
        return CommandResult(NO, {}, ["NO"])
    return CommandResult(YES, {"conjugator": x}, [str(x)])


def cmd_conj(args) -> CommandResult:
    u, v = _word(args.u, args.n), _word(args.v, args.n)
    return _conj_result(ConjTuple.of(u), ConjTuple.of(v), args)


def cmd_simconj(args) -> CommandResult:
    s = parse_tuple_lines(Path(args.s_file).read_text(), args.n)
    t = parse_tuple_lines(Path(args.t_file).read_text(), args.n)
    return _conj_result(s, t, args)


def cmd_dcp(args) -> CommandResult:
    instance = parse_instance(Path(args.instance).read_text())
    try:
        result = solve_dcp(instance, budget=args.budget, threads=args.threads)
    except InvariantViolation as exc:
        return CommandResult("ERROR", {"error": str(exc), "diagnostics": exc.diagnostics},
                             [f"ERROR invariant violation: {exc}"])
    diagnostics = dict(result.diagnostics)
    if result.status == YES:
        a, b = result.solution.a, result.solution.b
        if not verify_solution(instance, a, b):
            return CommandResult("ERROR", {"error": "witness failed re-verification"}, ["ERROR witness"])
        return CommandResult(YES, {"a": a, "b": b, "diagnostics": diagnostics}, [f"YES a={a} b={b}"])
    return CommandResult(result.status, {"diagnostics": diagnostics}, [result.status])


def _oracle_result(found: bool, conclusive: bool, payload: dict[str, Any], line: str) -> CommandResult:
    if found:
        return CommandResult(YES, payload, [line])
    status = NO if conclusive else INCONCLUSIVE
    return CommandResult(status, payload, [status if conclusive else "NO(bounded)"])


def cmd_oracle(args) -> CommandResult:
    if args.oracle_cmd == "dcp":
        instance = parse_instance(Path(args.instance).read_text())
        r = brute_dcp(instance, args.max_len)
        payload = {"witness": list(r.witness), "conclusive": r.conclusive, "reason": r.reason}
        line = f"YES a={r.witness[0]} b={r.witness[1]}" if r.found else ""
        return _oracle_result(r.found, r.conclusive, payload, line)
    if args.oracle_cmd == "conj":
        r = brute_conjugator(_word(args.u, args.n), _word(args.v, args.n), args.max_len)
        payload = {"witness": list(r.witness), "conclusive": r.conclusive, "reason": r.reason}
        return _oracle_result(r.found, r.conclusive, payload, str(r.witness[0]) if r.found else "")
    if args.oracle_cmd == "member":
        gens = [_word(g, args.n) for g in args.gens]
        r = brute_membership(_word(args.word, args.n), gens, args.max_len)
        payload = {"witness": list(r.witness), "conclusive": r.conclusive, "reason": r.reason}
        return _oracle_result(r.found, r.conclusive, payload, "YES")
    if args.oracle_cmd == "double-centralizer":
        rep = brute_double_centralizer(args.n, Interval(*args.interval), args.samples, args.max_len, args.seed)
        payload = {"samples": rep.samples, "commuting": rep.commuting, "members": rep.members,
                   "violations": rep.violations}
        lines = [f"samples: {rep.samples}  commuting: {rep.commuting}  violations: {len(rep.violations)}",
                 *(str(w) for w in rep.violations)]
        return CommandResult("OK" if rep.ok else NO, payload, lines)
    raise BraidError(f"unknown oracle command {args.oracle_cmd}")


# ----------------------------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help=f"search node budget (default {DEFAULT_BUDGET})")
    common.add_argument("--threads", type=int, default=1, help="worker threads for conjugacy search (default 1)")

    parser = argparse.ArgumentParser(prog="braiddcp", description="Braid group computations and the double coset problem.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("nf", cmd_nf, "left normal form of a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word")

    p = add("eq", cmd_eq, "word problem: are two words equal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("u")
    p.add_argument("v")

    p = add("perm", cmd_perm, "induced permutation of strand labels")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word")

    p = add("cross", cmd_cross, "algebraic crossing number of a strand pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pair", type=int, nargs=2, required=True, metavar=("I", "J"))
    p.add_argument("word")

    p = add("tau", cmd_tau, "the block-moving braid tau(p, q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = add("member", cmd_member, "membership in alpha B[k,l] alpha^-1 (or in <Delta^2> times it)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--interval", type=int, nargs=2, required=True, metavar=("K", "L"))
    p.add_argument("--alpha", default="")
    p.add_argument("--center", action="store_true", help="test <Delta^2>.H and print the splitting")
    p.add_argument("word")

    p = add("centralizer", cmd_centralizer, "generators of the centralizer of B[k,l]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--interval", type=int, nargs=2, required=True, metavar=("K", "L"))

    p = add("conj", cmd_conj, "conjugacy: find x with x^-1 u x = v")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("u")
    p.add_argument("v")

    p = add("simconj", cmd_simconj, "simultaneous conjugacy of two tuple files")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("s_file")
    p.add_argument("t_file")

    p = add("dcp", cmd_dcp, "decide a double coset instance file")
    p.add_argument("instance")

    p = add("oracle", cmd_oracle, "bounded brute-force deciders")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    o = osub.add_parser("dcp", parents=[common])
    o.add_argument("instance")
    o.add_argument("--max-len", type=int, default=6)
    o = osub.add_parser("conj", parents=[common])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("u")
    o.add_argument("v")
    o.add_argument("--max-len", type=int, default=6)
    o = osub.add_parser("member", parents=[common])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--gens", nargs="+", required=True)
    o.add_argument("word")
    o.add_argument("--max-len", type=int, default=6)
    o = osub.add_parser("double-centralizer", parents=[common])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--interval", type=int, nargs=2, required=True, metavar=("K", "L"))
    o.add_argument("--samples", type=int, default=1000)
    o.add_argument("--max-len", type=int, default=8)
    o.add_argument("--seed", type=int, default=0)
    return parser


def _protect_words(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1 2" as an option; a leading space keeps it positional and parse_word ignores it
    return [" " + a if a.startswith("-") and " " in a.strip() else a for a in argv]


def run(argv: Sequence[str]) -> tuple[CommandResult, bool]:
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_words(argv))
    except SystemExit as exc:
        if exc.code == 0:
            raise
        return CommandResult("ERROR", {"error": "bad arguments"}, ["ERROR bad arguments"]), False
    try:
        return args.func(args), args.json
    except (BraidError, OracleBudgetExceeded, OSError, ValueError) as exc:
        return CommandResult("ERROR", {"error": str(exc)}, [f"ERROR {exc}"]), args.json


def main(argv: Sequence[str] | None = None) -> int:
    result, as_json = run(sys.argv[1:] if argv is None else argv)
    out = result.render(as_json)
    if out:
        stream = sys.stderr if result.status == "ERROR" and not as_json else sys.stdout
        print(out, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
