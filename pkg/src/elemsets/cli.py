"""Command-line interface: ``elemsets <subcommand> [options]``.

Exit codes: 0 on success, 1 when a boolean query answers "no",
2 on usage, parse or analysis errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .depgraph import DEFAULT_LOOP_CAP, dependency_graph, enumerate_loops
from .elementary import (
    elementary_subgraph,
    enumerate_elementary_sets,
    fast_applicable,
    is_elementary_bruteforce,
    is_elementary_fast,
    is_gs_elementary_loop,
    non_outbound_subset,
)
from .errors import ElemSetsError
from .formula import render_formula
from .oracle import GenParams, run_equivalence_suite
from .parser import parse_atomset, parse_program
from .program import AtomSet
from .reduction import brute_force_sat, build_reduction, certificate, parse_dimacs, verify_reduction
from .semantics import (
    MODEL_BOUND,
    SUBSET_BOUND,
    ConditionChecker,
    enumerate_elementarily_unfounded,
    enumerate_models,
    enumerate_stable_models,
    external_support_formula,
    is_elementarily_unfounded,
    is_unfounded,
    loop_formula,
)


class UsageError(Exception):
    pass


def _sets(sets) -> list:
    return [list(s) for s in sets]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _program(args):
    mode = None if args.mode == "auto" else args.mode
    return parse_program(_read(args.input), mode)


def _atomset(args, name, program=None, required=True):
    text = getattr(args, name)
    if text is None:
        if required:
            raise UsageError(f"--{name} is required for this subcommand")
        return None
    s = parse_atomset(text)
    if program is not None:
        unknown = s - program.atoms
        if unknown:
            raise UsageError(f"--{name} mentions atoms not in the program: {', '.join(sorted(unknown))}")
    return s


class Output:
    """Collects the text and JSON renderings of one result."""

    def __init__(self, args):
        self.format = args.format
        self.lines: list = []
        self.data: dict = {}
        self.dot: str | None = None

    def emit(self, stream):
        if self.format == "json":
            stream.write(json.dumps(self.data, indent=2) + "\n")
        elif self.format == "dot":
            if self.dot is None:
                raise UsageError("this subcommand has no DOT output")
            stream.write(self.dot)
        else:
            stream.write("".join(line + "\n" for line in self.lines))


def cmd_loops(args, out):
    loops = enumerate_loops(_program(args), args.cap)
    out.data = {"loops": _sets(loops)}
    out.lines = [str(l) for l in loops]
    return 0


def cmd_depgraph(args, out):
    g = dependency_graph(_program(args))
    out.data = g.to_dict()
    out.dot = g.to_dot()
    out.lines = [f"{u} -> {v}" for u, v in sorted(g.edges)]
    return 0


def cmd_elementary(args, out):
    program = _program(args)
    y = _atomset(args, "set", program, required=False)
    if y is None:
        sets = enumerate_elementary_sets(program, args.cap)
        out.data = {"elementary_sets": _sets(sets)}
        out.lines = [str(s) for s in sets]
        return 0
    if not y:
        raise UsageError("--set must be nonempty")
    if fast_applicable(program) and not args.bruteforce:
        method, answer = "subgraph", is_elementary_fast(program, y)
        witness = None
    else:
        method = "bruteforce"
        witness = non_outbound_subset(program, y)
        answer = is_elementary_bruteforce(program, y)
    out.data = {
        "set": list(y),
        "elementary": answer,
        "method": method,
        "witness": list(witness) if witness is not None else None,
    }
    out.lines = [f"{y} is {'elementary' if answer else 'not elementary'}"]
    if witness is not None:
        out.lines.append(f"{witness} is not outbound in {y}")
    return 0 if answer else 1


def cmd_subgraph(args, out):
    program = _program(args)
    y = _atomset(args, "set", program)
    trace = elementary_subgraph(program, y)
    out.data = trace.to_dict()
    out.dot = trace.to_dot()
    for i, level in enumerate(trace.levels):
        edges = ", ".join(f"{u}->{v}" for u, v in sorted(level))
        out.lines.append(f"level {i}: {edges}")
    out.lines.append(
        "strongly connected" if out.data["strongly_connected"] else "not strongly connected"
    )
    return 0


def _formula_cmd(args, out, build, key):
    program = _program(args)
    y = _atomset(args, "set", program, required=False)
    targets = [y] if y is not None else enumerate_loops(program, args.cap)
    rows = [{"set": list(t), "formula": render_formula(build(program, t))} for t in targets]
    out.data = {key: rows}
    out.lines = [f"{AtomSet(r['set'])}: {r['formula']}" for r in rows]
    return 0


def cmd_es(args, out):
    return _formula_cmd(args, out, external_support_formula, "external_support")


def cmd_lf(args, out):
    return _formula_cmd(args, out, loop_formula, "loop_formulas")


def cmd_unfounded(args, out):
    program = _program(args)
    x = _atomset(args, "model", program)
    y = _atomset(args, "set", program)
    if not y:
        raise UsageError("--set must be nonempty")
    unfounded = is_unfounded(program, y, x)
    elementarily = is_elementarily_unfounded(program, y, x)
    out.data = {
        "set": list(y),
        "model": list(x),
        "unfounded": unfounded,
        "elementarily_unfounded": elementarily,
    }
    out.lines = [
        f"{y} is {'unfounded' if unfounded else 'externally supported'} w.r.t. {x}",
        f"{y} is {'' if elementarily else 'not '}elementarily unfounded w.r.t. {x}",
    ]
    return 0 if unfounded else 1


def cmd_min_unfounded(args, out):
    program = _program(args)
    x = _atomset(args, "model", program)
    sets = enumerate_elementarily_unfounded(program, x)
    out.data = {"model": list(x), "elementarily_unfounded": _sets(sets)}
    out.lines = [str(s) for s in sets]
    return 0


def cmd_models(args, out):
    models = enumerate_models(_program(args), args.bound or MODEL_BOUND)
    out.data = {"models": _sets(models)}
    out.lines = [str(m) for m in models]
    return 0


def cmd_stable(args, out):
    models = enumerate_stable_models(_program(args), args.bound or MODEL_BOUND)
    out.data = {"stable_models": _sets(models)}
    out.lines = [str(m) for m in models]
    return 0


def cmd_check(args, out):
    program = _program(args)
    x = _atomset(args, "model", program)
    report = ConditionChecker(program, args.bound or SUBSET_BOUND).check(x)
    out.data = report.to_dict()
    out.lines = [f"model {x}: {'a model' if report.is_model else 'not a model'} of the program"]
    for name, value in report.conditions.items():
        w = report.witnesses.get(name)
        suffix = f" (violated by {w})" if w is not None else ""
        out.lines.append(f"  ({name.replace('_prime', chr(39))}) {value}{suffix}")
    return 0 if all(report.conditions.values()) else 1


def cmd_gs(args, out):
    program = _program(args)
    y = _atomset(args, "set", program)
    gs = is_gs_elementary_loop(program, y)
    elem = is_elementary_bruteforce(program, y)
    out.data = {"set": list(y), "gs_elementary": gs, "elementary": elem}
    out.lines = [
        f"{y} is {'' if gs else 'not '}a GS-elementary loop",
        f"{y} is {'' if elem else 'not '}an elementary set",
    ]
    return 0 if gs else 1


def cmd_reduce(args, out):
    cnf = parse_dimacs(_read(args.input))
    program, target = build_reduction(cnf)
    out.data = {"program": str(program), "target": list(target)}
    out.lines = [str(program).rstrip("\n"), f"% target: {target}"]
    if not args.verify:
        return 0
    sat = brute_force_sat(cnf)
    ok = verify_reduction(cnf)
    z = certificate(cnf)
    out.data.update({
        "satisfiable": sat,
        "elementary": z is None,
        "certificate": list(z) if z is not None else None,
        "verified": ok,
    })
    out.lines.append(f"% satisfiable: {sat}; target elementary: {z is None}; verified: {ok}")
    return 0 if ok else 1


def cmd_suite(args, out):
    params = GenParams(
        atom_count=args.atoms,
        rule_count=args.rules,
        allow_double_negation=args.mode_family != "nondisjunctive",
        mode=args.mode_family,
        seed=args.seed,
    )
    report = run_equivalence_suite(params, args.trials, include_fixtures=args.fixtures)
    out.data = report.to_dict()
    out.lines = [f"{report.programs} programs, {'PASS' if report.passed else 'FAIL'}"]
    for name, t in report.properties.items():
        out.lines.append(f"  {name}: {t.checked} checked, {t.failed} failed")
    if report.counterexample:
        c = report.counterexample
        out.lines += [f"counterexample ({c.property}): {c.detail}", c.program.rstrip("\n")]
    return 0 if report.passed else 1


COMMANDS = {
    "loops": (cmd_loops, "list all loops"),
    "depgraph": (cmd_depgraph, "print the positive dependency graph"),
    "elementary": (cmd_elementary, "list elementary sets, or decide one with --set"),
    "subgraph": (cmd_subgraph, "trace the elementary subgraph of --set"),
    "es": (cmd_es, "external support formulas (of --set, or of every loop)"),
    "lf": (cmd_lf, "loop formulas (of --set, or of every loop)"),
    "unfounded": (cmd_unfounded, "is --set unfounded w.r.t. --model"),
    "min-unfounded": (cmd_min_unfounded, "elementarily unfounded sets w.r.t. --model"),
    "models": (cmd_models, "all classical models"),
    "stable": (cmd_stable, "all stable models"),
    "check": (cmd_check, "evaluate every stability condition for --model"),
    "gs": (cmd_gs, "is --set a GS-elementary loop"),
    "reduce": (cmd_reduce, "build the elementariness instance for a DIMACS 3-CNF"),
    "suite": (cmd_suite, "run the randomized equivalence suite"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elemsets", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        if name == "suite":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--trials", type=int, default=100)
            p.add_argument("--atoms", type=int, default=6)
            p.add_argument("--rules", type=int, default=12)
            p.add_argument(
                "--family", dest="mode_family", default="nondisjunctive",
                choices=("nondisjunctive", "disjunctive", "hcf_only"),
            )
            p.add_argument("--fixtures", action="store_true", help="also check the built-in fixtures")
            continue
        p.add_argument("input", help="input file, '-' for stdin")
        if name == "reduce":
            p.add_argument("--verify", action="store_true", help="also decide both sides by brute force")
            continue
        p.add_argument("--mode", choices=("auto", "nondisjunctive", "disjunctive"), default="auto")
        p.add_argument("--set", help="target atom set, e.g. p,q,r")
        p.add_argument("--model", help="interpretation, e.g. {p, q}")
        p.add_argument("--cap", type=int, default=DEFAULT_LOOP_CAP, help="loop enumeration cap")
        p.add_argument("--bound", type=int, default=None, help="exhaustive enumeration bound")
        p.add_argument("--bruteforce", action="store_true", help="force the subset sweep")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = Output(args)
    try:
        code = COMMANDS[args.command][0](args, out)
        out.emit(sys.stdout)
    except (ElemSetsError, UsageError, OSError) as e:
        print(f"elemsets: error: {e}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
