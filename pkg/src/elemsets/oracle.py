"""Brute-force references and the randomized equivalence suite.

Nothing on the reference path uses the elementary subgraph or loop
enumeration: the references are built from ``is_unfounded`` and
``is_outbound`` alone.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from . import fixtures
from .depgraph import is_loop, is_loop_alt, enumerate_loops, is_trivial_loop
from .elementary import (
    fast_applicable,
    is_elementary_bruteforce,
    is_elementary_fast,
    is_elementary_loops_only,
    is_gs_elementary_loop,
    is_head_cycle_free,
)
from .errors import GenerationExhausted
from .program import AtomSet, Mode, Program, Rule
from .semantics import (
    SUBSET_BOUND,
    ConditionChecker,
    _all_subsets,
    enumerate_elementarily_unfounded,
    enumerate_models,
    is_unfounded,
)

ATOM_NAMES = "abcdefgh"
HCF_ONLY = "hcf_only"
RESAMPLE_CAP = 1000


@dataclass(frozen=True)
class GenParams:
    atom_count: int = 5
    rule_count: int = 8
    max_head: int = 2
    max_pos_body: int = 2
    max_neg_body: int = 1
    allow_double_negation: bool = False
    mode: str = Mode.NONDISJUNCTIVE.value
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.atom_count <= len(ATOM_NAMES):
            raise ValueError(f"atom_count must be in 1..{len(ATOM_NAMES)}")
        if not 0 <= self.rule_count <= 16:
            raise ValueError("rule_count must be in 0..16")
        if self.mode not in (Mode.NONDISJUNCTIVE.value, Mode.DISJUNCTIVE.value, HCF_ONLY):
            raise ValueError(f"unknown mode {self.mode!r}")


def _draw_rule(rng: random.Random, atoms, p: GenParams) -> Rule:
    if p.mode == Mode.NONDISJUNCTIVE.value:
        head = [rng.choice(atoms)]
    else:
        # mostly one or two head atoms, occasionally a constraint
        size = 0 if rng.random() < 0.1 else rng.randint(1, max(1, p.max_head))
        head = rng.sample(atoms, min(size, len(atoms)))
    pos = rng.sample(atoms, min(rng.randint(0, p.max_pos_body), len(atoms)))
    neg = rng.sample(atoms, min(rng.randint(0, p.max_neg_body), len(atoms)))
    nneg = []
    if p.allow_double_negation and p.mode != Mode.NONDISJUNCTIVE.value and rng.random() < 0.2:
        nneg = [rng.choice(atoms)]
    return Rule(AtomSet(head), AtomSet(pos), AtomSet(neg), AtomSet(nneg))


def _draw_program(rng: random.Random, p: GenParams) -> Program:
    atoms = list(ATOM_NAMES[: p.atom_count])
    n_rules = rng.randint(1, p.rule_count) if p.rule_count else 0
    rules = []
    if n_rules >= 2 and p.atom_count >= 2 and p.max_pos_body >= 1 and rng.random() < 0.5:
        # plant a positive cycle so that non-singleton loops show up
        k = rng.randint(2, min(4, p.atom_count, n_rules))
        cycle = rng.sample(atoms, k)
        for i in range(k):
            r = _draw_rule(rng, atoms, p)
            head = {cycle[i]}
            if p.mode != Mode.NONDISJUNCTIVE.value:
                head |= set(sorted(r.head - head)[: max(0, p.max_head - 1)])
            pos = set(sorted(r.pos_body)[: p.max_pos_body - 1]) | {cycle[(i + 1) % k]}
            rules.append(Rule(AtomSet(head), AtomSet(pos), r.neg_body, r.nneg_body))
    while len(rules) < n_rules:
        rules.append(_draw_rule(rng, atoms, p))
    return Program(tuple(rules))


def gen_random_program(params: GenParams) -> Program:
    """Deterministic in ``params`` (including the seed)."""
    rng = random.Random(params.seed)
    if params.mode != HCF_ONLY:
        return _draw_program(rng, params)
    for _ in range(RESAMPLE_CAP):
        program = _draw_program(rng, params)
        if is_head_cycle_free(program):
            return program
    raise GenerationExhausted(f"no head-cycle-free program after {RESAMPLE_CAP} draws")


def oracle_minimal_unfounded(program: Program, x, bound: int = SUBSET_BOUND) -> list[AtomSet]:
    """Inclusion-minimal nonempty unfounded sets by exhaustive sweep."""
    x = AtomSet(x)
    minimal: list = []
    for y in _all_subsets(program, bound):
        if y and is_unfounded(program, y, x) and not any(m <= y for m in minimal):
            minimal.append(y)
    return minimal


def oracle_elementary_sets(program: Program, bound: int = SUBSET_BOUND) -> list[AtomSet]:
    return [y for y in _all_subsets(program, bound) if y and is_elementary_bruteforce(program, y)]


PROPERTIES = (
    "condition_ladder",
    "fast_vs_bruteforce",
    "loops_only_vs_bruteforce",
    "loop_definitions",
    "elementarily_unfounded_vs_oracle",
    "gs_vs_elementary",
)


@dataclass
class Tally:
    checked: int = 0
    failed: int = 0


@dataclass
class Counterexample:
    property: str
    program: str
    detail: str


@dataclass
class SuiteReport:
    trials: int = 0
    programs: int = 0
    properties: dict = field(default_factory=lambda: {p: Tally() for p in PROPERTIES})
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return all(t.failed == 0 for t in self.properties.values())

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "programs": self.programs,
            "passed": self.passed,
            "properties": {k: asdict(v) for k, v in self.properties.items()},
            "counterexample": asdict(self.counterexample) if self.counterexample else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


class _Recorder:
    def __init__(self, report: SuiteReport, program: Program):
        self.report, self.program = report, program

    def __call__(self, prop: str, ok: bool, detail: str = ""):
        tally = self.report.properties[prop]
        tally.checked += 1
        if not ok:
            tally.failed += 1
            if self.report.counterexample is None:
                self.report.counterexample = Counterexample(prop, str(self.program), detail)


def check_program(program: Program, report: SuiteReport, fast_decider: Optional[Callable] = None):
    """Run every property on one program, recording into ``report``."""
    record = _Recorder(report, program)
    fast = fast_decider or is_elementary_fast
    subsets = [y for y in _all_subsets(program, SUBSET_BOUND) if y]

    checker = ConditionChecker(program)
    for x in enumerate_models(program):
        rep = checker.check(x)
        record("condition_ladder", rep.agree, f"model {x}: {rep.conditions}")

    use_fast = fast_applicable(program)
    loops = set(enumerate_loops(program))
    for y in subsets:
        brute = is_elementary_bruteforce(program, y)
        if use_fast:
            got = fast(program, y)
            record("fast_vs_bruteforce", got == brute, f"set {y}: fast={got} brute={brute}")
        got = is_elementary_loops_only(program, y)
        record("loops_only_vs_bruteforce", got == brute, f"set {y}: loops_only={got} brute={brute}")
        a, b = is_loop(program, y), is_loop_alt(program, y)
        record("loop_definitions", a == b == (y in loops), f"set {y}: graph={a} alt={b} enum={y in loops}")
        if program.is_nondisjunctive and a and not is_trivial_loop(program, y):
            gs = is_gs_elementary_loop(program, y)
            record("gs_vs_elementary", gs == brute, f"loop {y}: gs={gs} elementary={brute}")

    for x in [AtomSet()] + subsets:
        got = enumerate_elementarily_unfounded(program, x)
        want = oracle_minimal_unfounded(program, x)
        antichain = not any(a < b for a in got for b in got)
        record(
            "elementarily_unfounded_vs_oracle",
            got == want and antichain,
            f"X={x}: enumerated={[str(s) for s in got]} oracle={[str(s) for s in want]}",
        )


def run_equivalence_suite(
    params: GenParams,
    trials: int,
    include_fixtures: bool = False,
    fast_decider: Optional[Callable] = None,
) -> SuiteReport:
    """Check the equivalence properties on ``trials`` random programs.

    Trial ``i`` uses seed ``params.seed + i``.  ``fast_decider`` replaces the
    polynomial elementariness test (used to self-test the harness).
    """
    report = SuiteReport()
    programs = list(fixtures.all_fixtures().values()) if include_fixtures else []
    for i in range(trials):
        programs.append(gen_random_program(_reseed(params, params.seed + i)))
    report.trials = trials
    for program in programs:
        report.programs += 1
        check_program(program, report, fast_decider)
    return report


def _reseed(params: GenParams, seed: int) -> GenParams:
    return GenParams(**{**asdict(params), "seed": seed})
