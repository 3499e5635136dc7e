"""External support, loop formulas, unfounded sets and stable models.

``ConditionChecker`` evaluates every stability condition of the loop
formula characterization literally, each by its own route, so that the
conditions can be compared against each other on small programs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .depgraph import _check_candidate, enumerate_loops
from .elementary import (
    enumerate_elementary_sets,
    fast_applicable,
    is_elementary_bruteforce,
    is_elementary_fast,
)
from .errors import EmptyTarget, NotNondisjunctive, UniverseTooLarge, UnknownAtom
from .formula import Formula, Implies, Not, Var, conj, disj, evaluate
from .program import AtomSet, Program, Rule, canonical

MODEL_BOUND = 16
SUBSET_BOUND = 12


def _check_interpretation(program: Program, x) -> AtomSet:
    x = AtomSet(x)
    unknown = x - program.atoms
    if unknown:
        raise UnknownAtom(f"atoms {sorted(unknown)} do not occur in the program")
    return x


def _check_target(y) -> AtomSet:
    y = AtomSet(y)
    if not y:
        raise EmptyTarget("target set is empty")
    return y


def satisfies_program(program: Program, x) -> bool:
    x = _check_interpretation(program, x)
    return all(r.satisfied_by(x) for r in program.rules)


def _body_formulas(r: Rule) -> list:
    return (
        [Var(a) for a in r.pos_body]
        + [Not(Var(a)) for a in r.neg_body]
        + [Not(Not(Var(a))) for a in r.nneg_body]
    )


def external_support_formula(program: Program, y) -> Formula:
    """Disjunction over rules whose head meets ``Y`` and whose positive body
    misses it, of the body conjoined with the negated head atoms outside ``Y``."""
    y = _check_target(y)
    disjuncts = []
    for r in program.rules:
        if r.head.isdisjoint(y) or not r.pos_body.isdisjoint(y):
            continue
        disjuncts.append(conj(_body_formulas(r) + [Not(Var(a)) for a in r.head - y]))
    return disj(disjuncts)


def loop_formula(program: Program, y) -> Formula:
    y = _check_target(y)
    return Implies(conj(Var(a) for a in y), external_support_formula(program, y))


def _supported(rules, y, x) -> bool:
    for r in rules:
        if (
            not r.head.isdisjoint(y)
            and r.pos_body.isdisjoint(y)
            and r.body_holds(x)
            and (r.head - y).isdisjoint(x)
        ):
            return True
    return False


def is_externally_supported(program: Program, y, x) -> bool:
    return _supported(program.rules, _check_target(y), AtomSet(x))


def is_unfounded(program: Program, y, x) -> bool:
    """``X`` falsifies the external support formula of ``Y``."""
    return not is_externally_supported(program, y, x)


def satisfies_loop_formula(program: Program, y, x) -> bool:
    y, x = _check_target(y), AtomSet(x)
    return not y <= x or _supported(program.rules, y, x)


def relevant_program(program: Program, x) -> Program:
    """Rules whose body is true in ``X``."""
    if not program.is_nondisjunctive:
        raise NotNondisjunctive("use relevant_program_disj for disjunctive programs")
    x = AtomSet(x)
    return program.subprogram(lambda r: r.body_holds(x))


def relevant_program_disj(program: Program, x, y) -> Program:
    """Rules whose body is true in ``X`` and whose head atoms outside ``Y`` are false in ``X``."""
    x, y = AtomSet(x), AtomSet(y)
    return program.subprogram(lambda r: r.body_holds(x) and (r.head - y).isdisjoint(x))


def _relevant_for(program: Program, x, y) -> Program:
    if program.is_nondisjunctive:
        return relevant_program(program, x)
    return relevant_program_disj(program, x, y)


def _elementary_in(sub: Program, y) -> bool:
    """Elementariness for a subprogram; false when ``Y`` does not occur in it."""
    if not y <= sub.atoms:
        return False
    if len(y) == 1:
        return True
    if fast_applicable(sub):
        return is_elementary_fast(sub, y)
    return is_elementary_bruteforce(sub, y)


def is_elementarily_unfounded(program: Program, y, x) -> bool:
    y = _check_candidate(program, _check_target(y))
    x = AtomSet(x)
    if not is_unfounded(program, y, x):
        return False
    return len(y) == 1 or _elementary_in(_relevant_for(program, x, y), y)


def enumerate_elementarily_unfounded(program: Program, x) -> list[AtomSet]:
    """Elementarily unfounded sets w.r.t. ``X`` in canonical order.

    An elementary set of a subprogram is elementary for the whole program,
    so the candidates are the program's elementary sets.
    """
    x = AtomSet(x)
    return [
        y for y in enumerate_elementary_sets(program) if is_elementarily_unfounded(program, y, x)
    ]


def reduct(program: Program, x) -> Program:
    """Drop rules whose negative part is false in ``X``; strip the rest to positive rules."""
    x = AtomSet(x)
    kept = [
        Rule(r.head, r.pos_body)
        for r in program.rules
        if r.neg_body.isdisjoint(x) and r.nneg_body <= x
    ]
    return Program(tuple(kept))


def least_model(program: Program) -> AtomSet:
    """Least model of the rules with exactly one head atom (constraints and
    disjunctions are ignored)."""
    model: set = set()
    waiting: dict = {}
    counts = []
    queue = []
    for i, r in enumerate(program.rules):
        if len(r.head) != 1:
            counts.append(None)
            continue
        counts.append(len(r.pos_body))
        for b in r.pos_body:
            waiting.setdefault(b, []).append(i)
        if not r.pos_body:
            queue.append(i)
    while queue:
        (a,) = program.rules[queue.pop()].head
        if a in model:
            continue
        model.add(a)
        for i in waiting.get(a, ()):
            counts[i] -= 1
            if counts[i] == 0:
                queue.append(i)
    return AtomSet(model)


def is_stable(program: Program, x) -> bool:
    """``X`` is a model of the program and a minimal model of its reduct."""
    x = _check_interpretation(program, x)
    if not satisfies_program(program, x):
        return False
    positive = reduct(program, x)
    if all(len(r.head) <= 1 for r in positive.rules):
        # constraints of the reduct hold in every subset of X, so only the
        # definite part matters
        return least_model(positive) == x
    members = tuple(x)
    for size in range(len(members)):
        for smaller in combinations(members, size):
            smaller = frozenset(smaller)
            if all(r.satisfied_by(smaller) for r in positive.rules):
                return False
    return True


def _all_subsets(program: Program, bound: int):
    if len(program.atoms) > bound:
        raise UniverseTooLarge(
            f"{len(program.atoms)} atoms exceed the exhaustive bound of {bound}"
        )
    return AtomSet(program.atoms).subsets(nonempty=False)


def enumerate_models(program: Program, bound: int = MODEL_BOUND) -> list[AtomSet]:
    return [x for x in _all_subsets(program, bound) if satisfies_program(program, x)]


def enumerate_stable_models(program: Program, bound: int = MODEL_BOUND) -> list[AtomSet]:
    return [x for x in _all_subsets(program, bound) if is_stable(program, x)]


CONDITIONS = ("a", "b", "b_prime", "c", "d", "e", "e_prime")


@dataclass
class ConditionReport:
    model: AtomSet
    is_model: bool
    conditions: dict
    witnesses: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.conditions.values())) == 1

    def to_dict(self) -> dict:
        return {
            "model": list(self.model),
            "is_model": self.is_model,
            "conditions": {k: self.conditions[k] for k in CONDITIONS},
            "witnesses": {
                k: (list(v) if v is not None else None) for k, v in self.witnesses.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class ConditionChecker:
    """Per-program precomputation for the stability conditions.

    Loops, elementary sets and all nonempty atom subsets are computed once;
    ``check`` then evaluates each condition for one interpretation.
    """

    def __init__(self, program: Program, bound: int = SUBSET_BOUND):
        self.program = program
        self.subsets = [s for s in _all_subsets(program, bound) if s]
        self.loops = enumerate_loops(program)
        self.elementary = enumerate_elementary_sets(program)
        self.singletons = [AtomSet([a]) for a in program.atoms]
        self._formulas: dict = {}

    def loop_formula(self, y) -> Formula:
        if y not in self._formulas:
            self._formulas[y] = loop_formula(self.program, y)
        return self._formulas[y]

    def _first_violation(self, sets, x) -> Optional[AtomSet]:
        for y in sets:
            if not evaluate(self.loop_formula(y), x):
                return y
        return None

    def maximal_relevant_elementary(self, x) -> list[AtomSet]:
        """Inclusion-maximal sets elementary for the relevant program.

        Nondisjunctive: elementary sets of the relevant program.  Disjunctive:
        sets ``Z`` elementary for the program relevant to ``X`` and ``Z``.
        """
        p = self.program
        if p.is_nondisjunctive:
            sub = relevant_program(p, x)
            found = enumerate_elementary_sets(sub)
        else:
            found = [
                z for z in self.elementary
                if _elementary_in(relevant_program_disj(p, x, z), z)
            ]
        return [z for z in found if not any(z < other for other in found)]

    def check(self, x) -> ConditionReport:
        p = self.program
        x = _check_interpretation(p, x)
        conditions, witnesses = {}, {}

        conditions["a"] = is_stable(p, x)
        witnesses["a"] = None

        w = self._first_violation(self.subsets, x)
        conditions["b"], witnesses["b"] = w is None, w

        w = next((y for y in x.subsets() if is_unfounded(p, y, x)), None)
        conditions["b_prime"], witnesses["b_prime"] = w is None, w

        w = self._first_violation(self.loops, x)
        conditions["c"], witnesses["c"] = w is None, w

        w = self._first_violation(self.elementary, x)
        conditions["d"], witnesses["d"] = w is None, w

        targets = canonical(self.maximal_relevant_elementary(x) + self.singletons)
        w = self._first_violation(targets, x)
        conditions["e"], witnesses["e"] = w is None, w

        eu = enumerate_elementarily_unfounded(p, x)
        w = next((y for y in eu if y <= x), None)
        conditions["e_prime"], witnesses["e_prime"] = w is None, w

        return ConditionReport(x, satisfies_program(p, x), conditions, witnesses)

    def weakened_d(self, x) -> bool:
        """Loop formulas of the maximal elementary sets of the whole program only.
        Not equivalent to stability; kept as a negative control."""
        x = AtomSet(x)
        maximal = [z for z in self.elementary if not any(z < o for o in self.elementary)]
        return self._first_violation(maximal, x) is None


def check_conditions(program: Program, x, bound: int = SUBSET_BOUND) -> ConditionReport:
    return ConditionChecker(program, bound).check(x)


def weakened_condition_d(program: Program, x, bound: int = SUBSET_BOUND) -> bool:
    return ConditionChecker(program, bound).weakened_d(x)
