"""3-UNSAT to elementariness for disjunctive programs.

For a 3-CNF formula over ``x1..xn`` the target set holds one atom per
literal (``xi`` and ``xbari``).  The constructed program makes every
nonempty proper subset of the target outbound unless it picks exactly one
literal per variable and falsifies no clause, so the target is elementary
iff the formula is unsatisfiable.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .elementary import _outbound, is_elementary_bruteforce, non_outbound_subset
from .errors import ClauseTooLong, ParseError, TooLarge, TooManyVariables
from .program import AtomSet, Program, Rule

SAT_VARIABLE_LIMIT = 20
REDUCTION_TARGET_LIMIT = 12


@dataclass(frozen=True)
class Cnf:
    var_count: int
    clauses: tuple  # of 3-tuples of nonzero ints, DIMACS-signed

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for c in self.clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have three literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.var_count:
                    raise ValueError(f"literal {lit} out of range 1..{self.var_count}")

    def satisfied_by(self, assignment) -> bool:
        """``assignment[i]`` is the truth value of variable ``i + 1``."""
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.var_count} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Cnf:
    """DIMACS subset; clauses shorter than three literals repeat their last literal."""
    header = None
    clauses, current = [], []
    current_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise ParseError("duplicate header", lineno, 1)
            if len(parts) != 4 or parts[1] != "cnf" or not all(p.isdigit() for p in parts[2:]):
                raise ParseError("malformed header, expected 'p cnf <vars> <clauses>'", lineno, 1)
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", lineno, 1)
        column = 1
        for token in raw.split():
            column = raw.index(token, column - 1) + 1
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(f"bad literal {token!r}", lineno, column) from None
            if abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds variable count", lineno, column)
            if lit == 0:
                clauses.append(_normalize(current, lineno))
                current = []
            else:
                current.append(lit)
                current_line = lineno
            column += len(token)
    if header is None:
        raise ParseError("missing 'p cnf' header", 1, 1)
    if current:
        raise ParseError("last clause is not terminated by 0", current_line, 1)
    return Cnf(header[0], tuple(clauses))


def _normalize(literals, lineno) -> tuple:
    distinct = list(dict.fromkeys(literals))
    if not distinct:
        raise ParseError("empty clause", lineno, 1)
    if len(distinct) > 3:
        raise ClauseTooLong(f"line {lineno}: clause has {len(distinct)} distinct literals")
    while len(distinct) < 3:
        distinct.append(distinct[-1])
    return tuple(distinct)


def literal_atom(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"xbar{-lit}"


def _pair(i: int) -> tuple:
    return literal_atom(i), literal_atom(-i)


def build_reduction(cnf: Cnf) -> tuple[Program, AtomSet]:
    """Program and target literal set for ``cnf`` (indices wrap cyclically)."""
    n = cnf.var_count
    if n < 1:
        raise ValueError("the reduction needs at least one variable")
    rules = []
    for i in range(1, n + 1):
        # both literals of i follow from both literals of the next variable
        nxt = _pair(i % n + 1)
        for a in _pair(i):
            rules.append(Rule(AtomSet([a]), AtomSet(nxt)))
    for i in range(1, n + 1):
        for b in _pair(i % n + 1):
            rules.append(Rule(AtomSet(_pair(i)), AtomSet([b])))
    for l1, l2, l3 in cnf.clauses:
        for h1, h2, b in ((l1, l2, l3), (l1, l3, l2), (l2, l3, l1)):
            rules.append(Rule(AtomSet([literal_atom(-h1), literal_atom(-h2)]), AtomSet([literal_atom(b)])))
    target = AtomSet(a for i in range(1, n + 1) for a in _pair(i))
    return Program(tuple(rules)), target


def brute_force_sat(cnf: Cnf) -> bool:
    if cnf.var_count > SAT_VARIABLE_LIMIT:
        raise TooManyVariables(f"{cnf.var_count} variables exceed {SAT_VARIABLE_LIMIT}")
    return any(cnf.satisfied_by(a) for a in product((False, True), repeat=cnf.var_count))


def verify_reduction(cnf: Cnf) -> bool:
    """The target is elementary for the constructed program iff ``cnf`` is unsatisfiable."""
    if 2 * cnf.var_count > REDUCTION_TARGET_LIMIT:
        raise TooLarge(f"target of {2 * cnf.var_count} atoms exceeds {REDUCTION_TARGET_LIMIT}")
    program, target = build_reduction(cnf)
    return is_elementary_bruteforce(program, target) == (not brute_force_sat(cnf))


def certificate(cnf: Cnf):
    """A non-outbound subset of the target (a model of ``cnf`` in literal
    form) or None when the target is elementary."""
    program, target = build_reduction(cnf)
    return non_outbound_subset(program, target)


def assignment_of(subset, n: int) -> tuple:
    """Read a truth assignment off a subset holding one literal per variable."""
    return tuple(literal_atom(i) in subset for i in range(1, n + 1))


def random_cnf(n: int, m: int, rng: random.Random) -> Cnf:
    clauses = []
    for _ in range(m):
        vs = rng.sample(range(1, n + 1), min(3, n))
        while len(vs) < 3:
            vs.append(rng.randint(1, n))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return Cnf(n, tuple(clauses))


def guarantee_violations(cnf: Cnf) -> list[tuple]:
    """Check the three outbound guarantees of the construction exhaustively.

    Returns ``(guarantee, subset)`` pairs for every subset the guarantees claim
    outbound but which is not.  Each part is checked against its own
    subprogram.
    """
    program, target = build_reduction(cnf)
    n = cnf.var_count
    rules = program.rules
    chain, choice = rules[: 2 * n], rules[2 * n : 4 * n]
    clause_rules = [rules[4 * n + 3 * k : 4 * n + 3 * k + 3] for k in range(len(cnf.clauses))]
    found = []
    for z in target.subsets():
        rest = target - z
        picked = [(literal_atom(i) in z, literal_atom(-i) in z) for i in range(1, n + 1)]
        if any(not p and not q for p, q in picked) and not _outbound(chain, z, rest):
            found.append(("missing_variable", z))
        if not rest:
            continue
        if any(p and q for p, q in picked) and not _outbound(choice, z, rest):
            found.append(("both_literals", z))
        for clause, crules in zip(cnf.clauses, clause_rules):
            complements = {literal_atom(-l) for l in clause}
            literals = {literal_atom(l) for l in clause}
            if complements <= z and literals.isdisjoint(z) and not _outbound(crules, z, rest):
                found.append(("falsified_clause", z))
    return found
