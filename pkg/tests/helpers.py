"""Independent reference implementations and hypothesis strategies for the tests."""
from itertools import combinations

from hypothesis import strategies as st

from elemsets.oracle import GenParams, gen_random_program
from elemsets.program import AtomSet


def S(*atoms):
    return AtomSet(atoms)


def subsets(atoms, nonempty=True):
    atoms = sorted(atoms)
    for k in range(1 if nonempty else 0, len(atoms) + 1):
        for c in combinations(atoms, k):
            yield frozenset(c)


def reachable(edges, start, allowed):
    seen, todo = {start}, [start]
    while todo:
        u = todo.pop()
        for a, b in edges:
            if a == u and b in allowed and b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def strongly_connected_ref(vertices, edges):
    """Every vertex reaches every other inside ``vertices``."""
    vertices = set(vertices)
    return bool(vertices) and all(reachable(edges, v, vertices) >= vertices for v in vertices)


def sccs_ref(vertices, edges):
    comps = set()
    for v in vertices:
        fwd = reachable(edges, v, set(vertices))
        comps.add(frozenset(u for u in fwd if v in reachable(edges, u, set(vertices))))
    return comps


def rule_as_python(r):
    """Classical reading of a rule as a Python predicate over an interpretation."""
    def holds(x):
        body = (
            all(a in x for a in r.pos_body)
            and all(a not in x for a in r.neg_body)
            and all(not (a not in x) for a in r.nneg_body)
        )
        return (not body) or any(a in x for a in r.head)
    return holds


def stable_ref(program, x):
    """Gelfond-Lifschitz: X is a model and no proper subset models the reduct."""
    x = frozenset(x)
    if not all(rule_as_python(r)(x) for r in program.rules):
        return False
    reduct = [
        (r.head, r.pos_body)
        for r in program.rules
        if not (r.neg_body & x) and r.nneg_body <= x
    ]
    for k in range(len(x)):
        for smaller in combinations(sorted(x), k):
            s = frozenset(smaller)
            if all(not (b <= s) or (h & s) for h, b in reduct):
                return False
    return True


def externally_supported_ref(program, y, x):
    """Direct reading of the support condition, no formula objects."""
    for r in program.rules:
        if r.head & y and not (r.pos_body & y):
            body = r.pos_body <= x and not (r.neg_body & x) and r.nneg_body <= x
            if body and not ((r.head - y) & x):
                return True
    return False


def params(mode, seed, atoms=6, rules=12):
    return GenParams(
        atom_count=atoms,
        rule_count=rules,
        max_head=2,
        max_pos_body=2,
        max_neg_body=1,
        allow_double_negation=mode != "nondisjunctive",
        mode=mode,
        seed=seed,
    )


def programs(mode="nondisjunctive", atoms=6, rules=12):
    return st.integers(0, 2**32 - 1).map(lambda s: gen_random_program(params(mode, s, atoms, rules)))


any_programs = st.sampled_from(["nondisjunctive", "disjunctive", "hcf_only"]).flatmap(programs)


def atomsets(program):
    return st.sets(st.sampled_from(sorted(program.atoms))).map(AtomSet) if program.atoms else st.just(AtomSet())
