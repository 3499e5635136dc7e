"""Small programs with known answers, used by tests, the suite and the CLI."""
from .parser import parse_program

PI1 = """\
p :- not s.
p :- r.
q :- r.
r :- p, q.
"""

# the only maximal elementary set {p, q} has a loop formula both models satisfy
MAXIMAL_ONLY_FAILS = """\
p :- q, not p.
q :- p, not p.
p.
"""

# {p, q} is elementary and unfounded w.r.t. {p, q, r} but not elementarily unfounded
ELEMENTARY_UNFOUNDED_GAP = """\
p :- q, not r.
q :- p, not r.
"""

# non-trivial loops are the pairs and {p, q, r}; no singleton is a non-trivial loop
DISJUNCTIVE_TRIANGLE = """\
p ; q :- r.
p ; r :- q.
q ; r :- p.
"""

# {p, q, r} is elementary but its subloop {p, q} is not
SUBLOOP_NOT_ELEMENTARY = """\
p :- p, q.
p :- r.
r :- p.
q :- p, q.
q :- r.
r :- q.
"""

# {q} is not outbound in the loop {p, q}
DISJUNCTIVE_SMALL = """\
p ; q :- p.
p :- q.
p :- not r.
"""

SOURCES = {
    "pi1": PI1,
    "program3": MAXIMAL_ONLY_FAILS,
    "program5": ELEMENTARY_UNFOUNDED_GAP,
    "program6": DISJUNCTIVE_TRIANGLE,
    "p2": SUBLOOP_NOT_ELEMENTARY,
    "d1": DISJUNCTIVE_SMALL,
}


def load(name: str):
    return parse_program(SOURCES[name])


def all_fixtures() -> dict:
    return {name: load(name) for name in SOURCES}
