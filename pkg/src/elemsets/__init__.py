"""Elementary sets, loop formulas and unfounded sets for ground logic programs."""

__version__ = "0.1.0"

from .program import AtomSet, Mode, Program, Rule, atom, atoms_of, classify, make_program, rule
from .parser import parse_atomset, parse_program, render_program
from .formula import evaluate, render_formula
from .depgraph import (
    Digraph,
    dependency_graph,
    enumerate_loops,
    is_loop,
    is_loop_alt,
    is_trivial_loop,
    sccs,
)
from .elementary import (
    elementary_subgraph,
    enumerate_elementary_sets,
    is_elementary,
    is_elementary_bruteforce,
    is_elementary_fast,
    is_elementary_loops_only,
    is_gs_elementary_loop,
    is_head_cycle_free,
    is_outbound,
)
from .semantics import (
    ConditionChecker,
    check_conditions,
    enumerate_elementarily_unfounded,
    enumerate_models,
    enumerate_stable_models,
    external_support_formula,
    is_elementarily_unfounded,
    is_stable,
    is_unfounded,
    loop_formula,
    reduct,
    relevant_program,
    relevant_program_disj,
    satisfies_program,
)
