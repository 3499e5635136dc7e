"""Outbound subsets and elementary sets.

Three deciders are provided: the subset sweep straight from the
definition (exponential, the reference), the sweep restricted to proper
subloops, and the polynomial elementary-subgraph test valid for
nondisjunctive and head-cycle-free programs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .depgraph import (
    DEFAULT_LOOP_CAP,
    Digraph,
    _check_candidate,
    _tarjan,
    dependency_graph,
    enumerate_loops,
    is_loop,
    is_strongly_connected,
    is_trivial_loop,
    loops_of_graph,
    sccs,
)
from .errors import (
    EmptySubset,
    NotHeadCycleFree,
    NotNondisjunctive,
    NotNontrivialLoop,
    NotSubset,
)
from .program import AtomSet, Program


def _outbound(rules, z, rest) -> bool:
    for r in rules:
        h, b = r.head, r.pos_body
        if (
            not h.isdisjoint(z)
            and not b.isdisjoint(rest)
            and h.isdisjoint(rest)
            and b.isdisjoint(z)
        ):
            return True
    return False


def is_outbound(program: Program, subset, whole) -> bool:
    """Some rule has head meeting ``Z``, positive body meeting ``Y - Z``,
    head missing ``Y - Z`` and positive body missing ``Z``."""
    subset, whole = AtomSet(subset), AtomSet(whole)
    if not subset:
        raise EmptySubset("subset is empty")
    if not subset <= whole:
        raise NotSubset(f"{subset} is not a subset of {whole}")
    return _outbound(program.rules, subset, whole - subset)


def non_outbound_subset(program: Program, candidate) -> Optional[AtomSet]:
    """Smallest (then lexicographically first) nonempty proper subset of
    ``candidate`` that is not outbound in it, or None if there is none."""
    candidate = AtomSet(candidate)
    # only rules with a head atom inside the candidate can witness outboundness
    rules = [r for r in program.rules if not r.head.isdisjoint(candidate) and r.pos_body]
    for z in candidate.subsets(proper=True):
        if not _outbound(rules, z, candidate - z):
            return z
    return None


def is_elementary_bruteforce(program: Program, candidate) -> bool:
    candidate = _check_candidate(program, candidate)
    return non_outbound_subset(program, candidate) is None


def is_elementary_loops_only(program: Program, candidate) -> bool:
    """Elementariness quantifying only over loops strictly inside ``candidate``."""
    candidate = _check_candidate(program, candidate)
    inside = dependency_graph(program).induced(candidate)
    for loop in loops_of_graph(inside, cap=2 ** len(candidate)):
        if loop != candidate and not _outbound(program.rules, loop, candidate - loop):
            return False
    return True


@dataclass(frozen=True)
class ElementarySubgraphTrace:
    """Edge sets of the bottom-up construction, ``levels[0]`` empty and
    ``levels[-1]`` the fixpoint."""

    vertices: AtomSet
    levels: tuple

    @property
    def final(self) -> Digraph:
        return Digraph(self.vertices, self.levels[-1])

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "levels": [[list(e) for e in sorted(level)] for level in self.levels],
            "final": self.final.to_dict(),
            "strongly_connected": is_strongly_connected(self.final),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self) -> str:
        return "".join(
            Digraph(self.vertices, level).to_dot(f"level{i}") for i, level in enumerate(self.levels)
        )


def is_head_cycle_free(program: Program) -> bool:
    """No rule has two head atoms inside one loop; checking SCCs suffices."""
    component = {}
    for i, comp in enumerate(sccs(dependency_graph(program))):
        for a in comp:
            component[a] = i
    for r in program.rules:
        ids = [component[a] for a in r.head]
        if len(ids) != len(set(ids)):
            return False
    return True


def _require_fast_applicable(program: Program):
    if not program.is_nondisjunctive and not is_head_cycle_free(program):
        raise NotHeadCycleFree("the elementary subgraph test needs a nondisjunctive or head-cycle-free program")


def elementary_subgraph(program: Program, candidate) -> ElementarySubgraphTrace:
    candidate = _check_candidate(program, candidate)
    _require_fast_applicable(program)
    # (head atoms in Y, body atoms in Y) per rule; rules with either side empty add nothing
    parts = []
    for r in program.rules:
        h, b = r.head & candidate, r.pos_body & candidate
        if h and b:
            parts.append((sorted(h), sorted(b)))
    vertices = sorted(candidate)
    edges: set = set()
    levels = [frozenset()]
    while True:
        succ = {v: [] for v in vertices}
        for u, v in edges:
            succ[u].append(v)
        comp_of = {}
        for i, comp in enumerate(_tarjan(vertices, succ.__getitem__)):
            for a in comp:
                comp_of[a] = i
        added = set()
        for heads, body in parts:
            if len({comp_of[b] for b in body}) == 1:
                added.update((a, b) for a in heads for b in body)
        added -= edges
        if not added:
            break
        edges |= added
        levels.append(frozenset(edges))
    return ElementarySubgraphTrace(candidate, tuple(levels))


def is_elementary_fast(program: Program, candidate) -> bool:
    """Strong connectivity of the elementary subgraph; polynomial time."""
    return is_strongly_connected(elementary_subgraph(program, candidate).final)


def fast_applicable(program: Program) -> bool:
    return program.is_nondisjunctive or is_head_cycle_free(program)


def is_elementary(program: Program, candidate) -> bool:
    """Dispatch to the polynomial test when it applies, else the subset sweep."""
    if fast_applicable(program):
        return is_elementary_fast(program, candidate)
    return is_elementary_bruteforce(program, candidate)


def enumerate_elementary_sets(program: Program, cap: int = DEFAULT_LOOP_CAP) -> list[AtomSet]:
    """Elementary sets in canonical order.  Every elementary set is a loop,
    so candidates come from loop enumeration (``cap`` bounds that)."""
    decide = is_elementary_fast if fast_applicable(program) else is_elementary_bruteforce
    return [l for l in enumerate_loops(program, cap) if decide(program, l)]


def _support_rules(program: Program, loop, external: bool) -> set:
    """Indices of rules with head in ``loop``; ``external`` selects those whose
    positive body misses the loop (R-), otherwise those meeting it (R+)."""
    return {
        i
        for i, r in enumerate(program.rules)
        if not r.head.isdisjoint(loop) and r.pos_body.isdisjoint(loop) == external
    }


def is_gs_elementary_loop(program: Program, loop) -> bool:
    """The loop-based notion compared against elementary sets: for every
    non-trivial proper subloop ``L'``, some rule of ``R-(L')`` is in ``R+(L)``."""
    if not program.is_nondisjunctive:
        raise NotNondisjunctive("GS-elementary loops are defined for nondisjunctive programs")
    loop = _check_candidate(program, loop)
    if not is_loop(program, loop) or is_trivial_loop(program, loop):
        raise NotNontrivialLoop(f"{loop} is not a non-trivial loop")
    r_plus = _support_rules(program, loop, external=False)
    inside = dependency_graph(program).induced(loop)
    for inner in loops_of_graph(inside, cap=2 ** len(loop)):
        if inner == loop or is_trivial_loop(program, inner):
            continue
        if not _support_rules(program, inner, external=True) & r_plus:
            return False
    return True
