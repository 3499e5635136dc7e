"""Positive dependency graphs, strongly connected components and loops."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import CapExceeded, EmptyCandidate, NotALoop, UnknownAtom
from .program import AtomSet, Program, canonical

DEFAULT_LOOP_CAP = 10_000


@dataclass(frozen=True)
class Digraph:
    vertices: AtomSet
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "vertices", AtomSet(self.vertices))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge {(u, v)} leaves the vertex set")

    @cached_property
    def successors(self) -> dict:
        succ = {v: [] for v in self.vertices}
        for u, v in sorted(self.edges):
            succ[u].append(v)
        return succ

    def induced(self, subset) -> "Digraph":
        subset = AtomSet(subset)
        return Digraph(subset, frozenset((u, v) for u, v in self.edges if u in subset and v in subset))

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {u} -> {v};" for u, v in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"


def dependency_graph(program: Program) -> Digraph:
    edges = {(a, b) for r in program.rules for a in r.head for b in r.pos_body}
    return Digraph(program.atoms, frozenset(edges))


def _tarjan(vertices, successors) -> list[list]:
    """Iterative Tarjan; linear in vertices plus edges."""
    index, low, on_stack = {}, {}, set()
    stack, components = [], []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(successors(root)))]
        while work:
            v, it = work[-1]
            descended = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(successors(w))))
                    descended = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
    return components


def sccs(graph: Digraph) -> list[AtomSet]:
    """Strongly connected components, each sorted, listed by smallest member."""
    comps = _tarjan(graph.vertices, graph.successors.__getitem__)
    return sorted((AtomSet(c) for c in comps), key=lambda c: min(c))


def is_strongly_connected(graph: Digraph) -> bool:
    return len(graph.vertices) > 0 and len(sccs(graph)) == 1


def _check_candidate(program: Program, candidate) -> AtomSet:
    candidate = AtomSet(candidate)
    if not candidate:
        raise EmptyCandidate("candidate set is empty")
    unknown = candidate - program.atoms
    if unknown:
        raise UnknownAtom(f"atoms {sorted(unknown)} do not occur in the program")
    return candidate


def is_loop(program: Program, candidate) -> bool:
    """Strong connectivity of the dependency subgraph induced by ``candidate``."""
    candidate = _check_candidate(program, candidate)
    return is_strongly_connected(dependency_graph(program).induced(candidate))


def is_loop_alt(program: Program, candidate) -> bool:
    """Loop test without a graph: every nonempty proper subset ``Z`` has a rule
    whose head meets ``Z`` and whose positive body meets the rest."""
    candidate = _check_candidate(program, candidate)
    for z in candidate.subsets(proper=True):
        rest = candidate - z
        if not any(
            not r.head.isdisjoint(z) and not r.pos_body.isdisjoint(rest) for r in program.rules
        ):
            return False
    return True


def loops_of_graph(graph: Digraph, cap: int = DEFAULT_LOOP_CAP) -> list[AtomSet]:
    """All vertex sets inducing a strongly connected subgraph, canonical order.

    Each SCC of a vertex set is a loop; every smaller loop inside it avoids
    some vertex, so recursing on the SCC minus one vertex at a time finds it.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    succ = graph.successors
    found: set = set()
    seen: set = set()
    pending = [frozenset(graph.vertices)]
    while pending:
        vs = pending.pop()
        if vs in seen:
            continue
        seen.add(vs)
        for comp in _tarjan(sorted(vs), lambda v: [w for w in succ[v] if w in vs]):
            comp = frozenset(comp)
            if comp not in found:
                found.add(comp)
                if len(found) > cap:
                    raise CapExceeded(f"more than {cap} loops; raise the cap to enumerate them all")
            if len(comp) > 1:
                pending.extend(comp - {v} for v in comp)
    return canonical(found)


def enumerate_loops(program: Program, cap: int = DEFAULT_LOOP_CAP) -> list[AtomSet]:
    """All loops, singletons included, ordered by size then lexicographically."""
    return loops_of_graph(dependency_graph(program), cap)


def is_trivial_loop(program: Program, candidate) -> bool:
    """A singleton loop whose atom has no self-edge."""
    candidate = _check_candidate(program, candidate)
    if not is_loop(program, candidate):
        raise NotALoop(f"{candidate} is not a loop")
    if len(candidate) != 1:
        return False
    (a,) = candidate
    return not any(a in r.head and a in r.pos_body for r in program.rules)
