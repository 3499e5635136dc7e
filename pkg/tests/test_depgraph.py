import pytest
from hypothesis import given, settings

from elemsets.depgraph import (
    Digraph, dependency_graph, enumerate_loops, is_loop, is_loop_alt, is_strongly_connected,
    is_trivial_loop, loops_of_graph, sccs,
)
from elemsets.errors import CapExceeded, EmptyCandidate, NotALoop, UnknownAtom
from elemsets.parser import parse_program
from elemsets.program import Program

from helpers import S, any_programs, sccs_ref, strongly_connected_ref, subsets


def test_dependency_graph_pi1(pi1):
    g = dependency_graph(pi1)
    assert g.vertices == S("p", "q", "r", "s")
    assert g.edges == {("p", "r"), ("q", "r"), ("r", "p"), ("r", "q")}


def test_dependency_graph_program6(program6):
    assert dependency_graph(program6).edges == {
        ("p", "r"), ("q", "r"), ("p", "q"), ("r", "q"), ("q", "p"), ("r", "p"),
    }


def test_empty_program_graph():
    g = dependency_graph(Program())
    assert g.vertices == S() and g.edges == frozenset()
    assert enumerate_loops(Program()) == []


def test_negative_bodies_add_no_edges():
    g = dependency_graph(parse_program("p :- not q, not not r."))
    assert g.edges == frozenset()


def test_digraph_rejects_dangling_edges():
    with pytest.raises(ValueError):
        Digraph(S("a"), {("a", "b")})


def test_sccs_examples(pi1):
    assert sccs(dependency_graph(pi1)) == [S("p", "q", "r"), S("s")]
    assert sccs(Digraph(S("a", "b"))) == [S("a"), S("b")]
    fig1 = Digraph(S("p", "q", "r"), {("p", "r"), ("q", "r")})
    assert sccs(fig1) == [S("p"), S("q"), S("r")]


def test_graph_serialization(pi1):
    g = dependency_graph(pi1)
    assert g.to_dict() == {
        "vertices": ["p", "q", "r", "s"],
        "edges": [["p", "r"], ["q", "r"], ["r", "p"], ["r", "q"]],
    }
    dot = g.to_dot()
    assert dot.startswith("digraph G {") and "  r -> p;" in dot


def test_is_loop_examples(pi1):
    assert is_loop(pi1, S("p", "r"))
    assert not is_loop(pi1, S("p", "q"))
    assert is_loop(pi1, S("s"))
    assert is_loop_alt(pi1, S("p", "q", "r"))
    assert not is_loop_alt(pi1, S("q", "s"))
    assert is_loop_alt(pi1, S("p"))


def test_is_loop_errors(pi1):
    with pytest.raises(EmptyCandidate):
        is_loop(pi1, S())
    with pytest.raises(UnknownAtom):
        is_loop(pi1, S("p", "z"))
    with pytest.raises(EmptyCandidate):
        is_loop_alt(pi1, S())


def test_enumerate_loops_pi1(pi1):
    assert enumerate_loops(pi1, 100) == [
        S("p"), S("q"), S("r"), S("s"), S("p", "r"), S("q", "r"), S("p", "q", "r"),
    ]


def test_enumerate_loops_program6(program6):
    assert enumerate_loops(program6, 100) == [
        S("p"), S("q"), S("r"), S("p", "q"), S("p", "r"), S("q", "r"), S("p", "q", "r"),
    ]


def test_enumerate_loops_cap(pi1):
    with pytest.raises(CapExceeded):
        enumerate_loops(pi1, 6)
    assert len(enumerate_loops(pi1, 7)) == 7


def test_trivial_loops(pi1):
    assert is_trivial_loop(pi1, S("p"))
    assert not is_trivial_loop(pi1, S("p", "r"))
    assert not is_trivial_loop(parse_program("p :- p."), S("p"))
    with pytest.raises(NotALoop):
        is_trivial_loop(pi1, S("p", "q"))


@given(any_programs)
def test_sccs_match_reference(p):
    g = dependency_graph(p)
    got = sccs(g)
    assert set(got) == sccs_ref(g.vertices, g.edges)
    assert [min(c) for c in got] == sorted(min(c) for c in got)
    assert is_strongly_connected(g) == strongly_connected_ref(g.vertices, g.edges)


@given(any_programs)
def test_loop_definitions_agree(p):
    for y in subsets(p.atoms):
        assert is_loop(p, y) == is_loop_alt(p, y)


@settings(max_examples=50)
@given(any_programs)
def test_enumeration_closed_under_definition(p):
    loops = enumerate_loops(p)
    assert len(loops) == len(set(loops))
    assert loops == sorted(loops, key=lambda s: (len(s), tuple(s)))
    expected = [y for y in subsets(p.atoms) if strongly_connected_ref(y, dependency_graph(p).edges)]
    assert set(loops) == set(expected)


@given(any_programs)
def test_sccs_are_the_maximal_loops(p):
    loops = enumerate_loops(p)
    maximal = {l for l in loops if not any(l < o for o in loops)}
    assert maximal == set(sccs(dependency_graph(p)))


def test_loops_of_graph_on_plain_graph():
    g = Digraph(S("a", "b", "c"), {("a", "b"), ("b", "a"), ("b", "c"), ("c", "b")})
    assert loops_of_graph(g) == [S("a"), S("b"), S("c"), S("a", "b"), S("b", "c"), S("a", "b", "c")]
