import pytest
from hypothesis import given, strategies as st

from elemsets.errors import ModeViolation, ParseError
from elemsets.parser import parse_atomset, parse_program, render_program
from elemsets.program import AtomSet, Program, rule

from helpers import S, any_programs


def test_parse_pi1(pi1):
    p = parse_program("p :- not s. p :- r. q :- r. r :- p, q.", "nondisjunctive")
    assert p == pi1
    assert p.rules[0] == rule(["p"], neg=["s"])
    assert p.rules[3] == rule(["r"], ["p", "q"])


def test_parse_empty():
    assert parse_program("") == Program()
    assert parse_program("  % only a comment\n") == Program()


def test_parse_program6(program6):
    p = parse_program("p ; q :- r. p ; r :- q. q ; r :- p.", "disjunctive")
    assert p == program6
    assert p.rules[0] == rule(["p", "q"], ["r"])


def test_render_pi1(pi1):
    assert render_program(pi1) == "p :- not s.\np :- r.\nq :- r.\nr :- p, q.\n"


def test_render_empty():
    assert render_program(Program()) == ""


def test_render_program5(program5):
    assert render_program(program5) == "p :- q, not r.\nq :- p, not r.\n"


def test_render_all_literal_kinds():
    p = parse_program("b ; a :- c, not d, not not e.  :- a.  f.  .")
    assert render_program(p) == "a ; b :- c, not d, not not e.\n:- a.\nf.\n.\n"


def test_double_negation_is_disjunctive_only():
    with pytest.raises(ParseError) as e:
        parse_program("p :- not not q.", "nondisjunctive")
    assert (e.value.line, e.value.column) == (1, 10)
    assert parse_program("p :- not not q.").rules[0].nneg_body == S("q")


def test_mode_violation_delegated():
    with pytest.raises(ModeViolation):
        parse_program("p ; q :- r.", "nondisjunctive")


def test_uppercase_identifier_rejected():
    with pytest.raises(ParseError) as e:
        parse_program("p :- Q.")
    assert (e.value.line, e.value.column) == (1, 6)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("p :- q", 1, 7),
        ("p :- .", 1, 6),
        ("p q.", 1, 3),
        ("p :- q,\n  , r.", 2, 3),
        ("p ; :- q.", 1, 5),
        ("{p}.", 1, 1),
    ],
)
def test_syntax_error_positions(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_program(text)
    assert (e.value.line, e.value.column) == (line, column)


def test_comments_and_trailing_whitespace():
    p = parse_program("p. % fact\n% whole line\nq :- p.   \n\n% end")
    assert render_program(p) == "p.\nq :- p.\n"


@given(any_programs)
def test_render_parse_round_trip(p):
    text = render_program(p)
    assert parse_program(text) == p
    assert render_program(parse_program(text)) == text


@given(any_programs, st.data())
def test_injected_illegal_character_is_located(p, data):
    text = render_program(p)
    if not text:
        return
    pos = data.draw(st.integers(0, len(text)))
    if text[pos - 1 : pos + 1] == ":-":
        pos -= 1  # splitting ':-' would fail at the ':' instead
    ch = data.draw(st.sampled_from("#!$@&*?"))
    broken = text[:pos] + ch + text[pos:]
    line = broken.count("\n", 0, pos) + 1
    column = pos - (broken.rfind("\n", 0, pos) + 1) + 1
    with pytest.raises(ParseError) as e:
        parse_program(broken)
    assert (e.value.line, e.value.column) == (line, column)


@pytest.mark.parametrize(
    "text, expected",
    [("p,q,r", S("p", "q", "r")), ("{}", AtomSet()), ("", AtomSet()),
     ("r, p, q", S("p", "q", "r")), ("{p, q}", S("p", "q")), (" { } ", AtomSet())],
)
def test_parse_atomset(text, expected):
    s = parse_atomset(text)
    assert s == expected
    assert list(s) == sorted(expected)


@pytest.mark.parametrize("text", ["p,", ",p", "p q", "{p", "p}", "P", "p;q"])
def test_parse_atomset_errors(text):
    with pytest.raises(ParseError):
        parse_atomset(text)
