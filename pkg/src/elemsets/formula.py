"""Propositional formulas housing external support and loop formulas.

Formulas are kept exactly as constructed: the only normalization is that
an empty conjunction is ``true`` and an empty disjunction is ``false``.
Rendering uses ``&``, ``|``, ``-``, ``->``, ``true`` and ``false``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    args: tuple


@dataclass(frozen=True)
class Or:
    args: tuple


@dataclass(frozen=True)
class Implies:
    antecedent: "Formula"
    consequent: "Formula"


Formula = Union[Top, Bottom, Var, Not, And, Or, Implies]

TRUE = Top()
FALSE = Bottom()


def conj(args: Iterable[Formula]) -> Formula:
    args = tuple(args)
    return And(args) if args else TRUE


def disj(args: Iterable[Formula]) -> Formula:
    args = tuple(args)
    return Or(args) if args else FALSE


def evaluate(formula: Formula, interpretation) -> bool:
    """Classical truth value; atoms outside ``interpretation`` are false."""
    if isinstance(formula, Var):
        return formula.name in interpretation
    if isinstance(formula, Not):
        return not evaluate(formula.arg, interpretation)
    if isinstance(formula, And):
        return all(evaluate(a, interpretation) for a in formula.args)
    if isinstance(formula, Or):
        return any(evaluate(a, interpretation) for a in formula.args)
    if isinstance(formula, Implies):
        return not evaluate(formula.antecedent, interpretation) or evaluate(
            formula.consequent, interpretation
        )
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    raise TypeError(f"not a formula: {formula!r}")


def atoms_in(formula: Formula) -> frozenset:
    if isinstance(formula, Var):
        return frozenset([formula.name])
    if isinstance(formula, Not):
        return atoms_in(formula.arg)
    if isinstance(formula, (And, Or)):
        return frozenset().union(*(atoms_in(a) for a in formula.args))
    if isinstance(formula, Implies):
        return atoms_in(formula.antecedent) | atoms_in(formula.consequent)
    return frozenset()


# binding strength, loosest first
_IMPLIES, _OR, _AND, _NOT, _ATOM = range(5)


def _render(f: Formula) -> tuple[str, int]:
    if isinstance(f, Var):
        return f.name, _ATOM
    if isinstance(f, Top) or (isinstance(f, And) and not f.args):
        return "true", _ATOM
    if isinstance(f, Bottom) or (isinstance(f, Or) and not f.args):
        return "false", _ATOM
    if isinstance(f, Not):
        text, prec = _render(f.arg)
        return "-" + (text if prec >= _NOT else f"({text})"), _NOT
    if isinstance(f, (And, Or)):
        if len(f.args) == 1:
            return _render(f.args[0])
        prec, sep = (_AND, " & ") if isinstance(f, And) else (_OR, " | ")
        parts = []
        for a in f.args:
            text, p = _render(a)
            parts.append(text if p >= prec else f"({text})")
        return sep.join(parts), prec
    if isinstance(f, Implies):
        left, lp = _render(f.antecedent)
        right, rp = _render(f.consequent)
        if lp <= _IMPLIES:
            left = f"({left})"
        return f"{left} -> {right}", _IMPLIES
    raise TypeError(f"not a formula: {f!r}")


def render_formula(formula: Formula) -> str:
    return _render(formula)[0]
