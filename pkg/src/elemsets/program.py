"""Ground rules, programs and atom sets.

A rule ``A <- B, F`` is stored as four atom sets: the head ``A``, the
positive body ``B``, the atoms under ``not`` and the atoms under
``not not``.  A nondisjunctive rule has exactly one head atom and no
double negation.
"""
from __future__ import annotations

import re
import sys
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EmptyHeadInNondisjunctive, InvalidAtom, ModeViolation

ATOM_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


class Mode(str, Enum):
    NONDISJUNCTIVE = "nondisjunctive"
    DISJUNCTIVE = "disjunctive"


def atom(name: str) -> str:
    """Validate ``name`` and return the interned atom."""
    if not isinstance(name, str) or not ATOM_PATTERN.match(name) or name == "not":
        raise InvalidAtom(f"invalid atom name {name!r}")
    return sys.intern(name)


class AtomSet(frozenset):
    """Immutable set of atoms whose iteration order is lexicographic."""

    __slots__ = ()

    def __new__(cls, atoms: Iterable[str] = ()):
        if type(atoms) is cls:
            return atoms
        if isinstance(atoms, str):
            raise TypeError("AtomSet expects an iterable of atom names, not a string")
        return super().__new__(cls, (atom(a) for a in atoms))

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(frozenset.__iter__(self)))

    def __repr__(self) -> str:
        return "AtomSet({%s})" % ", ".join(repr(a) for a in self)

    def __str__(self) -> str:
        return "{%s}" % ", ".join(self)

    def key(self) -> tuple:
        """Canonical sort key: by size, then lexicographically."""
        return (len(self), tuple(self))

    def subsets(self, proper: bool = False, nonempty: bool = True) -> Iterator["AtomSet"]:
        """Yield subsets in increasing cardinality, lexicographic within a size."""
        members = tuple(self)
        lo = 1 if nonempty else 0
        hi = len(members) - 1 if proper else len(members)
        for size in range(lo, hi + 1):
            for combo in combinations(members, size):
                yield AtomSet(combo)


EMPTY = AtomSet()


def canonical(sets: Iterable[Iterable[str]]) -> list[AtomSet]:
    """Deduplicate and sort a collection of atom sets canonically."""
    return sorted({AtomSet(s) for s in sets}, key=AtomSet.key)


@dataclass(frozen=True)
class Rule:
    head: AtomSet = EMPTY
    pos_body: AtomSet = EMPTY
    neg_body: AtomSet = EMPTY
    nneg_body: AtomSet = EMPTY

    def __post_init__(self):
        for name in ("head", "pos_body", "neg_body", "nneg_body"):
            object.__setattr__(self, name, AtomSet(getattr(self, name)))

    @property
    def atoms(self) -> AtomSet:
        return AtomSet(self.head | self.pos_body | self.neg_body | self.nneg_body)

    @property
    def is_nondisjunctive(self) -> bool:
        return len(self.head) == 1 and not self.nneg_body

    def body_holds(self, interpretation) -> bool:
        """``X |= B, F``: positive body true, ``not`` atoms false, ``not not`` atoms true."""
        return (
            self.pos_body <= interpretation
            and self.neg_body.isdisjoint(interpretation)
            and self.nneg_body <= interpretation
        )

    def satisfied_by(self, interpretation) -> bool:
        return not self.body_holds(interpretation) or not self.head.isdisjoint(interpretation)

    def __str__(self) -> str:
        head = " ; ".join(self.head)
        body = (
            list(self.pos_body)
            + ["not " + a for a in self.neg_body]
            + ["not not " + a for a in self.nneg_body]
        )
        if not body:
            return f"{head}."
        if head:
            return f"{head} :- {', '.join(body)}."
        return f":- {', '.join(body)}."


def rule(head=(), pos=(), neg=(), nneg=()) -> Rule:
    """Shorthand constructor taking any iterables of atom names."""
    return Rule(AtomSet(head), AtomSet(pos), AtomSet(neg), AtomSet(nneg))


@dataclass(frozen=True)
class Program:
    rules: tuple = ()
    atoms: AtomSet = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        universe = frozenset().union(*(r.atoms for r in self.rules))
        object.__setattr__(self, "atoms", AtomSet(universe))

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __str__(self) -> str:
        return "".join(f"{r}\n" for r in self.rules)

    @cached_property
    def mode(self) -> Mode:
        return classify(self)

    @property
    def is_nondisjunctive(self) -> bool:
        return self.mode is Mode.NONDISJUNCTIVE

    def subprogram(self, keep) -> "Program":
        """Rules satisfying the predicate ``keep``, order preserved."""
        return Program(tuple(r for r in self.rules if keep(r)))


def make_program(rules: Iterable[Rule], mode: Mode | str = Mode.DISJUNCTIVE) -> Program:
    """Validate ``rules`` against ``mode`` and build a program."""
    mode = Mode(mode)
    rules = tuple(rules)
    if mode is Mode.NONDISJUNCTIVE:
        for r in rules:
            if not r.head:
                raise EmptyHeadInNondisjunctive(f"rule {r} has an empty head")
            if len(r.head) > 1:
                raise ModeViolation(f"rule {r} has a disjunctive head")
            if r.nneg_body:
                raise ModeViolation(f"rule {r} uses double negation")
    return Program(rules)


def atoms_of(program: Program) -> AtomSet:
    return program.atoms


def classify(program: Program) -> Mode:
    if all(r.is_nondisjunctive for r in program.rules):
        return Mode.NONDISJUNCTIVE
    return Mode.DISJUNCTIVE
