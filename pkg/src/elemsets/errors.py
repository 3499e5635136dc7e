"""Exception hierarchy shared by all modules."""


class ElemSetsError(Exception):
    """Base class for every error raised by this package."""


class InvalidAtom(ElemSetsError, ValueError):
    pass


class ModeViolation(ElemSetsError, ValueError):
    """A rule does not fit the requested program mode."""


class EmptyHeadInNondisjunctive(ModeViolation):
    pass


class ParseError(ElemSetsError, ValueError):
    """Syntax error with a 1-based line/column of the offending character."""

    def __init__(self, message, line=1, column=1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class EmptyCandidate(ElemSetsError, ValueError):
    pass


class UnknownAtom(ElemSetsError, ValueError):
    pass


class CapExceeded(ElemSetsError, RuntimeError):
    pass


class NotALoop(ElemSetsError, ValueError):
    pass


class NotHeadCycleFree(ElemSetsError, ValueError):
    pass


class NotNondisjunctive(ElemSetsError, ValueError):
    pass


class NotNontrivialLoop(ElemSetsError, ValueError):
    pass


class EmptySubset(ElemSetsError, ValueError):
    pass


class NotSubset(ElemSetsError, ValueError):
    pass


class EmptyTarget(ElemSetsError, ValueError):
    pass


class UniverseTooLarge(ElemSetsError, ValueError):
    pass


class GenerationExhausted(ElemSetsError, RuntimeError):
    pass


class ClauseTooLong(ElemSetsError, ValueError):
    pass


class TooManyVariables(ElemSetsError, ValueError):
    pass


class TooLarge(ElemSetsError, ValueError):
    pass
