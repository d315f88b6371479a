"""Exception hierarchy shared by all modules."""


class TreesetsError(Exception):
    """Base class for every error raised by this package."""


class InputError(TreesetsError, ValueError):
    """Malformed input: unknown symbol, empty source, bad syntax."""


class HorizonError(TreesetsError):
    """A query needs words longer than the factor set stores."""


class NotAFactorError(TreesetsError, KeyError):
    """The queried word is not in the factor set."""


class NonExpandingError(TreesetsError):
    """A morphism has no infinite fixpoint from the requested seed."""


class CodeRoleError(TreesetsError):
    """The word set lacks the prefix/suffix/bifix property required."""


class ContainmentError(TreesetsError):
    """A code is not contained in the factor set it is checked against."""


class PreconditionError(TreesetsError):
    """An automaton or graph does not satisfy an operation's precondition."""


class ConsistencyError(TreesetsError):
    """Induced transitions of a quotient automaton disagree.

    ``witness`` is a ``(p, q, letter)`` triple of equivalent states whose
    successors under ``letter`` fall in different classes.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
