"""Exception hierarchy shared by every module."""


class BettiSplitError(Exception):
    kind = "error"


class InputError(BettiSplitError, ValueError):
    """Malformed input: unknown vertex, bad edge, unparsable file."""

    kind = "input"


class PreconditionError(BettiSplitError, ValueError):
    """A formula was called outside its hypotheses.

    ``witness`` carries whatever object demonstrates the violation
    (a cycle, a leafless subcomplex, ...).
    """

    kind = "precondition"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceError(BettiSplitError, RuntimeError):
    kind = "resource"
