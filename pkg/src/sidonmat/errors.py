"""Exception hierarchy shared by the library and the CLI."""


class SidonError(Exception):
    """Base class for every error raised by sidonmat."""


class UsageError(SidonError, ValueError):
    """A precondition on the arguments was violated."""


class ResourceLimitError(SidonError):
    """An enumeration would exceed the configured size cap."""


class ArithmeticOverflow(SidonError, OverflowError):
    """A sum left the checked 64-bit range."""


class IntegrityError(SidonError):
    """An internal consistency check failed.

    On validated inputs this should be impossible; seeing one means either a
    bug or a counterexample to one of the structural theorems the code relies
    on, so it is never swallowed.
    """


class NotGeneralizedSidonError(SidonError):
    """The ground set is not a B_{2h-1,h-1} set; carries the violating witness."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness
