"""Exception hierarchy shared by every module."""


class SrgPathsError(ValueError):
    """Base class for all errors raised by srgpaths."""


class InvalidVertex(SrgPathsError):
    pass


class TooLarge(SrgPathsError):
    pass


class NotSrg(SrgPathsError):
    pass


class InfeasibleResult(SrgPathsError):
    pass


class BadOrder(SrgPathsError):
    pass


class BadIndex(SrgPathsError):
    pass


class ImprimitiveInput(SrgPathsError):
    pass


class BelowThreshold(SrgPathsError):
    """The requested pattern provably does not occur at this order."""


class ProofViolation(SrgPathsError):
    """A counting step of a constructive argument found an empty candidate set.

    Never raised on valid input; the tests exist to show it is unreachable.
    """


class SearchTimeout(SrgPathsError):
    pass


class MalformedGraph6(SrgPathsError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class NotLatin(SrgPathsError):
    pass


class Ragged(SrgPathsError):
    pass


class NotSts(SrgPathsError):
    pass
