"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised on malformed expression text. Carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(ValueError):
    """Raised when an operation's mathematical precondition is violated."""


class OutOfScopeError(ValueError):
    """Raised for inputs outside the certifier's mass hypotheses."""


class TwistedRootInfeasible(Exception):
    """No twisted root exists for the requested divisor.

    Carries an :class:`~weylalg.centralizer.InfeasibilityCertificate` so the
    failure can be re-checked independently.
    """

    def __init__(self, certificate):
        super().__init__(str(certificate))
        self.certificate = certificate
