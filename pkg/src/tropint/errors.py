"""Exception hierarchy shared across the package.

``InvalidInput`` covers malformed documents and violated preconditions
(CLI exit status 2); ``InvariantViolation`` marks an internal contract
that broke loudly and should never be silenced (CLI exit status 3).
"""


class TropintError(Exception):
    pass


class InvalidInput(TropintError):
    pass


class InvariantViolation(TropintError):
    pass
