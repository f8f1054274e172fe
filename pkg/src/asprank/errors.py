"""Exception types shared across the package."""


class InvalidParameters(ValueError):
    """Raised for (p, d, g, s, r) combinations outside an operation's domain."""


class FieldSizeError(ValueError):
    """A requested finite field exceeds the configured size bound."""


class DegenerateCoverError(ValueError):
    """The rational function is constant, so no Artin-Schreier cover arises."""


class DisconnectedCoverError(DegenerateCoverError):
    """f = delta^p - delta + c: standard-form reduction removes every pole."""


class OracleError(RuntimeError):
    """Point counts are inconsistent with a curve of the expected genus."""


class EdgeTypeError(RuntimeError):
    """A covering relation is not a single-entry split into 2 or 3 parts."""


class DeformationHypothesisError(ValueError):
    """The (p, e1, e2) triple does not satisfy the deformation hypotheses."""


class NoSuitableSpecializationError(RuntimeError):
    """No parameter value in the available fields exhibits the generic fibre."""
