"""Exception hierarchy shared across the package."""


class HyperconicError(Exception):
    """Base class for errors raised by hyperconic."""


class SignatureMismatchError(HyperconicError, ValueError):
    pass


class DegenerateConfigurationError(HyperconicError, ArithmeticError):
    """Input points do not determine a unique hyperconic (wedge vanishes)."""


class AmbiguousFitError(HyperconicError, ArithmeticError):
    """The incidence system has a nullspace of dimension > 1."""


class DivergenceError(HyperconicError, ArithmeticError):
    def __init__(self, epoch, message=None):
        self.epoch = epoch
        super().__init__(message or f"training diverged at epoch {epoch} (non-finite loss)")
