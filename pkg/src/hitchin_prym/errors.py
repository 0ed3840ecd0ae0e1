"""Exception types shared across the package."""


class GroupSpecError(ValueError):
    """Invalid Cartan type or group specification string."""


class LatticeError(ValueError):
    """Invalid character-lattice specification."""


class GenusError(ValueError):
    """Curve genus outside the supported range (genus must be >= 2)."""


class EnumerationUnavailableError(RuntimeError):
    """The operation needs a fully enumerated Weyl group and none is present."""


class StrategyUnavailableError(RuntimeError):
    """No evaluation strategy is available for a class-function computation."""


class VerificationError(RuntimeError):
    """The closed-form and enumeration strategies disagree."""
