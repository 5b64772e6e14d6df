"""Exception types shared across the toolkit."""


class IWContractError(Exception):
    """Base class for all toolkit errors."""


class FieldModeMismatch(IWContractError):
    """Arithmetic between scalars of different field modes."""


class SingularMatrixError(IWContractError):
    """A matrix required to be invertible has zero determinant."""


class NoLimitError(IWContractError):
    """The limit of an epsilon-rational function at zero does not exist."""


class UnknownAlgebraError(KeyError, IWContractError):
    """Catalog lookup for a name that is not shipped."""


class AmbiguousMatchError(IWContractError):
    """Two catalog candidates share a fingerprint."""


class DimensionMismatch(IWContractError):
    """Operands have incompatible dimensions."""


class OrderMismatch(IWContractError):
    """Polynomials built over different variable or monomial orders."""


class UnknownFixtureError(KeyError, IWContractError):
    """Fixture lookup for an id that is not shipped."""


class BudgetExceeded(IWContractError):
    """A configured pair/step budget was hit; the result is inconclusive."""


class StructureMismatch(IWContractError):
    """A certificate or certification mode applied to an ideal of the wrong shape."""
