"""Exception types shared across the package."""


class VisactionError(Exception):
    """Base class for all package errors."""


class NonRationalSpectrum(VisactionError):
    """A characteristic polynomial has an irreducible factor of degree >= 2."""


class NotDiagonalizable(VisactionError):
    """Eigenspace dimensions do not sum to the ambient dimension."""


class NotClosedUnderBracket(VisactionError):
    """A candidate basis is not bracket-closed; carries a witness pair."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInvolution(VisactionError):
    """A linear map expected to square to the identity does not."""


class NotAutomorphism(VisactionError):
    """A linear map fails to preserve brackets or the algebra span."""


class NotCartan(VisactionError):
    """Killing-signature test for a Cartan involution failed."""


class NotHermitianType(VisactionError):
    """The center of the maximal compact subalgebra is trivial."""


class NotTypeStable(VisactionError):
    """An involution sends the characteristic element outside {Z, -Z}."""


class UnsupportedFamily(VisactionError):
    """Requested algebra family has no matrix model in this package."""


class UnsupportedRow(VisactionError):
    """Catalog row is data-only (exceptional) and cannot be constructed."""


class ParameterOutOfRange(VisactionError):
    """Family parameters violate the documented constraints."""


class FingerprintMismatch(VisactionError):
    """A constructed fixed algebra does not match its expected fingerprint."""


class RankMismatch(VisactionError):
    """Computed rank differs from the catalog's closed form."""

    def __init__(self, message, computed=None, expected=None):
        super().__init__(message)
        self.computed = computed
        self.expected = expected


class ConditionFailed(VisactionError):
    """One of a named list of exact conditions failed; carries which one."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class DegenerateFunctional(VisactionError):
    """A linear functional vanishes on some restricted root."""


class IwasawaNonConvergence(VisactionError):
    """Numeric triangular-decomposition refinement did not reach tolerance."""


class DatasetError(VisactionError):
    """The involution catalog file is missing or malformed."""
