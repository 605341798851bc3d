"""Exception hierarchy shared across the package."""


class SuperberError(Exception):
    """Base class for all library-specific errors."""


# -- scalar ring ------------------------------------------------------------

class GeneratorCountMismatch(SuperberError):
    """Operands live over Grassmann algebras with different generator counts."""


class TooManyGenerators(SuperberError):
    """Requested generator count exceeds the hard cap of 16."""


class NotInvertible(SuperberError):
    """Element has zero body and therefore no inverse."""


class ParityError(SuperberError):
    """A parity-homogeneous value was required but a mixed one was given."""


# -- polynomial ring --------------------------------------------------------

class TableMismatch(SuperberError):
    """Operands are defined over different variable tables."""


class UnknownVariable(SuperberError):
    """Variable name not present in the table."""


class ExponentError(SuperberError):
    """Exponent violates the variable's parity or Laurent flags."""


class NonInvertibleSubstitution(SuperberError):
    """Value substituted into a negative power has no Laurent inverse."""


# -- supermatrices ----------------------------------------------------------

class OddEntry(SuperberError):
    """Determinant requested for a matrix with a non-even entry."""


class NotEvenSupermatrix(SuperberError):
    """Block parities violate the even-supermatrix pattern."""


class BerUndefined(SuperberError):
    """Berezinian undefined: a required block determinant is not invertible."""


# -- spectra and expansions -------------------------------------------------

class SpectrumError(SuperberError):
    """Base class for invalid diagonal spectra."""


class NonInvertibleY(SpectrumError):
    """An odd-block eigenvalue has zero body."""


class UnorderedBodies(SpectrumError):
    """Odd-block eigenvalue bodies are not in increasing magnitude order."""


class DuplicateBodyMagnitude(SpectrumError):
    """Two odd-block eigenvalues share the same body magnitude."""


class NonConvergent(SuperberError):
    """Truncated supertrace failed its geometric decay check."""


# -- delta calculus ---------------------------------------------------------

class DeltaArgumentError(SuperberError):
    """Invalid delta-factor structure (duplicate or non-even argument)."""


class NotFullProduct(SuperberError):
    """Linear substitution requires the full odd-monomial times all-delta product."""


# -- 1|1-form checking ------------------------------------------------------

class NonlinearInEvenArguments(SuperberError):
    """Candidate is not linear in the even-argument components."""


class UnsupportedWitness(SuperberError):
    """No closed-form witness is available for the requested dimension."""


class DescentResidual(SuperberError):
    """Chart substitution left a residual: input is not homogeneous of degree -1."""
