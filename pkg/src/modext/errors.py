"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: invalid input -> 2, guardrail
breaches -> 3, certificate verification failures -> 4.
"""

from __future__ import annotations


class ModextError(Exception):
    """Base class for all toolkit errors."""


class InvalidInput(ModextError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class TooLarge(ModextError):
    """A desk-scale guardrail was exceeded (CLI exit code 3)."""


class NotSimple(InvalidInput):
    """A matroid constructor found rank-zero or parallel atoms."""

    def __init__(self, columns, message=None):
        self.columns = tuple(columns)
        super().__init__(message or f"not simple: offending atoms {list(self.columns)}")


class NotSimpleFrame(NotSimple):
    """A frame matroid would have parallel atoms (repeated identical edges)."""


class NotAFlat(InvalidInput):
    """The given subset is not closed."""


class NotACoatom(InvalidInput):
    """The given flat is not a coatom of the lattice of flats."""


class EmptyFlat(InvalidInput):
    """The operation is undefined for the empty flat."""


class NotModular(InvalidInput):
    """A flat required to be modular failed the rank equation."""


class NotModularCoatom(InvalidInput):
    """A coatom pairing does not exist or is not unique."""


class NotComparable(InvalidInput):
    """Interval endpoints are not ordered in the lattice."""


class SizeMismatch(InvalidInput):
    """Two ground sets that must correspond have different sizes."""


class HasLoops(InvalidInput):
    """The operation requires a loopless gain graph."""


class NoMultiplicativeEmbedding(InvalidInput):
    """The gain group does not embed into the multiplicative group of the field."""


class NoAdditiveEmbedding(InvalidInput):
    """The gain group does not embed into the additive group of the field."""


class DivisionByZeroPolynomial(ModextError):
    """Exact polynomial division by the zero polynomial."""


class IdentityViolation(ModextError):
    """A polynomial identity that must hold for a modular join failed.

    Carries the four characteristic polynomials involved.
    """

    def __init__(self, chi_m, chi_x, chi_e1, chi_e2):
        self.chi_m = chi_m
        self.chi_x = chi_x
        self.chi_e1 = chi_e1
        self.chi_e2 = chi_e2
        super().__init__(
            "join identity failed: chi(M)*chi(M|X) != chi(M|E1)*chi(M|E2): "
            f"{chi_m} * {chi_x} != {chi_e1} * {chi_e2}"
        )


class LiftViolation(ModextError):
    """A divisional atom of a join factor failed to lift to the join."""


class InternalInconsistency(ModextError):
    """A quantity that theory forces (e.g. a linear flag quotient) came out wrong."""
