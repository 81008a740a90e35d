"""Exception hierarchy shared by all hopfore modules."""


class HopforeError(Exception):
    """Base class for every error raised by this package."""


class GeneratorMismatch(HopforeError):
    """Two values over different generator sets were combined."""


class UnorientableRelation(HopforeError):
    """A relation could not be turned into a terminating rewrite rule."""


class DegreeBoundExceeded(HopforeError):
    """An input exceeds the degree up to which normal forms are certified."""


class ArityError(HopforeError):
    """A tensor operation produced or received an unsupported arity."""


class CarrierMismatch(HopforeError):
    """Tensor operands live over different algebras."""


class WellDefinednessFailure(HopforeError):
    """A generator map does not respect a defining relation.

    Carries the violated relation label and the nonzero residue.
    """

    def __init__(self, relation, residue):
        self.relation = relation
        self.residue = residue
        super().__init__(f"map does not preserve relation {relation}: residue {residue}")


class NotAUnit(HopforeError):
    """A supplied element is not invertible (u*u_inv != 1)."""


class OreValidationError(HopforeError):
    """The (sigma, sigma_inv, delta) data does not define an Ore extension."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


class HigherDegreeTerm(HopforeError):
    """Delta(x) carries a coefficient beyond the allowed x-degree (i, j <= 1)."""


class CounitIncompatible(HopforeError):
    """Delta(x) violates the counit constraints on its coefficients."""


class DomainPremiseFailure(HopforeError):
    """The x-tensor-x coefficient cannot be removed; the input is inconsistent
    with the coefficient ring having a zero-divisor-free tensor square."""


class NormalizationError(HopforeError):
    """A verification step of the normalization pipeline failed."""

    def __init__(self, check, witness):
        self.check = check
        self.witness = witness
        super().__init__(f"{check}: {witness}")


class ParseError(HopforeError):
    """Syntax or semantic error in a presentation source file."""

    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        pos = f"line {line}" if column is None else f"line {line}, col {column}"
        super().__init__(f"{pos}: {message}")


class UndeclaredSymbol(ParseError):
    """A source file references a symbol that was never declared."""
