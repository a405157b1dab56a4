class PluripotentialError(Exception):
    """Base error class for all exceptions raised in this library."""


class ShapeError(PluripotentialError):
    """
    Exception raised when a matrix block does not fit the spaces it connects.

    Attributes:
        block -- Name of the offending block, e.g. "del(0, 1)".
        expected -- The (rows, cols) shape the spaces require.
        found -- The (rows, cols) shape that was supplied.
    """
    def __init__(self, block, expected, found):
        self.block = block
        self.expected = expected
        self.found = found
        super().__init__(
            f'Block {block} has shape {found}'
            f', expected {expected}.'
        )


class ContainmentError(PluripotentialError):
    """
    Exception raised when a denominator subspace is not contained in its numerator.

    Attributes:
        witness -- A denominator vector lying outside the numerator.
    """
    def __init__(self, witness):
        self.witness = witness
        super().__init__(
            f'Denominator is not contained in numerator'
            f'.\nWitness → {witness}.'
        )


class InclusionError(PluripotentialError):
    """
    Exception raised when a linear map does not carry a subquotient into another.

    Attributes:
        which -- "numerator" or "denominator", the inclusion that failed.
        witness -- A source vector whose image escapes the target subspace.
    """
    def __init__(self, which, witness):
        self.which = which
        self.witness = witness
        super().__init__(
            f'Map does not send source {which} into target {which}'
            f'.\nWitness → {witness}.'
        )


class ValidationError(PluripotentialError):
    """
    Exception raised when a complex, bicomplex or morphism fails validation.

    Attributes:
        report -- The ValidationReport listing every defect.
    """
    def __init__(self, report):
        self.report = report
        super().__init__(
            f'{report.kind} failed validation'
            f'.\nDefects → {report.summary()}.'
        )


class DomainRestrictionError(PluripotentialError):
    """
    Exception raised when an operation receives input outside the degrees it is defined on.

    Attributes:
        operation -- Name of the operation.
        reason -- Which restriction was violated.
    """
    def __init__(self, operation, reason):
        self.operation = operation
        self.reason = reason
        super().__init__(f'{operation} rejected its input: {reason}.')


class MembershipError(PluripotentialError):
    """
    Exception raised when a vector misses the fixed-point space it should land in.

    Attributes:
        degree -- The cochain degree where membership failed.
        witness -- The offending vector.
    """
    def __init__(self, degree, witness):
        self.degree = degree
        self.witness = witness
        super().__init__(
            f'Vector is not in the fixed-point space of degree {degree}'
            f'.\nWitness → {witness}.'
        )
