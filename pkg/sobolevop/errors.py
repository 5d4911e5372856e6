# license: MIT
'''exceptions raised by the sobolevop package'''


class SobolevopError(ValueError):
    '''Base class for all errors raised by the package.'''


class DomainError(SobolevopError):
    '''An argument lies outside the domain where a construction is
    defined.'''


class SingularSeriesError(DomainError, ZeroDivisionError):
    '''A power series with vanishing constant term was inverted.'''


class ContourError(DomainError):
    '''The integration contour reaches a singularity of the integrand.'''


class PreconditionError(SobolevopError):
    '''The parameters are outside the range where a claim is asserted.'''


class UnsupportedShapeError(SobolevopError):
    '''A weight factor has a shape the construction does not handle.'''


class InsufficientRuleError(SobolevopError):
    '''A quadrature rule is not exact for the requested integrand.'''


class TruncationError(SobolevopError):
    '''A sequence is too short for the requested truncation.'''


class UnsolvableOperatorError(SobolevopError):
    '''A differential operator does not map polynomials onto polynomials of
    the same degree.

    The :class:`~sobolevop.diffop.Solvability` diagnostic is available as the
    ``diagnostic`` attribute.

    '''

    def __init__(self, diagnostic):
        super().__init__(f'solvability error: {diagnostic.message}')
        self.diagnostic = diagnostic


class DegenerateFormError(SobolevopError):
    '''A Sobolev form is not positive definite on polynomials.

    The first degree at which positivity fails is available as the
    ``degree`` attribute.

    '''

    def __init__(self, degree, detail=''):
        msg = f'degenerate form error: positivity fails at degree {degree}'
        if detail:
            msg = f'{msg} ({detail})'
        super().__init__(msg)
        self.degree = degree
