from typing import Optional


class CavityError(Exception):
    """
    Base class for every error raised by the cavity engine.
    """


class DomainError(CavityError, ValueError):
    """
    An argument lies outside the domain where the quantity is defined.
    """


class SpecialCaseError(DomainError):
    """
    The generic formula must not be used at this point; a dedicated limit
    exists instead (Drude permittivity at zero frequency).
    """


class ConfigError(CavityError):
    """
    A scenario or material definition is malformed.

    Args:
        field (str): Dotted path of the offending field, e.g. ``cavity.L``.
        message (str): What is wrong with it.
    """

    def __init__(self, field: str, message: str) -> None:
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}" if field else message)


class ConvergenceError(CavityError):
    """
    A quadrature or Matsubara sum did not reach the requested tolerance.

    The partial value is kept so callers can still report it.
    """

    def __init__(
        self,
        message: str,
        partial_value: float,
        rel_tol_achieved: float,
        terms_used: Optional[int] = None,
    ) -> None:
        self.partial_value = partial_value
        self.rel_tol_achieved = rel_tol_achieved
        self.terms_used = terms_used
        super().__init__(
            f"{message} (partial value {partial_value:.6e}, "
            f"achieved rel. tol {rel_tol_achieved:.2e})"
        )
