"""Exception types shared across the package."""


class DomainError(ValueError):
    """A point or state lies outside the chart where a quantity is defined."""


class PoleError(DomainError):
    """A contact-symmetry coefficient is evaluated too close to one of its poles."""


class InapplicableIntegralError(ValueError):
    """The requested first integral is not conserved for the chosen potential."""
