"""Multi-scalar FRW minisuperspace: geometry, Noether integrals, exact solutions."""

from .dynamics import (
    FieldState,
    IntegrationStatus,
    PotentialKind,
    PotentialSpec,
    Trajectory,
    eom_rhs,
    hamiltonian_eval,
    integrate,
    lagrangian_eval,
)
from .errors import DomainError, InapplicableIntegralError, PoleError
from .geometry import KillingTensorParams, Point, VectorFieldId
from .solutions import ExactSolutionParams, LambdaCosmologyParams, ObservableSample
from .symmetries import IntegralId, SymmetryId, applicable_integrals, integral_eval
from .transforms import NormalState, to_field, to_normal

__all__ = [
    "DomainError",
    "ExactSolutionParams",
    "FieldState",
    "InapplicableIntegralError",
    "IntegralId",
    "IntegrationStatus",
    "KillingTensorParams",
    "LambdaCosmologyParams",
    "NormalState",
    "ObservableSample",
    "Point",
    "PoleError",
    "PotentialKind",
    "PotentialSpec",
    "SymmetryId",
    "Trajectory",
    "VectorFieldId",
    "applicable_integrals",
    "eom_rhs",
    "hamiltonian_eval",
    "integral_eval",
    "integrate",
    "lagrangian_eval",
    "to_field",
    "to_normal",
]
