from typing import Optional, Sequence


class TensorPathError(Exception):
    """Base exception class for tensorpath errors."""
    pass


class ConfigurationError(TensorPathError):
    """Exception related to loading or validating a sweep or step-set configuration."""
    pass


# --- Lattice ---

class LatticeError(TensorPathError):
    """Invalid step set or lattice data."""
    pass

class SpanDeficient(LatticeError):
    """The step differences do not span the ambient rational space."""
    pass

class NonPositiveWeight(LatticeError):
    pass

class DuplicateStep(LatticeError):
    pass

class DimensionMismatch(LatticeError):
    """A vector or list does not have the length the step set expects."""
    pass

class NonFiniteInput(LatticeError):
    pass


# --- Dual solver ---

class SolverError(TensorPathError):
    """Failure of the moment-map inversion or rate-function evaluation."""
    pass

class NotInterior(SolverError):
    """The requested point is not in the interior of the step polytope."""

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message)
        self.location = location

class NoConvergence(SolverError):
    """Newton iteration stopped without reaching the residual tolerance."""

    def __init__(self, message: str, best_tau: Sequence[float], residual: float, iterations: int):
        super().__init__(f"{message} (residual={residual:.3e}, iterations={iterations})")
        self.best_tau = tuple(float(t) for t in best_tau)
        self.residual = residual
        self.iterations = iterations

class BoundaryUnsupported(SolverError):
    """Rate function requested on the boundary of the step polytope."""
    pass


# --- Exact oracle ---

class OracleError(TensorPathError):
    pass

class MemoryCapExceeded(OracleError):
    def __init__(self, required_cells: int, cap: int):
        super().__init__(f"Coefficient table needs {required_cells} cells, above the cap of {cap}.")
        self.required_cells = required_cells
        self.cap = cap

class CoordinateMismatch(OracleError):
    """A weight is not expressible in the lattice coordinates of the root subspace."""
    pass

class NegativeMultiplicity(OracleError):
    """An alternating Weyl sum produced a negative irreducible multiplicity."""
    pass


# --- Root systems ---

class RootSystemError(TensorPathError):
    pass

class UnknownName(RootSystemError):
    pass

class NotDominant(RootSystemError):
    pass

class JOutOfRange(RootSystemError):
    pass


# --- Estimators ---

class EstimatorError(TensorPathError):
    """An asymptotic estimator was called outside its hypotheses."""
    pass

class NotInStepSet(EstimatorError):
    pass

class FNotInDifferenceLattice(EstimatorError):
    pass

class SupportViolation(EstimatorError):
    """The target fails the congruence condition, so the exact count is zero."""
    pass

class NotSemisimple(EstimatorError):
    pass

class NotAWeight(EstimatorError):
    pass


# Failures that only invalidate one estimator in one sweep row.
CELL_ERRORS = (
    NotInterior,
    BoundaryUnsupported,
    NotInStepSet,
    FNotInDifferenceLattice,
    SupportViolation,
    NotSemisimple,
    NotAWeight,
    NotDominant,
)
