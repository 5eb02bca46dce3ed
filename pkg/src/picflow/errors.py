"""Exception and warning types shared across the package."""


class PicflowError(Exception):
    """Base class for all picflow errors."""


class NonSymmetric(PicflowError):
    """A matrix required to be symmetric is asymmetric beyond tolerance."""


class BianchiViolation(PicflowError):
    """Block traces disagree: tr(A) != tr(C) beyond tolerance."""


class ConstraintViolation(PicflowError):
    """An algebraic constraint on inputs (zero trace, simplex sum) is violated."""


class RejectionExhausted(PicflowError):
    """Rejection sampling failed to accept after the retry budget."""


class BlowupDetected(PicflowError):
    """Flow state norm exceeded the blow-up guard.

    Carries the partial trajectory computed so far in ``trajectory``.
    """

    def __init__(self, message, trajectory=None):
        super().__init__(message)
        self.trajectory = trajectory


class StepTooLarge(PicflowError):
    """Single-step integration defect exceeded the accuracy guard."""


class RatioUndefined(PicflowError):
    """The pinch ratio phi/sqrt(psi1*psi2) is undefined (psi1*psi2 <= 0)."""


class UnknownModel(PicflowError):
    """Requested model geometry is not in the catalog."""


class NotApplicable(PicflowError):
    """The requested check does not apply to this model."""


class NonSmoothWarning(UserWarning):
    """Eigenvalue crossing detected; finite differences fall back to one-sided."""
