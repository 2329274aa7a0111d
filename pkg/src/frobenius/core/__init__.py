from .manifold import (CheckReport, FrobeniusManifold, grading_checks,
                       intersection_form, quasihomogeneity_check, wdvv_check)
from .frame import (CanonicalFrame, NonSemisimpleError, canonical_frame,
                    isomonodromy_residual)
from .pencil import PencilReport, curvature_fd_oracle, flat_pencil_check

__all__ = [
    "FrobeniusManifold", "CheckReport", "wdvv_check", "quasihomogeneity_check",
    "intersection_form", "grading_checks", "CanonicalFrame", "canonical_frame",
    "NonSemisimpleError", "isomonodromy_residual", "PencilReport",
    "flat_pencil_check", "curvature_fd_oracle",
]
