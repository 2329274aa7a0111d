from .mpoly import MPoly
from .ratfun import RatFun
from .series import QSeries, poly_invert_series
from .cyclo import CycNum, cyc_arith, cyclotomic_poly, sqrt2, sqrt3
from .linalg import (
    SingularMatrixError,
    exact_det,
    exact_inverse,
    exact_linsolve,
    identity_like,
    mat_mul,
    mat_vec,
)
from .logpoly import LogPoly

__all__ = [
    "MPoly", "RatFun", "QSeries", "poly_invert_series",
    "CycNum", "cyc_arith", "cyclotomic_poly", "sqrt2", "sqrt3",
    "SingularMatrixError", "exact_linsolve", "exact_inverse", "exact_det",
    "mat_mul", "mat_vec", "identity_like", "LogPoly",
]
