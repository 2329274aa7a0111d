"""Exact dense linear algebra over field-like scalars.

Works uniformly for Fraction, CycNum, MPoly (promoted to RatFun on
division), and RatFun entries.  Elimination keeps quotients lazy, which
for polynomial entries amounts to fraction-free arithmetic: no gcd is
ever taken.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly
from .ratfun import RatFun


class SingularMatrixError(ArithmeticError):
    def __init__(self, stage: int):
        super().__init__(f"matrix is singular (elimination stalled at pivot stage {stage})")
        self.stage = stage


def _is_zero(x) -> bool:
    if isinstance(x, (MPoly, RatFun)):
        return x.is_zero()
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return x == 0


def _div(a, b):
    if isinstance(a, MPoly) or isinstance(b, MPoly):
        a = RatFun.of(a) if isinstance(a, MPoly) else a
        b = RatFun.of(b) if isinstance(b, MPoly) else b
    return a / b


def exact_linsolve(A, b):
    """Solve A x = b exactly; raises SingularMatrixError when A is singular."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    if len(b) != n:
        raise ValueError("right-hand side has wrong length")
    M = [list(row) + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not _is_zero(M[r][col]):
                pivot = r
                break
        if pivot is None:
            raise SingularMatrixError(col)
        M[col], M[pivot] = M[pivot], M[col]
        inv = M[col][col]
        for r in range(n):
            if r == col or _is_zero(M[r][col]):
                continue
            f = _div(M[r][col], inv)
            M[r] = [M[r][j] - f * M[col][j] for j in range(n + 1)]
    return [_div(M[i][n], M[i][i]) for i in range(n)]


def _zero_of(sample):
    if isinstance(sample, MPoly):
        return MPoly.zero(sample.vars)
    if isinstance(sample, RatFun):
        return RatFun(MPoly.zero(sample.vars))
    if isinstance(sample, Fraction):
        return Fraction(0)
    if hasattr(sample, "m") and hasattr(sample, "coeffs"):  # CycNum
        return type(sample).from_int(sample.m, 0)
    return 0


def exact_inverse(A):
    """Matrix inverse column by column (exact)."""
    n = len(A)
    cols = []
    for k in range(n):
        e = [_zero_of(A[0][0])] * n
        e[k] = _one_of(A[0][0])
        cols.append(exact_linsolve(A, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _one_of(sample):
    if isinstance(sample, MPoly):
        return MPoly.const(sample.vars, 1)
    if isinstance(sample, RatFun):
        return RatFun.const(sample.vars, 1)
    if isinstance(sample, Fraction):
        return Fraction(1)
    if hasattr(sample, "m") and hasattr(sample, "coeffs"):
        return type(sample).from_int(sample.m, 1)
    return 1


def exact_det(A):
    """Determinant by elimination (exact, with lazy quotients)."""
    n = len(A)
    M = [list(row) for row in A]
    det = _one_of(M[0][0])
    sign = 1
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not _is_zero(M[r][col]):
                pivot = r
                break
        if pivot is None:
            return _zero_of(M[0][0])
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            sign = -sign
        piv = M[col][col]
        det = det * piv
        for r in range(col + 1, n):
            if _is_zero(M[r][col]):
                continue
            f = _div(M[r][col], piv)
            M[r] = [M[r][j] - f * M[col][j] for j in range(n)]
    return det * sign if sign > 0 else -(det)


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[_dot(A[i], [B[k][j] for k in range(m)]) for j in range(p)]
            for i in range(n)]


def _dot(row, col):
    total = None
    for a, b in zip(row, col):
        t = a * b
        total = t if total is None else total + t
    return total


def mat_vec(A, v):
    return [_dot(row, v) for row in A]


def identity_like(n, sample):
    one, zero = _one_of(sample), _zero_of(sample)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]
