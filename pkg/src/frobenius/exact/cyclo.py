"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are coefficient vectors of length phi(m) representing
polynomials in zeta modulo the m-th cyclotomic polynomial.  Coefficients
stay plain ints whenever possible (fast convolution, cheap hashing) and
become Fractions only after division.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple:
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]          # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _divexact_int(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _divexact_int(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        if c * b[-1] != a[k + len(b) - 1]:
            raise ArithmeticError("inexact division of integer polynomials")
        out[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
    if any(a):
        raise ArithmeticError("inexact division of integer polynomials")
    return out


@lru_cache(maxsize=None)
def _phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> tuple:
    """zeta^k for k in [phi(m), 2*phi(m)-2], reduced mod Phi_m; int vectors."""
    phi = _phi(m)
    poly = cyclotomic_poly(m)   # monic
    rows = []
    cur = [-c for c in poly[:-1]]                   # zeta^phi
    rows.append(tuple(cur))
    for _ in range(phi - 2):
        cur = [0] + cur
        top = cur.pop()                             # coefficient of zeta^phi
        if top:
            cur = [c - top * poly[i] for i, c in enumerate(cur)]
        rows.append(tuple(cur))
    return tuple(rows)


class CycNum:
    """Element of Q(zeta_m) as a vector over the power basis 1..zeta^(phi-1)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        phi = _phi(m)
        coeffs = list(coeffs)
        if len(coeffs) > phi:
            raise ValueError("coefficient vector too long; reduce first")
        coeffs += [0] * (phi - len(coeffs))
        self.m = m
        self.coeffs = tuple(
            c if isinstance(c, int) else (int(c) if isinstance(c, Fraction) and c.denominator == 1 else c)
            for c in coeffs
        )

    # --------------------------------------------------------- constructors

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycNum":
        k %= m
        phi = _phi(m)
        if k < phi:
            v = [0] * phi
            v[k] = 1
            return cls(m, v)
        out = cls.from_int(m, 1)
        unit = cls.zeta(m, 1) if phi > 1 else cls(m, [_root_of_unity_deg1(m)])
        for _ in range(k):
            out = out * unit
        return out

    @classmethod
    def from_int(cls, m: int, x) -> "CycNum":
        phi = _phi(m)
        v = [0] * phi
        v[0] = x
        return cls(m, v)

    @classmethod
    def from_rational(cls, m: int, x: Fraction) -> "CycNum":
        return cls.from_int(m, x)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return Fraction(self.coeffs[0])

    # ------------------------------------------------------------ promotion

    def lift(self, m2: int) -> "CycNum":
        """Embed into Q(zeta_m2) for m | m2 via zeta_m = zeta_m2^(m2/m)."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError(f"{self.m} does not divide {m2}")
        step = m2 // self.m
        out = CycNum.from_int(m2, 0)
        for k, c in enumerate(self.coeffs):
            if c != 0:
                out = out + CycNum.zeta(m2, step * k) * c
        return out

    def _match(self, other: "CycNum"):
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_int(self.m, other)
        if self.m == other.m:
            return self, other
        m = self.m * other.m // gcd(self.m, other.m)
        return self.lift(m), other.lift(m)

    # ----------------------------------------------------------- arithmetic

    def __add__(self, other):
        a, b = self._match(other)
        return CycNum(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._match(other)
        return CycNum(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.m, [c * other for c in self.coeffs])
        a, b = self._match(other)
        phi = _phi(a.m)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y == 0:
                    continue
                conv[i + j] += x * y
        out = list(conv[:phi])
        table = _reduction_table(a.m)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c == 0:
                continue
            row = table[k - phi]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
        return CycNum(a.m, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Field inverse via an exact linear solve."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero cyclotomic number")
        phi = _phi(self.m)
        # columns of multiplication-by-self in the power basis
        cols = []
        basis = [CycNum(self.m, [1 if i == k else 0 for i in range(phi)])
                 for k in range(phi)]
        for bk in basis:
            cols.append((self * bk).coeffs)
        A = [[Fraction(cols[j][i]) for j in range(phi)] for i in range(phi)]
        rhs = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        from .linalg import exact_linsolve
        sol = exact_linsolve(A, rhs)
        return CycNum(self.m, sol)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(1) / Fraction(other)
            return CycNum(self.m, [c * q for c in self.coeffs])
        a, b = self._match(other)
        return a * b.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.from_int(self.m, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.coeffs[0]) == Fraction(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._match(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    # ------------------------------------------------------------ embedding

    def embed(self) -> complex:
        """Complex value under zeta -> exp(2*pi*i/m)."""
        z = cmath.exp(2j * cmath.pi / self.m)
        total = 0j
        p = 1 + 0j
        for c in self.coeffs:
            if c != 0:
                total += complex(c) * p
            p *= z
        return total

    def __repr__(self):
        bits = [f"{c}*z{self.m}^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(bits) if bits else f"0 (in Q(zeta_{self.m}))"


def _root_of_unity_deg1(m: int):
    # phi(m) == 1 only for m in {1, 2}; zeta_1 = 1, zeta_2 = -1
    return 1 if m == 1 else -1


def cyc_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    """Dispatch helper: op in {"add", "mul", "inv"} ("inv" ignores b)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")


def sqrt2(conductor: int = 8) -> CycNum:
    """sqrt(2) = zeta_8 - zeta_8^3, lifted to the requested conductor."""
    if conductor % 8:
        raise ValueError("conductor must be a multiple of 8")
    return (CycNum.zeta(8, 1) - CycNum.zeta(8, 3)).lift(conductor)


def sqrt3(conductor: int = 12) -> CycNum:
    """sqrt(3) = zeta_12 + zeta_12^(-1), lifted to the requested conductor."""
    if conductor % 12:
        raise ValueError("conductor must be a multiple of 12")
    return (CycNum.zeta(12, 1) + CycNum.zeta(12, 11)).lift(conductor)
