"""Rational functions num/den over MPoly.

Quotients are kept unreduced: multivariate gcd is expensive and nothing
downstream needs canonical forms.  Equality is decided by
cross-multiplication, zero-testing by the numerator.  ``normalize`` strips
monomial and rational content and, when the quotient happens to be
univariate, removes the polynomial gcd as well.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly, _as_fraction


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.vars != den.vars:
            raise ValueError("numerator/denominator variable mismatch")
        self.num = num
        self.den = den

    # --------------------------------------------------------- constructors

    @classmethod
    def const(cls, variables, c) -> "RatFun":
        return cls(MPoly.const(variables, c))

    @classmethod
    def of(cls, x, variables=None) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        if isinstance(x, MPoly):
            return cls(x)
        if variables is None:
            raise TypeError("variables required to lift a scalar")
        return cls(MPoly.const(variables, x))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    # ----------------------------------------------------------- arithmetic

    def _coerce(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, MPoly):
            return RatFun(other)
        return RatFun(MPoly.const(self.vars, other))

    def __add__(self, other):
        if not isinstance(other, (RatFun, MPoly, int, Fraction)):
            return NotImplemented
        o = self._coerce(other)
        if self.den.terms == o.den.terms:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, (RatFun, MPoly, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        if not isinstance(other, (RatFun, MPoly, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return RatFun(self.num * c, self.den)
        o = self._coerce(other)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def reciprocal(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("zero has no reciprocal")
        return RatFun(self.den, self.num)

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        return RatFun(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RatFun is unhashable (equality is by cross-multiplication)")

    # ------------------------------------------------------------- calculus

    def diff(self, name: str) -> "RatFun":
        return RatFun(
            self.num.diff(name) * self.den - self.num * self.den.diff(name),
            self.den * self.den,
        )

    # ----------------------------------------------------------- evaluation

    def eval(self, point):
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the sample point")
        n = self.num.eval(point)
        if isinstance(n, Fraction) and isinstance(d, Fraction):
            return n / d
        return n / d

    # -------------------------------------------------------- normalization

    def normalize(self) -> "RatFun":
        """Strip shared content; full gcd reduction only in one variable."""
        num, den = self.num, self.den
        if num.is_zero():
            return RatFun(MPoly.zero(num.vars), MPoly.const(num.vars, 1))
        # rational content
        coeffs = list(num.terms.values()) + list(den.terms.values())
        from math import gcd
        g_num = 0
        g_den = 0
        for c in coeffs:
            g_num = gcd(g_num, c.numerator)
            g_den = gcd(g_den, c.denominator)
        scale = Fraction(g_den, g_num) if g_num else Fraction(1)
        num = num * scale
        den = den * scale
        # monomial content
        nv = len(num.vars)
        shift = [min(min(e[i] for e in num.terms), min(e[i] for e in den.terms))
                 for i in range(nv)]
        if any(shift):
            num = MPoly(num.vars, {tuple(e[i] - shift[i] for i in range(nv)): c
                                   for e, c in num.terms.items()})
            den = MPoly(den.vars, {tuple(e[i] - shift[i] for i in range(nv)): c
                                   for e, c in den.terms.items()})
        used = [i for i in range(nv)
                if any(e[i] for e in num.terms) or any(e[i] for e in den.terms)]
        if len(used) == 1:
            i = used[0]
            a = _to_univar(num, i)
            b = _to_univar(den, i)
            g = _poly_gcd_univar(a, b)
            if len(g) > 1:
                a = _poly_divexact(a, g)
                b = _poly_divexact(b, g)
                num = _from_univar(num.vars, i, a)
                den = _from_univar(den.vars, i, b)
        # make the denominator's leading coefficient positive
        lead = den.terms[max(den.terms)] if den.terms else Fraction(1)
        if lead < 0:
            num, den = -num, -den
        return RatFun(num, den)


def _to_univar(p: MPoly, i: int) -> list:
    deg = max(e[i] for e in p.terms) if p.terms else 0
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        out[e[i]] += c
    return out


def _from_univar(variables, i: int, coeffs) -> MPoly:
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * len(variables)
            e[i] = k
            terms[tuple(e)] = c
    return MPoly(variables, terms)


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod_univar(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = Fraction(1) / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return q, _poly_trim(a)

def _poly_gcd_univar(a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        _, r = _poly_divmod_univar(a, b)
        a, b = b, r
    if a:
        inv = Fraction(1) / a[-1]
        a = [c * inv for c in a]
    return a


def _poly_divexact(a, g):
    q, r = _poly_divmod_univar(list(a), g)
    if _poly_trim(r):
        raise ArithmeticError("inexact univariate division")
    return _poly_trim(q)
