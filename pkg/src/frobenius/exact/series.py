"""Truncated power series in one expansion symbol.

Coefficients may be Fractions, MPoly, or RatFun: anything supporting
ring arithmetic works.  Products are truncated at the stored order, so
all identities hold exactly modulo symbol**(order+1).
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly
from .ratfun import RatFun


def _zero_like(c):
    if isinstance(c, MPoly):
        return MPoly.zero(c.vars)
    if isinstance(c, RatFun):
        return RatFun(MPoly.zero(c.vars))
    return Fraction(0)


def _is_zero(c) -> bool:
    if isinstance(c, (MPoly, RatFun)):
        return c.is_zero()
    return c == 0


class QSeries:
    """Series sum(coeffs[k] * symbol**k, k=0..order), exact mod symbol**(order+1)."""

    __slots__ = ("symbol", "order", "coeffs")

    def __init__(self, symbol: str, order: int, coeffs):
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            raise ValueError("too many coefficients for the truncation order")
        self.symbol = symbol
        self.order = order
        if coeffs:
            pad = _zero_like(coeffs[0])
        else:
            pad = Fraction(0)
        self.coeffs = coeffs + [pad] * (order + 1 - len(coeffs))

    @classmethod
    def const(cls, symbol: str, order: int, c) -> "QSeries":
        return cls(symbol, order, [c])

    def _zero_coeff(self):
        return _zero_like(self.coeffs[0])

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            if self.symbol != other.symbol:
                return False
            n = min(self.order, other.order)
            return all(
                _is_zero(self.coeffs[k] - other.coeffs[k]) for k in range(n + 1)
            )
        return NotImplemented

    def __hash__(self):
        raise TypeError("QSeries is unhashable")

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            if other.symbol != self.symbol:
                raise ValueError(f"symbol mismatch {self.symbol!r} vs {other.symbol!r}")
            return other
        return QSeries.const(self.symbol, self.order, other)

    def __add__(self, other):
        o = self._coerce(other)
        n = min(self.order, o.order)
        return QSeries(self.symbol, n,
                       [self.coeffs[k] + o.coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.symbol, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return QSeries(self.symbol, self.order,
                           [c * other for c in self.coeffs])
        o = self._coerce(other)
        n = min(self.order, o.order)
        zero = self._zero_coeff()
        out = [zero for _ in range(n + 1)]
        for i in range(n + 1):
            ci = self.coeffs[i]
            if _is_zero(ci):
                continue
            for j in range(n + 1 - i):
                cj = o.coeffs[j]
                if _is_zero(cj):
                    continue
                out[i + j] = out[i + j] + ci * cj
        return QSeries(self.symbol, n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        result = QSeries.const(self.symbol, self.order, _one_like(self.coeffs[0]))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def reciprocal(self) -> "QSeries":
        """Inverse of a series with invertible constant term."""
        c0 = self.coeffs[0]
        if _is_zero(c0):
            raise ZeroDivisionError("constant term is zero")
        inv0 = _invert_coeff(c0)
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = None
            for j in range(1, k + 1):
                t = self.coeffs[j] * out[k - j]
                acc = t if acc is None else acc + t
            out.append(-(inv0 * acc))
        return QSeries(self.symbol, self.order, out)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.reciprocal()
        return self * _invert_coeff(other)

    def shift(self, k: int) -> "QSeries":
        """Multiply by symbol**k (k >= 0), truncating at the stored order."""
        zero = self._zero_coeff()
        out = [zero] * min(k, self.order + 1) + self.coeffs[: self.order + 1 - k]
        return QSeries(self.symbol, self.order, out[: self.order + 1])

    def map(self, f) -> "QSeries":
        return QSeries(self.symbol, self.order, [f(c) for c in self.coeffs])

    def derivative_in_symbol(self) -> "QSeries":
        """d/dsymbol, losing one order of accuracy at the top."""
        out = [self.coeffs[k] * k for k in range(1, self.order + 1)]
        return QSeries(self.symbol, self.order - 1 if self.order else 0, out or [self._zero_coeff()])

    def theta(self) -> "QSeries":
        """symbol * d/dsymbol, which keeps the truncation order."""
        return QSeries(self.symbol, self.order,
                       [self.coeffs[k] * k for k in range(self.order + 1)])

    def eval(self, value, point=None):
        total = None
        for k in range(self.order, -1, -1):
            c = self.coeffs[k]
            if point is not None and isinstance(c, (MPoly, RatFun)):
                c = c.eval(point)
            total = c if total is None else total * value + c
        return total

    def truncated(self, order: int) -> "QSeries":
        if order >= self.order:
            return self
        return QSeries(self.symbol, order, self.coeffs[: order + 1])

    def to_json(self) -> dict:
        def enc(c):
            if isinstance(c, MPoly):
                return {"poly": c.to_json()}
            if isinstance(c, RatFun):
                return {"num": c.num.to_json(), "den": c.den.to_json()}
            return {"num": str(c.numerator), "den": str(c.denominator)}
        return {"symbol": self.symbol, "order": self.order,
                "coeffs": [enc(c) for c in self.coeffs]}

    def __repr__(self):
        bits = [f"({c!r})*{self.symbol}^{k}" for k, c in enumerate(self.coeffs)
                if not _is_zero(c)]
        return " + ".join(bits) if bits else "0"


def _one_like(c):
    if isinstance(c, MPoly):
        return MPoly.const(c.vars, 1)
    if isinstance(c, RatFun):
        return RatFun.const(c.vars, 1)
    return Fraction(1)


def _invert_coeff(c):
    if isinstance(c, MPoly):
        if c.is_constant():
            return MPoly.const(c.vars, Fraction(1) / c.constant_term())
        return RatFun(MPoly.const(c.vars, 1), c)
    if isinstance(c, RatFun):
        return c.reciprocal()
    return Fraction(1) / c


def poly_invert_series(f: QSeries, order: int) -> QSeries:
    """Compositional inverse of f(x) = x*(1 + f1/x + f2/x**2 + ...).

    ``f`` is given as the descending-power tail: f.coeffs[j] is the
    coefficient of x**(1-j), with f.coeffs[0] the leading coefficient
    (which must be exactly 1).  Returns g in the same convention, with
    f(g(k)) = k up to terms of order k**(-order) exclusive.

    The substitution x = k*(1 + sum g_j k**-j) is solved degree by degree.
    """
    if order < 1:
        raise ValueError("inversion order must be >= 1")
    if f.order < order:
        raise ValueError(f"series holds only {f.order} tail coefficients, need {order}")
    one = _one_like(f.coeffs[0])
    if not _is_zero(f.coeffs[0] - one):
        raise ValueError("leading coefficient must be 1 for compositional inversion")
    sym = f.symbol
    zero = _zero_like(f.coeffs[0])

    g = [one] + [zero] * order  # g_0..g_order, g_0 = 1

    def one_plus_T():
        return QSeries(sym, order, list(g))

    for m in range(1, order + 1):
        # residual of f(g(k))/k - 1 at order m, with g_m still set to zero
        T = one_plus_T()
        total = QSeries(sym, order, list(g))  # the (1+T) term itself
        Tinv = T.reciprocal()
        powmem = {0: QSeries.const(sym, order, one)}

        def tpow(e):  # (1+T)**e for possibly negative e
            if e in powmem:
                return powmem[e]
            p = (T if e > 0 else Tinv) ** abs(e)
            powmem[e] = p
            return p

        for j in range(1, m + 1):
            fj = f.coeffs[j]
            if _is_zero(fj):
                continue
            total = total + tpow(1 - j).shift(j) * fj
        resid = total.coeffs[m]
        g[m] = -resid
    return QSeries(sym, order, g)
