"""Polynomials in formal logarithm symbols over an arbitrary coefficient ring.

The instanton-expansion checks need functions of the shape

    rational + sum_k (rational) * log(linear_k)**a * log(Q)**b

where every derivative of a log symbol is again rational.  LogPoly keeps
the log monomials symbolic, so identities whose log parts must cancel can
be verified exactly.
"""

from __future__ import annotations


class LogPoly:
    """Sparse polynomial in named log symbols; coefficients form a ring."""

    __slots__ = ("symbols", "terms", "zero")

    def __init__(self, symbols, terms, zero):
        self.symbols = tuple(symbols)
        self.zero = zero
        clean = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != len(self.symbols):
                raise ValueError("exponent length mismatch")
            if _is_zero(c):
                continue
            clean[exp] = clean.get(exp, zero) + c
        self.terms = {e: c for e, c in clean.items() if not _is_zero(c)}

    @classmethod
    def lift(cls, symbols, c, zero):
        return cls(symbols, {(0,) * len(symbols): c}, zero)

    @classmethod
    def symbol(cls, symbols, name, one, zero):
        i = tuple(symbols).index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(symbols)))
        return cls(symbols, {exp: one}, zero)

    def is_zero(self) -> bool:
        return not self.terms

    def plain(self):
        """Coefficient of the log-free monomial."""
        return self.terms.get((0,) * len(self.symbols), self.zero)

    def is_log_free(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def _coerce(self, other) -> "LogPoly":
        if isinstance(other, LogPoly):
            if other.symbols != self.symbols:
                raise ValueError("log-symbol mismatch")
            return other
        return LogPoly.lift(self.symbols, self.zero + other, self.zero)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, self.zero) + c
        return LogPoly(self.symbols, out, self.zero)

    __radd__ = __add__

    def __neg__(self):
        return LogPoly(self.symbols, {e: -c for e, c in self.terms.items()}, self.zero)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        if not isinstance(other, LogPoly):
            return LogPoly(self.symbols,
                           {e: c * other for e, c in self.terms.items()},
                           self.zero)
        o = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                out[e] = out.get(e, self.zero) + prod
        return LogPoly(self.symbols, out, self.zero)

    __rmul__ = __mul__

    def apply_derivation(self, coeff_deriv, symbol_derivs) -> "LogPoly":
        """Derivation: coeff_deriv acts on coefficients, symbol_derivs maps
        each log symbol to its (log-free) derivative in the coefficient ring."""
        out = {}
        for exp, c in self.terms.items():
            dc = coeff_deriv(c)
            if not _is_zero(dc):
                out[exp] = out.get(exp, self.zero) + dc
            for i, name in enumerate(self.symbols):
                if exp[i] == 0:
                    continue
                ds = symbol_derivs.get(name)
                if ds is None or _is_zero(ds):
                    continue
                e = list(exp)
                e[i] -= 1
                e = tuple(e)
                add = c * exp[i] * ds if not isinstance(ds, int) else c * (exp[i] * ds)
                out[e] = out.get(e, self.zero) + add
        return LogPoly(self.symbols, out, self.zero)

    def map(self, f) -> "LogPoly":
        return LogPoly(self.symbols, {e: f(c) for e, c in self.terms.items()}, self.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp, c in sorted(self.terms.items()):
            mono = "*".join(f"{s}^{e}" if e > 1 else s
                            for s, e in zip(self.symbols, exp) if e)
            bits.append(f"({c!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0
