"""Sparse multivariate polynomials over exact rationals.

A polynomial is a dict mapping exponent tuples to nonzero ``Fraction``
coefficients.  The variable list is fixed at construction; mixing
polynomials over different variable tuples is an error unless the caller
aligns them explicitly with :meth:`MPoly.aligned`.  This is deliberate:
silent variable aliasing is the classic way to corrupt a symbolic
computation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


class MPoly:
    """Multivariate polynomial with Fraction coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    coefficients.  All arithmetic is exact.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar] | None = None):
        self.vars = tuple(variables)
        clean = {}
        if terms:
            nv = len(self.vars)
            for exp, c in terms.items():
                c = _as_fraction(c)
                if c == 0:
                    continue
                exp = tuple(int(e) for e in exp)
                if len(exp) != nv:
                    raise ValueError(f"exponent {exp} has wrong length for vars {self.vars}")
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean

    # ---------------------------------------------------------------- basic

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "MPoly":
        c = _as_fraction(c)
        if c == 0:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MPoly":
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exp: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(exp[i] for exp in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # ----------------------------------------------------------- arithmetic

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(
                    f"variable mismatch {self.vars} vs {other.vars}; align explicitly"
                )
            return other
        return MPoly.const(self.vars, other)

    def __add__(self, other):
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        r = MPoly.__new__(MPoly)
        r.vars, r.terms = self.vars, out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MPoly.__new__(MPoly)
        r.vars = self.vars
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return MPoly.zero(self.vars)
            r = MPoly.__new__(MPoly)
            r.vars = self.vars
            r.terms = {e: k * c for e, k in self.terms.items()}
            return r
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        out = {e: c for e, c in out.items() if c != 0}
        r = MPoly.__new__(MPoly)
        r.vars, r.terms = self.vars, out
        return r

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _as_fraction(other))
        raise TypeError("use RatFun for polynomial quotients")

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power; use RatFun")
        result = MPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # ------------------------------------------------------------- calculus

    def diff(self, name: str) -> "MPoly":
        i = self.vars.index(name)
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            e = list(exp)
            k = e[i]
            e[i] = k - 1
            e = tuple(e)
            s = out.get(e, Fraction(0)) + c * k
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        r = MPoly.__new__(MPoly)
        r.vars, r.terms = self.vars, out
        return r

    def integrate(self, name: str) -> "MPoly":
        """Antiderivative with zero integration constant."""
        i = self.vars.index(name)
        out = {}
        for exp, c in self.terms.items():
            e = list(exp)
            e[i] += 1
            out[tuple(e)] = c / e[i]
        r = MPoly.__new__(MPoly)
        r.vars, r.terms = self.vars, out
        return r

    # ----------------------------------------------------------- evaluation

    def eval(self, point: Mapping[str, object]):
        """Evaluate with values from ``point`` (Fraction, complex, ...).

        Variables missing from ``point`` must not occur in the polynomial.
        """
        idx = [(i, name) for i, name in enumerate(self.vars)]
        total = None
        for exp, c in self.terms.items():
            term = c
            for i, name in idx:
                if exp[i]:
                    v = point.get(name)
                    if v is None:
                        raise KeyError(f"no value supplied for {name}")
                    term = term * v ** exp[i]
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def subs(self, assignment: Mapping[str, "MPoly"]) -> "MPoly":
        """Substitute polynomials for variables (all over the target vars)."""
        target = None
        for p in assignment.values():
            target = p.vars
            break
        if target is None:
            raise ValueError("empty substitution")
        for name in self.vars:
            if name not in assignment:
                raise KeyError(f"no substitution supplied for {name}")
        out = MPoly.zero(target)
        for exp, c in self.terms.items():
            term = MPoly.const(target, c)
            for i, name in enumerate(self.vars):
                if exp[i]:
                    term = term * assignment[name] ** exp[i]
            out = out + term
        return out

    def aligned(self, variables: Sequence[str]) -> "MPoly":
        """Re-express over a larger variable tuple (explicit alignment)."""
        variables = tuple(variables)
        pos = []
        for name in self.vars:
            if name not in variables:
                raise ValueError(f"{name} missing from target variables")
            pos.append(variables.index(name))
        out = {}
        for exp, c in self.terms.items():
            e = [0] * len(variables)
            for i, p in enumerate(pos):
                e[p] = exp[i]
            out[tuple(e)] = c
        return MPoly(variables, out)

    def truncate_var(self, name: str, order: int) -> "MPoly":
        """Drop terms with exponent of ``name`` above ``order``."""
        i = self.vars.index(name)
        r = MPoly.__new__(MPoly)
        r.vars = self.vars
        r.terms = {e: c for e, c in self.terms.items() if e[i] <= order}
        return r

    def coeff_of(self, name: str, k: int) -> "MPoly":
        """Coefficient of name**k, as a polynomial in the remaining vars."""
        i = self.vars.index(name)
        rest = tuple(v for j, v in enumerate(self.vars) if j != i)
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == k:
                e = tuple(x for j, x in enumerate(exp) if j != i)
                out[e] = c
        return MPoly(rest, out)

    # ---------------------------------------------------------------- misc

    def to_json(self) -> dict:
        """Canonical JSON form with exact integer strings."""
        items = sorted(self.terms.items())
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in items
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MPoly":
        terms = {
            tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        }
        return cls(data["vars"], terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp, c in sorted(self.terms.items()):
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exp)
                if e
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)
