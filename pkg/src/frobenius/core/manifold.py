"""Frobenius manifolds in flat coordinates, and the exact identity checks.

A manifold is the data (n, d, F, eta, Euler field).  The potential F is a
polynomial in the flat coordinates; quantum-cohomology examples may also
use an auxiliary pair of variables (s, Q) with Q standing for e**s, in
which case the derivative along the s-coordinate is d/ds + Q d/dQ and all
identities hold modulo Q**(qorder+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..exact import MPoly, exact_inverse


@dataclass
class CheckReport:
    ok: bool
    data: dict = field(default_factory=dict)


class FrobeniusManifold:
    """Frobenius structure in flat coordinates; unity is the first coordinate."""

    def __init__(self, coords, d, F: MPoly, eta, euler_linear, euler_const=None,
                 exp_var: tuple | None = None, qorder: int | None = None,
                 name: str = ""):
        self.coords = tuple(coords)
        self.n = len(self.coords)
        self.d = Fraction(d)
        self.F = F
        self.eta = [[Fraction(x) for x in row] for row in eta]
        self.euler_a = [[Fraction(x) for x in row] for row in euler_linear]
        self.euler_b = [Fraction(x) for x in (euler_const or [0] * self.n)]
        self.exp_var = exp_var          # (s_name, q_name) for e**s bookkeeping
        self.qorder = qorder
        self.name = name
        for name_ in self.coords:
            if name_ not in F.vars:
                raise ValueError(f"potential lacks variable {name_}")
        if len(self.eta) != self.n or any(len(r) != self.n for r in self.eta):
            raise ValueError("eta has wrong shape")
        for i in range(self.n):
            for j in range(self.n):
                if self.eta[i][j] != self.eta[j][i]:
                    raise ValueError("eta must be symmetric")
        self.eta_inv = _frac_inverse(self.eta)
        self._cache: dict = {}
        # attached realizations (set by constructors)
        self.chart = None

    # --------------------------------------------------------- derivations

    def diff(self, P: MPoly, alpha: int) -> MPoly:
        """Partial derivative along the alpha-th flat coordinate."""
        name = self.coords[alpha]
        out = P.diff(name)
        if self.exp_var and name == self.exp_var[0]:
            qn = self.exp_var[1]
            out = out + MPoly.var(P.vars, qn) * P.diff(qn)
        return out

    def _trunc(self, P: MPoly) -> MPoly:
        if self.exp_var and self.qorder is not None and self.exp_var[1] in P.vars:
            return P.truncate_var(self.exp_var[1], self.qorder)
        return P

    # ------------------------------------------------------ derived tensors

    def third_derivs(self):
        """F_{abc} as a symmetric table of MPoly."""
        if "F3" in self._cache:
            return self._cache["F3"]
        n = self.n
        F1 = [self.diff(self.F, a) for a in range(n)]
        F2 = [[self.diff(F1[a], b) for b in range(n)] for a in range(n)]
        F3 = [[[self._trunc(self.diff(F2[a][b], c)) for c in range(n)]
               for b in range(n)] for a in range(n)]
        self._cache["F3"] = F3
        return F3

    def c_mixed(self):
        """Structure constants c^g_{ab} = eta^{ge} F_{eab}."""
        if "c" in self._cache:
            return self._cache["c"]
        F3 = self.third_derivs()
        n = self.n
        c = [[[_lincomb(self.eta_inv[g], [F3[e][a][b] for e in range(n)])
               for g in range(n)] for b in range(n)] for a in range(n)]
        self._cache["c"] = c
        return c

    def C_matrix(self, alpha: int):
        """Multiplication by d/dt^alpha: (C_alpha)^b_g = c^b_{alpha g}."""
        c = self.c_mixed()
        n = self.n
        return [[c[alpha][g][b] for g in range(n)] for b in range(n)]

    def euler_components(self):
        """E^a as polynomials."""
        if "E" in self._cache:
            return self._cache["E"]
        n = self.n
        out = []
        for a in range(n):
            p = MPoly.const(self.F.vars, self.euler_b[a])
            for b in range(n):
                if self.euler_a[a][b]:
                    p = p + MPoly.var(self.F.vars, self.coords[b]) * self.euler_a[a][b]
            out.append(p)
        self._cache["E"] = out
        return out

    def euler_apply(self, P: MPoly) -> MPoly:
        E = self.euler_components()
        out = MPoly.zero(P.vars)
        for a in range(self.n):
            out = out + E[a] * self.diff(P, a)
        return self._trunc(out)

    def calU(self):
        """Multiplication by the Euler field: U^a_b = E^e c^a_{eb}."""
        if "U" in self._cache:
            return self._cache["U"]
        c = self.c_mixed()
        E = self.euler_components()
        n = self.n
        U = [[self._trunc(_sumprod(E, [c[e][b][a] for e in range(n)]))
              for b in range(n)] for a in range(n)]
        self._cache["U"] = U
        return U

    def grading_operator(self):
        """V = (2-d)/2 - grad(E), an eta-antisymmetric constant matrix."""
        half = Fraction(2 - self.d, 2)
        n = self.n
        return [[(half if i == j else Fraction(0)) - self.euler_a[i][j]
                 for j in range(n)] for i in range(n)]

    def intersection_gram(self):
        """g^{ab} = E^e c_e^{ab} with c_e^{ab} = eta^{al} c^b_{el}."""
        if "g" in self._cache:
            return self._cache["g"]
        c = self.c_mixed()
        E = self.euler_components()
        n = self.n
        g = []
        for a in range(n):
            row = []
            for b in range(n):
                total = MPoly.zero(self.F.vars)
                for e in range(n):
                    for l in range(n):
                        if self.eta_inv[a][l]:
                            total = total + E[e] * c[e][l][b] * self.eta_inv[a][l]
                row.append(self._trunc(total))
            g.append(row)
        self._cache["g"] = g
        return g

    def contravariant_christoffel(self):
        """Gamma_g^{ab} = c_g^{ae} (1/2 - V)^b_e."""
        if "Gamma" in self._cache:
            return self._cache["Gamma"]
        c = self.c_mixed()
        V = self.grading_operator()
        n = self.n
        K = [[(Fraction(1, 2) if i == j else Fraction(0)) - V[i][j]
              for j in range(n)] for i in range(n)]
        Gamma = []
        for g in range(n):
            mat = []
            for a in range(n):
                row = []
                for b in range(n):
                    total = MPoly.zero(self.F.vars)
                    for e in range(n):
                        # c_g^{ae} = eta^{al} c^e_{lg}
                        if K[b][e] == 0:
                            continue
                        ce = MPoly.zero(self.F.vars)
                        for l in range(n):
                            if self.eta_inv[a][l]:
                                ce = ce + c[l][g][e] * self.eta_inv[a][l]
                        total = total + ce * K[b][e]
                    row.append(self._trunc(total))
                mat.append(row)
            Gamma.append(mat)
        self._cache["Gamma"] = Gamma
        return Gamma

    # ----------------------------------------------------------- evaluation

    def point_map(self, t, qvalue=None) -> dict:
        pt = {name: v for name, v in zip(self.coords, t)}
        if self.exp_var:
            s_name, q_name = self.exp_var
            if q_name not in pt:
                if qvalue is None:
                    sval = pt.get(s_name)
                    if sval is None:
                        raise ValueError("supply a value for the exponential variable")
                    qvalue = np.exp(sval)
                pt[q_name] = qvalue
        return pt

    def eval_matrix(self, M, t, qvalue=None) -> np.ndarray:
        pt = self.point_map(t, qvalue)
        n = len(M)
        out = np.zeros((n, len(M[0])), dtype=complex)
        for i in range(n):
            for j in range(len(M[0])):
                e = M[i][j]
                out[i, j] = complex(e.eval(pt)) if isinstance(e, MPoly) else complex(e)
        return out

    def __repr__(self):
        return f"FrobeniusManifold({self.name or self.coords}, n={self.n}, d={self.d})"


# ------------------------------------------------------------------ checks

def wdvv_check(M: FrobeniusManifold) -> CheckReport:
    """Exact associativity residual, plus the F_{1ab} = eta_{ab} normalization.

    Both must vanish identically; a manifold built with mismatched charge
    or potential shows up as a nonzero polynomial residual.
    """
    F3 = M.third_derivs()
    n = M.n
    assoc_bad = {}
    for a in range(n):
        for d_ in range(a + 1, n):
            for b in range(n):
                for g in range(n):
                    lhs = MPoly.zero(M.F.vars)
                    rhs = MPoly.zero(M.F.vars)
                    for l in range(n):
                        for m in range(n):
                            if M.eta_inv[l][m] == 0:
                                continue
                            lhs = lhs + F3[a][b][l] * F3[m][g][d_] * M.eta_inv[l][m]
                            rhs = rhs + F3[d_][b][l] * F3[m][g][a] * M.eta_inv[l][m]
                    resid = M._trunc(lhs - rhs)
                    if not resid.is_zero():
                        assoc_bad[(a, b, g, d_)] = resid
    norm_bad = {}
    for a in range(n):
        for b in range(n):
            resid = F3[0][a][b] - MPoly.const(M.F.vars, M.eta[a][b])
            if not resid.is_zero():
                norm_bad[(a, b)] = resid
    ok = not assoc_bad and not norm_bad
    return CheckReport(ok, {"associativity_residuals": assoc_bad,
                            "normalization_residuals": norm_bad})


def quasihomogeneity_check(M: FrobeniusManifold) -> CheckReport:
    """E.F - (3-d) F must be at most quadratic; returns the quadratic part."""
    excess = M.euler_apply(M.F) - M.F * (3 - M.d)
    excess = M._trunc(excess)
    ok = excess.total_degree() <= 2
    if ok and M.exp_var and M.exp_var[1] in excess.vars:
        ok = excess.degree_in(M.exp_var[1]) <= 0
    A = [[Fraction(0)] * M.n for _ in range(M.n)]
    if ok:
        for exp, coeff in excess.terms.items():
            if sum(exp) != 2:
                continue
            cidx = []
            for i, e in enumerate(exp):
                name = M.F.vars[i]
                if e and name in M.coords:
                    cidx.extend([M.coords.index(name)] * e)
            if len(cidx) != 2:
                continue
            i, j = cidx
            if i == j:
                A[i][i] += 2 * coeff
            else:
                A[i][j] += coeff
                A[j][i] += coeff
    return CheckReport(ok, {"excess": excess, "A": A})


def intersection_form(M: FrobeniusManifold) -> CheckReport:
    """g^{ab} by both formulas: E^e c_e^{ab} and the F^{ab}-V combination."""
    g = M.intersection_gram()
    n = M.n
    qh = quasihomogeneity_check(M)
    A_low = qh.data["A"]
    Ainv = [[_sum_frac(M.eta_inv[a][i] * A_low[i][j] * M.eta_inv[j][b]
                       for i in range(n) for j in range(n))
             for b in range(n)] for a in range(n)]
    F1 = [M.diff(M.F, a) for a in range(n)]
    F2 = [[M._trunc(M.diff(F1[a], b)) for b in range(n)] for a in range(n)]
    Fup = [[_mp_sum(M.F.vars,
                    [F2[i][j] * (M.eta_inv[a][i] * M.eta_inv[b][j])
                     for i in range(n) for j in range(n)
                     if M.eta_inv[a][i] and M.eta_inv[b][j]])
            for b in range(n)] for a in range(n)]
    V = M.grading_operator()
    bad = {}
    for a in range(n):
        for b in range(n):
            alt = Fup[a][b] + MPoly.const(M.F.vars, Ainv[a][b])
            for r in range(n):
                if V[a][r]:
                    alt = alt - Fup[r][b] * V[a][r]
                if V[b][r]:
                    alt = alt - Fup[a][r] * V[b][r]
            resid = M._trunc(g[a][b] - alt)
            if not resid.is_zero():
                bad[(a, b)] = resid
    sym_ok = all((g[a][b] - g[b][a]).is_zero() for a in range(n) for b in range(n))
    return CheckReport(not bad and sym_ok and qh.ok,
                       {"gram": g, "mismatch": bad, "symmetric": sym_ok})


def grading_checks(M: FrobeniusManifold) -> CheckReport:
    """V eta + eta V^T = 0 and V e = -(d/2) e, both exact."""
    V = M.grading_operator()
    n = M.n
    anti_ok = all(
        _sum_frac(V[i][k] * M.eta[k][j] for k in range(n))
        + _sum_frac(M.eta[i][k] * V[j][k] for k in range(n)) == 0
        for i in range(n) for j in range(n)
    )
    ve = [V[i][0] for i in range(n)]
    e_ok = all(ve[i] == (-M.d / 2 if i == 0 else 0) for i in range(n))
    return CheckReport(anti_ok and e_ok, {"antisymmetric": anti_ok, "unit_eigen": e_ok})


# ------------------------------------------------------------------ helpers

def _frac_inverse(mat):
    rows = [[Fraction(x) for x in row] for row in mat]
    return exact_inverse(rows)


def _lincomb(weights, polys):
    total = MPoly.zero(polys[0].vars)
    for w, p in zip(weights, polys):
        if w:
            total = total + p * w
    return total


def _sumprod(polys1, polys2):
    total = MPoly.zero(polys1[0].vars)
    for p, q in zip(polys1, polys2):
        total = total + p * q
    return total


def _mp_sum(variables, polys):
    total = MPoly.zero(variables)
    for p in polys:
        total = total + p
    return total


def _sum_frac(it):
    total = Fraction(0)
    for x in it:
        total += x
    return total
