"""Builders for the concrete Frobenius manifolds and root systems.

The A_n family is built from scratch: flat coordinates by series
inversion of k = f**(1/(n+1)), the product by reduction in the quotient
ring C[x]/(f'), and the potential by homotopy integration of the third
derivatives.  The metric is read off the Euclidean realization on the
zero-sum hyperplane (the derivative along the top coordinate of the
induced contravariant form), which keeps every module normalized against
the same geometry.  Coordinates are rescaled so the metric is
antidiagonal with unit entries wherever a rational scaling exists and the
bottom coordinate equals sum(z^2)/(2h) on the hyperplane.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import (CycNum, MPoly, QSeries, RatFun, exact_inverse,
                    poly_invert_series, sqrt2)
from .core.manifold import FrobeniusManifold


# ----------------------------------------------------------------- algebras

class FrobeniusAlgebra:
    """Finite-dimensional commutative Frobenius algebra over Q.

    ``mult[i][j][k]`` is the coefficient of e_k in e_i * e_j; ``pairing``
    is the invariant bilinear form, ``unity`` the coordinates of the unit
    element.  Commutativity, associativity, and invariance are checked
    exhaustively at construction.
    """

    def __init__(self, mult, pairing, unity):
        self.n = len(mult)
        self.mult = [[[Fraction(x) for x in row] for row in mat] for mat in mult]
        self.pairing = [[Fraction(x) for x in row] for row in pairing]
        self.unity = [Fraction(x) for x in unity]
        n = self.n
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.mult[i][j][k] != self.mult[j][i][k]:
                        raise ValueError("multiplication is not commutative")
        for i in range(n):
            for j in range(n):
                for l in range(n):
                    for m in range(n):
                        lhs = sum(self.mult[i][j][k] * self.mult[k][l][m]
                                  for k in range(n))
                        rhs = sum(self.mult[j][l][k] * self.mult[i][k][m]
                                  for k in range(n))
                        if lhs != rhs:
                            raise ValueError("multiplication is not associative")
        for i in range(n):
            basis = [Fraction(1 if r == i else 0) for r in range(n)]
            if self.apply(self.unity, basis) != basis:
                raise ValueError("unity element is wrong")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = sum(self.mult[i][j][r] * self.pairing[r][k] for r in range(n))
                    rhs = sum(self.mult[j][k][r] * self.pairing[i][r] for r in range(n))
                    if lhs != rhs:
                        raise ValueError("pairing is not invariant")

    def apply(self, u, v):
        n = self.n
        return [sum(u[i] * v[j] * self.mult[i][j][k] for i in range(n)
                    for j in range(n)) for k in range(n)]


def trivial_manifold(A: FrobeniusAlgebra) -> FrobeniusManifold:
    """Trivial Frobenius manifold over an algebra: F = <t*t*t, 1>/6, d = 0."""
    n = A.n
    basis = [list(A.unity)]
    for i in range(n):
        cand = [Fraction(1 if r == i else 0) for r in range(n)]
        if _rank(basis + [cand]) == len(basis) + 1:
            basis.append(cand)
        if len(basis) == n:
            break
    B = [[basis[a][r] for a in range(n)] for r in range(n)]     # old <- new
    Binv = exact_inverse(B)
    mult = [[[sum(B[r][a] * B[s][b] * A.mult[r][s][m] * Binv[c][m]
                  for r in range(n) for s in range(n) for m in range(n))
              for c in range(n)] for b in range(n)] for a in range(n)]
    pairing = [[sum(B[r][a] * B[s][b] * A.pairing[r][s]
                    for r in range(n) for s in range(n))
                for b in range(n)] for a in range(n)]
    coords = tuple(f"t{i+1}" for i in range(n))
    terms: dict = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                cab = sum(mult[a][b][m] * pairing[m][c] for m in range(n))
                if cab:
                    e = [0] * n
                    e[a] += 1
                    e[b] += 1
                    e[c] += 1
                    terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + Fraction(cab, 6)
    F = MPoly(coords, terms)
    eye = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    return FrobeniusManifold(coords, 0, F, pairing, eye, name="trivial")


def _rank(rows):
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    for c in range(len(rows[0])):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# -------------------------------------------------------------- A_n family

@dataclass
class AnChart:
    """Euclidean realization of the A_n orbit space on sum(z) = 0."""

    n: int
    zvars: tuple
    t_of_z: list                 # flat coordinates as polynomials in z1..zn
    jac: list                    # d t^a / d z_c
    jac_det: MPoly
    jac_inv: list                # d z_c / d t^a as RatFun, [c][a]
    G_cov: list                  # covariant Gram of the z-coordinates
    G_contra: list
    roots: list                  # positive-root covectors in the z-chart
    e_field_dens: list           # f'(z_a) = prod_{b != a} (z_a - z_b)

    def pencil_gram(self):
        """(dt^a, dt^b) under the Euclidean form, as z-polynomials."""
        n = self.n
        out = []
        for a in range(n):
            row = []
            for b in range(n):
                total = MPoly.zero(self.zvars)
                for c in range(n):
                    for d_ in range(n):
                        if self.G_contra[c][d_]:
                            total = total + (self.jac[a][c] * self.jac[b][d_]
                                             * self.G_contra[c][d_])
                row.append(total)
            out.append(row)
        return out


def _binom_frac(a: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for i in range(m):
        out *= (a - i) / (i + 1)
    return out


def an_inversion(n: int, order: int):
    """Raw flat coordinates of the A_n unfolding as polynomials of a_1..a_n.

    t^{n+1-j} is h times the k^{-j} coefficient of the inverse expansion
    x(k) of k = f^{1/h}; returns the list t[alpha-1] plus the full inverse
    series.
    """
    h = n + 1
    avars = tuple(f"a{i+1}" for i in range(n))
    zero = MPoly.zero(avars)
    one = MPoly.const(avars, 1)
    ucoeffs = [zero, zero] + [MPoly.var(avars, v) for v in avars]
    u = QSeries("w", order, ucoeffs[: order + 1])
    k = QSeries.const("w", order, one)
    upow = QSeries.const("w", order, one)
    m = 1
    while 2 * m <= order:
        upow = upow * u
        k = k + upow * _binom_frac(Fraction(1, h), m)
        m += 1
    g = poly_invert_series(k, order)
    # x(k) = k*(1 + sum g_j k^-j) = k + g_1 + g_2/k + ..., so the k^{-j}
    # coefficient is g_{j+1} and t^{n+1-j} = h*g_{j+1}
    t_of_a = [g.coeffs[n + 2 - alpha] * h for alpha in range(1, n + 1)]
    return t_of_a, g


def _solve_a_of_t(n: int, t_of_a, tvars, sigmas):
    """Invert t(a) for a(t~) where t~^a = sigma_a * t^a (scaled coordinates)."""
    avars = t_of_a[0].vars
    amap: dict = {}
    t_polys = [MPoly.var(tvars, v) for v in tvars]
    for j in range(1, n + 1):
        alpha = n + 1 - j
        expr = t_of_a[alpha - 1]            # = -a_j + (terms in a_1..a_{j-1})
        rest = expr + MPoly.var(avars, f"a{j}")
        for i in range(j, n + 1):
            if rest.degree_in(f"a{i}") > 0:
                raise AssertionError("inversion is not triangular")
        subs_map = dict(amap)
        for i in range(j, n + 1):
            subs_map[f"a{i}"] = MPoly.zero(tvars)
        rest_t = rest.subs(subs_map)
        amap[f"a{j}"] = rest_t - t_polys[alpha - 1] * (Fraction(1) / sigmas[alpha - 1])
    return [amap[f"a{j}"] for j in range(1, n + 1)]


def _xpoly_mul(p, q, tvars):
    out = [MPoly.zero(tvars) for _ in range(len(p) + len(q) - 1)]
    for i, pi in enumerate(p):
        if pi.is_zero():
            continue
        for j, qj in enumerate(q):
            if qj.is_zero():
                continue
            out[i + j] = out[i + j] + pi * qj
    return out


def _xpoly_divmod(p, d, tvars):
    """Divide by d whose leading coefficient is a nonzero rational constant."""
    p = list(p)
    lead = d[-1].constant_term()
    q = [MPoly.zero(tvars) for _ in range(max(len(p) - len(d) + 1, 0))]
    for k in range(len(p) - len(d), -1, -1):
        c = p[k + len(d) - 1] * (Fraction(1) / lead)
        q[k] = c
        if not c.is_zero():
            for j, dj in enumerate(d):
                p[k + j] = p[k + j] - c * dj
    while len(p) > 1 and p[-1].is_zero():
        p.pop()
    return q, p


def _an_structure(n: int, order: int, sigmas):
    """Unfolding data for A_n at the given coordinate scalings."""
    tvars = tuple(f"t{i+1}" for i in range(n))
    t_of_a, _ = an_inversion(n, order)
    a_of_t = _solve_a_of_t(n, t_of_a, tvars, sigmas)
    f = [a_of_t[n - 1 - i] for i in range(n)] + [MPoly.zero(tvars), MPoly.const(tvars, 1)]
    fprime = [f[k + 1] * (k + 1) for k in range(n + 1)]
    phi = []
    for alpha in range(n):
        col = [f[k].diff(tvars[alpha]) for k in range(len(f))]
        while len(col) > 1 and col[-1].is_zero():
            col.pop()
        phi.append(col)
    for alpha in range(n):
        if len(phi[alpha]) != alpha + 1 or not phi[alpha][-1].is_constant():
            raise AssertionError("flat-coordinate basis is not triangular")
    rho = Fraction(1) / phi[0][0].constant_term()
    return tvars, a_of_t, f, fprime, phi, rho


def _milnor_products(n, tvars, fprime, phi, rho):
    """Structure constants c^g_{ab} and the division quotients K_{ab}."""
    c = [[[None] * n for _ in range(n)] for _ in range(n)]
    K = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            prod = _xpoly_mul(phi[a], phi[b], tvars)
            q, r = _xpoly_divmod(prod, fprime, tvars)
            K[a][b] = K[b][a] = q
            r = r + [MPoly.zero(tvars)] * (n - len(r))
            m = [MPoly.zero(tvars) for _ in range(n)]
            for deg in range(n - 1, -1, -1):
                lead = phi[deg][-1].constant_term()
                coef = r[deg] * (Fraction(1) / lead)
                m[deg] = coef
                for j in range(len(phi[deg])):
                    r[j] = r[j] - coef * phi[deg][j]
            if any(not x.is_zero() for x in r):
                raise AssertionError("Milnor reduction failed")
            for g in range(n):
                val = m[g] * rho
                c[a][b][g] = val
                c[b][a][g] = val
    return c, K


def invariant_metric_family(c_mixed, n, tvars):
    """All l with eta_{ab} = sum_g c^g_{ab} l_g constant (test oracle)."""
    rows = []
    consts = {}
    zero_exp = (0,) * len(tvars)
    for a in range(n):
        for b in range(a, n):
            polys = [c_mixed[a][b][g] for g in range(n)]
            monos = set()
            for p in polys:
                monos.update(p.terms)
            for e in monos:
                if e == zero_exp:
                    continue
                rows.append([p.terms.get(e, Fraction(0)) for p in polys])
            consts[(a, b)] = [p.terms.get(zero_exp, Fraction(0)) for p in polys]
    basis = _nullspace(rows, n)
    metrics = []
    for l in basis:
        eta = [[Fraction(0)] * n for _ in range(n)]
        for (a, b), coeffs in consts.items():
            eta[a][b] = sum(cc * w for cc, w in zip(coeffs, l))
            eta[b][a] = eta[a][b]
        metrics.append(eta)
    return metrics


def _nullspace(rows, n):
    mat = [list(r) for r in rows if any(x != 0 for x in r)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fcol]
        basis.append(v)
    return basis


def _integrate_potential(n, tvars, F3):
    """Homotopy integration: the polynomial with third derivatives F3."""
    seen: dict = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for exp, coef in F3[a][b][c].terms.items():
                    k = sum(exp)
                    e = list(exp)
                    e[a] += 1
                    e[b] += 1
                    e[c] += 1
                    w = coef / ((k + 1) * (k + 2) * (k + 3))
                    key = tuple(e)
                    seen[key] = seen.get(key, Fraction(0)) + w
    return MPoly(tvars, seen)


def _chart_metric(chart: AnChart, sample):
    """eta^{ab} = d/dt^1 of the chart's contravariant pencil form."""
    n = chart.n
    P = chart.pencil_gram()
    pt = {v: x for v, x in zip(chart.zvars, sample)}
    det = chart.jac_det.eval(pt)
    if det == 0:
        raise ValueError("sample hits the discriminant")
    adj_col = [chart.jac_inv[c][0] for c in range(n)]
    eta = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            total = Fraction(0)
            for c in range(n):
                total += adj_col[c].eval(pt) * P[a][b].diff(chart.zvars[c]).eval(pt)
            eta[a][b] = total
    return eta


def _build_chart(n: int, tvars, sigmas, order: int) -> AnChart:
    zvars = tuple(f"z{i+1}" for i in range(n))
    zpolys = [MPoly.var(zvars, v) for v in zvars]
    z0 = MPoly.zero(zvars)
    for p in zpolys:
        z0 = z0 - p
    allz = [z0] + zpolys
    a_of_z = []
    for j in range(1, n + 1):
        e = _elementary_symmetric(allz, j + 1, zvars)
        a_of_z.append(e if (j + 1) % 2 == 0 else -e)
    t_raw, _ = an_inversion(n, order)
    amap = {f"a{j}": a_of_z[j - 1] for j in range(1, n + 1)}
    t_of_z = [t_raw[alpha].subs(amap) * sigmas[alpha] for alpha in range(n)]
    jac = [[t_of_z[a].diff(zvars[c]) for c in range(n)] for a in range(n)]
    det = _mpoly_det(jac, zvars)
    adj = _mpoly_adjugate(jac, zvars)
    jac_inv = [[RatFun(adj[c][a], det) for a in range(n)] for c in range(n)]
    G_cov = [[Fraction(1 + (1 if i == j else 0)) for j in range(n)] for i in range(n)]
    G_contra = exact_inverse(G_cov)
    roots = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            cov = [Fraction(0)] * n
            if i == 0:
                for r in range(n):
                    cov[r] -= 1
                cov[j - 1] -= 1
            else:
                cov[i - 1] += 1
                cov[j - 1] -= 1
            roots.append(cov)
    e_dens = []
    for a in range(1, n + 1):
        prod = MPoly.const(zvars, 1)
        for b in range(n + 1):
            if b != a:
                prod = prod * (allz[a] - allz[b])
        e_dens.append(prod)
    return AnChart(n, zvars, t_of_z, jac, det, jac_inv, G_cov, G_contra,
                   roots, e_dens)


def _square_split(v: Fraction):
    """v = r**2 * s with s a squarefree integer ratio; returns (r, s)."""
    def split_int(m: int):
        r, s = 1, 1
        d = 2
        while d * d <= m:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            r *= d ** (e // 2)
            if e % 2:
                s *= d
            d += 1
        return r, s * m
    sign = 1 if v > 0 else -1
    rn, sn = split_int(abs(v.numerator))
    rd, sd = split_int(v.denominator)
    return Fraction(rn, rd), Fraction(sn * sign, sd)


def an_orbit_space(n: int, order: int | None = None) -> FrobeniusManifold:
    """The polynomial Frobenius manifold of the A_n unfolding.

    Normalizations: the unity is the first coordinate, eta is antidiagonal
    with entries 1 up to a possible squarefree middle entry, and the
    bottom coordinate equals sum(z_i^2)/(2h) on the zero-sum hyperplane,
    which makes the attached Euclidean chart an exact realization of the
    intersection form.
    """
    if not 1 <= n <= 6:
        raise ValueError("supported range is 1 <= n <= 6")
    h = n + 1
    if order is None:
        order = n + 4
    if order < n + 2:
        raise ValueError(f"inversion order must be at least {n + 2}")

    sample = [Fraction(2 ** (i + 1) + i) for i in range(n)]

    # pass 1: provisional scalings, metric read off the Euclidean chart
    sig = [Fraction(1)] * n
    sig[n - 1] = Fraction(1, h)
    tvars = tuple(f"t{i+1}" for i in range(n))
    chart = _build_chart(n, tvars, sig, order)
    eta0c = _chart_metric(chart, sample)
    eta0 = exact_inverse(eta0c)
    for a in range(n):
        for b in range(n):
            if a + b != n - 1 and eta0[a][b] != 0:
                raise AssertionError("chart metric is not antidiagonal")

    # rescale t^a by r_a so the antidiagonal becomes 1 (middle: squarefree)
    r = [None] * n
    r[n - 1] = Fraction(1)
    mid = (n - 1) // 2 if n % 2 == 1 else None
    if mid is not None and r[mid] is None:
        root, _rest = _square_split(eta0[mid][mid])
        r[mid] = root
    for a in range(n):
        b = n - 1 - a
        if r[a] is not None:
            continue
        if r[b] is not None:
            r[a] = eta0[a][b] / r[b]
        else:
            r[b] = Fraction(1)
            r[a] = eta0[a][b]
    sig = [sig[a] * r[a] for a in range(n)]

    # pass 2: final build
    tvars, a_of_t, f, fprime, phi, rho = _an_structure(n, order, sig)
    c, K = _milnor_products(n, tvars, fprime, phi, rho)
    chart = _build_chart(n, tvars, sig, order)
    eta_c = _chart_metric(chart, sample)
    eta = exact_inverse(eta_c)
    for a in range(n):
        b = n - 1 - a
        if a != b and eta[a][b] != 1:
            raise AssertionError(f"metric normalization failed: eta[{a}][{b}] = {eta[a][b]}")

    F3 = [[[
        _mpoly_dot(eta, c, a, b, g, n, tvars)
        for g in range(n)] for b in range(n)] for a in range(n)]
    for a in range(n):
        for b in range(n):
            for g in range(n):
                if not (F3[a][b][g] - F3[g][a][b]).is_zero():
                    raise AssertionError("third-derivative tensor is not symmetric")
    F = _integrate_potential(n, tvars, F3)

    euler_a = [[Fraction(n + 2 - (a + 1), h) if a == b else Fraction(0)
                for b in range(n)] for a in range(n)]
    d = Fraction(n - 1, n + 1)
    M = FrobeniusManifold(tvars, d, F, eta, euler_a, name=f"a{n}")
    M.chart = chart
    M._an_data = {"f": f, "fprime": fprime, "phi": phi, "K": K, "rho": rho,
                  "sigmas": sig, "order": order, "a_of_t": a_of_t,
                  "c_milnor": c}
    return M


def _mpoly_dot(eta, c, a, b, g, n, tvars):
    total = MPoly.zero(tvars)
    for e in range(n):
        if eta[g][e]:
            total = total + c[a][b][e] * eta[g][e]
    return total


def _elementary_symmetric(zpolys, k, tvars):
    total = MPoly.zero(tvars)
    for combo in itertools.combinations(range(len(zpolys)), k):
        term = MPoly.const(tvars, 1)
        for i in combo:
            term = term * zpolys[i]
        total = total + term
    return total


def _mpoly_det(M, tvars):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = MPoly.zero(tvars)
    for perm in itertools.permutations(range(n)):
        term = MPoly.const(tvars, _perm_sign(perm))
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total + term
    return total


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _mpoly_adjugate(M, tvars):
    n = len(M)
    if n == 1:
        return [[MPoly.const(tvars, 1)]]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            sign = 1 if (i + j) % 2 == 0 else -1
            out[j][i] = _mpoly_det(minor, tvars) * sign
    return out


# ------------------------------------------------------------ QH*(CP^1)

def qh_cp1(order: int = 8) -> FrobeniusManifold:
    """Quantum cohomology of CP^1: F = t1^2 s / 2 + e^s, truncated in Q = e^s."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coords = ("t1", "s")
    fvars = ("t1", "s", "Q")
    F = (MPoly.var(fvars, "t1") ** 2 * MPoly.var(fvars, "s") * Fraction(1, 2)
         + MPoly.var(fvars, "Q"))
    eta = [[0, 1], [1, 0]]
    euler_a = [[1, 0], [0, 0]]
    euler_b = [0, 2]
    return FrobeniusManifold(coords, 1, F, eta, euler_a, euler_b,
                             exp_var=("s", "Q"), qorder=order, name="cp1")


# ------------------------------------------------------------ root systems

class RootSystem:
    """Positive roots in an orthonormal ambient chart, all of squared length 2.

    Entries are Fractions (A family) or cyclotomic numbers (dihedral, B, H
    families need sqrt(2), sqrt(3), or the golden ratio), so Gram data and
    mirror evaluations stay exact.
    """

    def __init__(self, tag, rank, h, roots, simple, conductor=1):
        self.tag = tag
        self.rank = rank
        self.h = h
        self.roots = roots
        self.simple = simple
        self.conductor = conductor
        self.dim = len(roots[0])
        if 2 * len(roots) != rank * h:
            raise AssertionError(
                f"{tag}: {len(roots)} positive roots, expected {Fraction(rank * h, 2)}")
        for r in roots:
            if not _is_two(self.dot(r, r)):
                raise AssertionError(f"{tag}: root has squared length != 2")

    def dot(self, u, v):
        total = None
        for a, b in zip(u, v):
            t = a * b
            total = t if total is None else total + t
        return total

    def simple_gram(self):
        return [[self.dot(a, b) for b in self.simple] for a in self.simple]

    def scaled(self, index: int, factor) -> "RootSystem":
        """Copy with one root rescaled (negative control; skips invariants)."""
        roots = [list(r) for r in self.roots]
        roots[index] = [x * factor for x in roots[index]]
        out = RootSystem.__new__(RootSystem)
        out.tag = f"{self.tag}-perturbed"
        out.rank, out.h = self.rank, self.h
        out.roots, out.simple = roots, self.simple
        out.conductor, out.dim = self.conductor, self.dim
        return out

    def __repr__(self):
        return f"RootSystem({self.tag}, rank={self.rank}, h={self.h})"


def _is_two(x) -> bool:
    if isinstance(x, CycNum):
        return x == 2
    return Fraction(x) == 2


def root_system(tag: str) -> RootSystem:
    """Shipped systems: a1..a4, b2, b3, g2, i2-3 .. i2-10, h3."""
    tag = tag.lower().replace("_", "-")
    if tag.startswith("a") and tag[1:].isdigit():
        n = int(tag[1:])
        if not 1 <= n <= 4:
            raise ValueError("A_n shipped for 1 <= n <= 4")
        roots = []
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                v = [Fraction(0)] * (n + 1)
                v[i], v[j] = Fraction(1), Fraction(-1)
                roots.append(v)
        simple = []
        for k in range(n):
            v = [Fraction(0)] * (n + 1)
            v[k], v[k + 1] = Fraction(1), Fraction(-1)
            simple.append(v)
        return RootSystem(f"A{n}", n, n + 1, roots, simple)
    if tag == "b2":
        return _dihedral(4, "B2")
    if tag == "g2":
        return _dihedral(6, "G2")
    if tag.startswith("i2-"):
        m = int(tag[3:])
        if not 3 <= m <= 10:
            raise ValueError("I2(m) shipped for 3 <= m <= 10")
        return _dihedral(m, f"I2({m})")
    if tag == "b3":
        s2 = sqrt2(8)
        zero = CycNum.from_int(8, 0)
        one = CycNum.from_int(8, 1)
        roots = []
        for i in range(3):
            v = [zero] * 3
            v[i] = s2
            roots.append(v)
        for i in range(3):
            for j in range(i + 1, 3):
                for sgn in (1, -1):
                    v = [zero] * 3
                    v[i] = one
                    v[j] = one * sgn
                    roots.append(v)
        simple = [[one, -one, zero], [zero, one, -one], [zero, zero, s2]]
        return RootSystem("B3", 3, 6, roots, simple, conductor=8)
    if tag == "h3":
        return _h3()
    raise ValueError(f"unknown root system {tag!r}")


def _dihedral(m: int, tag: str) -> RootSystem:
    """I_2(m): roots sqrt(2)*(cos(k pi/m), sin(k pi/m)), k = 0..m-1."""
    N = (2 * m) * 8 // gcd(2 * m, 8)
    s2 = sqrt2(N)
    z = CycNum.zeta(2 * m).lift(N)
    half = Fraction(1, 2)
    minus_i = CycNum.zeta(8, 6).lift(N)          # zeta_8^6 = -i
    roots = []
    for k in range(m):
        zk = z ** k
        zmk = z ** ((2 * m - k) % (2 * m))
        cosv = (zk + zmk) * half
        sinv = (zk - zmk) * half * minus_i
        roots.append([s2 * cosv, s2 * sinv])
    simple = [roots[0], roots[m - 1]]
    return RootSystem(tag, 2, m, roots, simple, conductor=N)


def _h3() -> RootSystem:
    """Icosahedral H_3 (h = 10) over Q(zeta_40): sqrt(2) and the golden ratio."""
    N = 40
    s2 = sqrt2(N)
    tau = (CycNum.from_int(N, 1) + _sqrt5(N)) * Fraction(1, 2)
    taui = tau - 1                                  # 1/tau = tau - 1
    zero = CycNum.from_int(N, 0)
    one = CycNum.from_int(N, 1)
    half = Fraction(1, 2)
    cands = []
    for i in range(3):
        v = [zero] * 3
        v[i] = one
        cands.append(v)
    base = [one * half, tau * half, taui * half]
    for signs in itertools.product((1, -1), repeat=3):
        for rot in range(3):
            v = [base[(k - rot) % 3] * signs[(k - rot) % 3] for k in range(3)]
            cands.append(v)
    seen = set()
    pos = []
    for v in cands:
        key = tuple((c.m, c.coeffs) for c in v)
        nkey = tuple((c.m, (-c).coeffs) for c in v)
        if key in seen or nkey in seen:
            continue
        seen.add(key)
        seen.add(nkey)
        emb = [c.embed().real for c in v]
        height = emb[0] + emb[1] * 0.01 + emb[2] * 0.0001
        if height < 0:
            v = [-c for c in v]
        pos.append([c * s2 for c in v])
    simple = _detect_simple_roots(pos)
    return RootSystem("H3", 3, 10, pos, simple, conductor=N)


def _detect_simple_roots(pos):
    """Simple roots: a subset whose nonnegative span contains all of Delta+.

    Works for noncrystallographic systems too (combination coefficients
    need not be integers).  Selection is numeric; the returned vectors are
    the exact ones.
    """
    import numpy as np
    emb = [np.array([complex(c.embed()).real for c in v]) for v in pos]
    dim = len(emb[0])
    for combo in itertools.combinations(range(len(pos)), dim):
        B = np.array([emb[i] for i in combo]).T
        if abs(np.linalg.det(B)) < 1e-9:
            continue
        ok = True
        for w in emb:
            coeff = np.linalg.solve(B, w)
            if np.any(coeff < -1e-9):
                ok = False
                break
        if ok:
            return [pos[i] for i in combo]
    raise AssertionError("no simple system found among the positive roots")


def _sqrt5(conductor: int) -> CycNum:
    if conductor % 5:
        raise ValueError("conductor must be a multiple of 5")
    z = CycNum.zeta(5).lift(conductor)
    return CycNum.from_int(conductor, 1) + (z + z ** 4) * 2
