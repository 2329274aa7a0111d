"""Twisted-period monodromy: Fuchsian continuation, Stokes data, Shephard groups.

The Fuchsian system d(phi)/d(lambda) = sum_i A_i/(lambda - u_i) phi with
A_i = E_i(nu - 1/2 - V) is solved by Frobenius series at each singular
point and continued numerically.  Monodromy matrices are produced in the
basis of the singled-out solutions and compared with the reflection model
built from a root system's Stokes matrix; the same model matrices over a
cyclotomic field generate the Shephard groups by exact closure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.special import gamma as _gamma

from .exact import CycNum, MPoly, exact_det
from .numint import continue_circle, continue_linear
from .core.frame import CanonicalFrame


# ------------------------------------------------------------ problem setup

@dataclass
class MonodromyProblem:
    u: np.ndarray
    V: np.ndarray
    nu: Fraction
    phi_angle: float
    A: list
    base_point: complex
    ode_tol: float = 1e-11

    @property
    def n(self) -> int:
        return len(self.u)

    def system(self, lam: complex) -> np.ndarray:
        out = np.zeros_like(self.A[0])
        for i in range(self.n):
            out = out + self.A[i] / (lam - self.u[i])
        return out


def assemble_fuchsian(frame: CanonicalFrame, nu, base_point: complex | None = None,
                      ode_tol: float = 1e-11) -> MonodromyProblem:
    """A_i = E_i(nu - 1/2 - V); rank <= 1 and trace nu - 1/2 by construction."""
    nu = Fraction(nu)
    n = len(frame.u)
    V = frame.V
    A = []
    for i in range(n):
        Ai = np.zeros((n, n), dtype=complex)
        Ai[i, :] = -V[i, :]
        Ai[i, i] += float(nu) - 0.5
        A.append(Ai)
        if np.linalg.matrix_rank(Ai, tol=1e-12) > 1:
            raise AssertionError("residue matrix has rank > 1")
    if base_point is None:
        center = np.mean(frame.u)
        spread = max(abs(ui - center) for ui in frame.u) + 1.0
        down = -1j * np.exp(-1j * frame.phi_angle)
        base_point = complex(center + 3.0 * spread * down)
    return MonodromyProblem(np.array(frame.u, dtype=complex), V, nu,
                            frame.phi_angle, A, base_point, ode_tol)


class ResonantNuError(ValueError):
    """nu in Z + 1/2 beyond the shipped nu = 1/2 logarithmic branch.

    Higher resonances would need the derivative map d^m/d lambda^m sending
    L(1/2) to L(1/2 - m) and the dual pairing for L(m + 1/2); not shipped.
    """


# ----------------------------------------------------------- local solutions

def _branch_power(w: complex, expo: float, theta_cut: float) -> complex:
    theta = np.angle(w)
    while theta <= theta_cut:
        theta += 2 * np.pi
    while theta > theta_cut + 2 * np.pi:
        theta -= 2 * np.pi
    return (abs(w) ** expo) * np.exp(1j * expo * theta)


def _branch_log(w: complex, theta_cut: float) -> complex:
    theta = np.angle(w)
    while theta <= theta_cut:
        theta += 2 * np.pi
    while theta > theta_cut + 2 * np.pi:
        theta -= 2 * np.pi
    return math.log(abs(w)) + 1j * theta


def local_series(P: MonodromyProblem, i: int, nterms: int = 80,
                 normalized: bool = True):
    """Frobenius-series coefficients of phi^{(i)} around u_i.

    Returns (rho, [c_0, c_1, ...]) with phi = w**rho * sum c_k w**k,
    w = u_i - lambda.  For nu = 1/2 use ``local_pair`` instead.
    """
    nu = P.nu
    if nu != Fraction(1, 2) and (nu - Fraction(1, 2)).denominator == 1:
        raise ResonantNuError(f"nu = {nu} resonant; only nu = 1/2 is shipped")
    n = P.n
    rho = float(nu) - 0.5
    norm = math.sqrt(2 * math.pi) / _gamma(0.5 + float(nu)) if normalized else 1.0
    c0 = np.zeros(n, dtype=complex)
    c0[i] = norm
    B = _pole_expansion(P, i, nterms)
    coeffs = [c0]
    eye = np.eye(n)
    for k in range(1, nterms + 1):
        rhs = np.zeros(n, dtype=complex)
        for m in range(k):
            rhs -= B[m] @ coeffs[k - 1 - m]
        coeffs.append(np.linalg.solve((k + rho) * eye - P.A[i], rhs))
    return rho, coeffs


def local_pair(P: MonodromyProblem, i: int, nterms: int = 80, norm: float = 1.0):
    """nu = 1/2: the analytic solution phi^{(i)} and its log partner chi^{(i)}.

    chi = log(u_i - lambda) phi + delta with [V delta(u_i)]_i = -1 (for the
    unnormalized phi; scaling phi scales delta along).
    """
    if P.nu != Fraction(1, 2):
        raise ValueError("log pair only exists at nu = 1/2")
    n = P.n
    B = _pole_expansion(P, i, nterms)
    eye = np.eye(n)
    phi0 = np.zeros(n, dtype=complex)
    phi0[i] = norm
    phis = [phi0]
    for k in range(1, nterms + 1):
        rhs = np.zeros(n, dtype=complex)
        for m in range(k):
            rhs -= B[m] @ phis[k - 1 - m]
        phis.append(np.linalg.solve(k * eye - P.A[i], rhs))
    # delta_0: A_i delta_0 = phi_0, i.e. -(V delta_0)_i = norm
    row = -P.V[i, :]
    delta0 = np.zeros(n, dtype=complex)
    j = int(np.argmax(np.abs(row)))
    if abs(row[j]) < 1e-14:
        raise AssertionError("V row vanishes; logarithmic partner degenerates")
    delta0[j] = norm / row[j]
    deltas = [delta0]
    for k in range(1, nterms + 1):
        rhs = -phis[k].astype(complex)
        for m in range(k):
            rhs -= B[m] @ deltas[k - 1 - m]
        deltas.append(np.linalg.solve(k * eye - P.A[i], rhs))
    return phis, deltas


def _pole_expansion(P: MonodromyProblem, i: int, nterms: int):
    """B_m = sum_{j != i} A_j / (u_i - u_j)**(m+1)."""
    n = P.n
    out = []
    for m in range(nterms + 1):
        Bm = np.zeros((n, n), dtype=complex)
        for j in range(n):
            if j != i:
                Bm += P.A[j] / (P.u[i] - P.u[j]) ** (m + 1)
        out.append(Bm)
    return out


def _series_radius(P: MonodromyProblem, i: int) -> float:
    return min(abs(P.u[i] - P.u[j]) for j in range(P.n) if j != i)


def eval_local(P: MonodromyProblem, i: int, lam: complex, nterms: int = 80,
               normalized: bool = True) -> np.ndarray:
    """phi^{(i)}(lambda) inside the convergence disk, on the fixed branch."""
    rho, coeffs = local_series(P, i, nterms, normalized)
    w = P.u[i] - lam
    theta_cut = -np.pi / 2 - P.phi_angle
    head = _branch_power(w, rho, theta_cut) * np.exp(1j * 0)
    total = np.zeros(P.n, dtype=complex)
    wp = 1.0 + 0j
    for c in coeffs:
        total += c * wp
        wp *= w
    return head * total


def eval_local_pair(P: MonodromyProblem, i: int, lam: complex, nterms: int = 80,
                    norm: float = 1.0):
    phis, deltas = local_pair(P, i, nterms, norm)
    w = P.u[i] - lam
    theta_cut = -np.pi / 2 - P.phi_angle
    lw = _branch_log(w, theta_cut)
    phi = np.zeros(P.n, dtype=complex)
    delta = np.zeros(P.n, dtype=complex)
    wp = 1.0 + 0j
    for pk, dk in zip(phis, deltas):
        phi += pk * wp
        delta += dk * wp
        wp *= w
    return phi, lw * phi + delta


# ------------------------------------------------------------- continuation

def _safe_path(P: MonodromyProblem, start: complex, end: complex, avoid=None,
               depth: int = 0):
    """Waypoints from start to end keeping clear of the singular points."""
    avoid = avoid if avoid is not None else range(P.n)
    if depth > 6:
        return [start, end]
    seg = end - start
    L = abs(seg)
    if L == 0:
        return [start, end]
    for j in avoid:
        uj = P.u[j]
        tau = np.clip(((uj - start) / seg).real, 0.0, 1.0)
        closest = start + tau * seg
        clearance = 0.25 * _series_radius(P, j)
        if abs(closest - uj) < clearance and 0.0 < tau < 1.0:
            normal = (closest - uj)
            if abs(normal) < 1e-12:
                normal = 1j * seg / L
            normal = normal / abs(normal)
            way = uj + 1.5 * clearance * normal
            return (_safe_path(P, start, way, avoid, depth + 1)[:-1]
                    + _safe_path(P, way, end, avoid, depth + 1))
    return [start, end]


def solution_at_base(P: MonodromyProblem, i: int, nterms: int = 80,
                     normalized: bool = True) -> np.ndarray:
    """phi^{(i)} continued from its local disk to the base point."""
    r = _series_radius(P, i)
    direction = (P.base_point - P.u[i]) / abs(P.base_point - P.u[i])
    seed = P.u[i] + 0.45 * r * direction
    y0 = eval_local(P, i, seed, nterms, normalized)
    path = _safe_path(P, seed, P.base_point, avoid=[j for j in range(P.n) if j != i])
    return continue_linear(P.system, y0, path, rtol=P.ode_tol)


def fundamental_matrix(P: MonodromyProblem, nterms: int = 80,
                       normalized: bool = True) -> np.ndarray:
    cols = [solution_at_base(P, i, nterms, normalized) for i in range(P.n)]
    return np.array(cols).T


def loop_continue(P: MonodromyProblem, Y: np.ndarray, i: int,
                  min_steps: int = 720) -> np.ndarray:
    """Continue columns of Y around u_i counter-clockwise, back to base."""
    r = _series_radius(P, i) / 3.0
    direction = (P.base_point - P.u[i]) / abs(P.base_point - P.u[i])
    start = P.u[i] + r * direction
    path_in = _safe_path(P, P.base_point, start,
                         avoid=[j for j in range(P.n) if j != i])
    theta0 = float(np.angle(direction))
    out = np.array(Y, dtype=complex)
    ncols = out.shape[1]
    for c in range(ncols):
        y = continue_linear(P.system, out[:, c], path_in, rtol=P.ode_tol)
        y = continue_circle(P.system, y, P.u[i], r, theta0, theta0 + 2 * np.pi,
                            rtol=P.ode_tol, min_steps=min_steps)
        y = continue_linear(P.system, y, list(reversed(path_in)), rtol=P.ode_tol)
        out[:, c] = y
    return out


# -------------------------------------------------------------- Stokes data

def stokes_from_roots(R) -> dict:
    """S upper triangular with S_ii = 1, S_ij = (e_i, e_j); plus S +/- S^T."""
    n = R.rank
    gram = R.simple_gram()
    one = _one_like(gram[0][0])
    zero = _zero_like(gram[0][0])
    S = [[one if i == j else (gram[i][j] if i < j else zero)
          for j in range(n)] for i in range(n)]
    G = [[S[i][j] + S[j][i] for j in range(n)] for i in range(n)]
    anti = [[S[i][j] - S[j][i] for j in range(n)] for i in range(n)]
    return {"S": S, "gram": G, "antisym": anti}


def _one_like(x):
    return CycNum.from_int(x.m, 1) if isinstance(x, CycNum) else Fraction(1)


def _zero_like(x):
    return CycNum.from_int(x.m, 0) if isinstance(x, CycNum) else Fraction(0)


def model_monodromy(S, q) -> list:
    """Reflection matrices: M_i phi^j = phi^j - q s_ij phi^i (i<j),
    -q phi^i (i=j), phi^j - s_ji phi^i (i>j)."""
    n = len(S)
    one, zero = _one_like_q(q), _zero_like_q(q)
    out = []
    for i in range(n):
        M = [[one if r == c else zero for c in range(n)] for r in range(n)]
        for j in range(n):
            if i < j:
                M[i][j] = -(q * S[i][j])
            elif i == j:
                M[i][j] = -q
            else:
                M[i][j] = zero - S[j][i]
        out.append(M)
    return out


def _one_like_q(q):
    if isinstance(q, CycNum):
        return CycNum.from_int(q.m, 1)
    return 1.0 + 0j


def _zero_like_q(q):
    if isinstance(q, CycNum):
        return CycNum.from_int(q.m, 0)
    return 0.0 + 0j


@dataclass
class MonodromyResult:
    M: list
    q: complex
    S: np.ndarray
    qform: np.ndarray
    residuals: dict = field(default_factory=dict)
    gauge: np.ndarray | None = None


def monodromy_matrices(P: MonodromyProblem, rootsys=None, nterms: int = 80,
                       min_steps: int = 720) -> MonodromyResult:
    """Continue the distinguished basis around every u_i.

    Verifies: eigenvalue spectrum {-q, 1, ..., 1}; the quadratic relation
    (M_i - 1)(M_i + q) = 0; when a root system is supplied, the reflection
    identity against its q-form after fixing the recorded diagonal branch
    gauge, and the total-monodromy model -q S^{-T} S.
    """
    n = P.n
    q = cmath.exp(2j * cmath.pi * float(P.nu))
    Y = fundamental_matrix(P, nterms)
    res: dict = {}
    res["basis_condition"] = float(np.linalg.cond(Y))
    Ms = []
    for i in range(n):
        Yc = loop_continue(P, Y, i, min_steps)
        Mi = np.linalg.solve(Y, Yc)
        Ms.append(Mi)
    spec_err = 0.0
    quad_err = 0.0
    for Mi in Ms:
        ev = np.linalg.eigvals(Mi)
        target = sorted([-q] + [1.0] * (n - 1), key=lambda z: (z.real, z.imag))
        got = sorted(ev, key=lambda z: (z.real, z.imag))
        spec_err = max(spec_err, max(abs(a - b) for a, b in zip(target, got)))
        quad = (Mi - np.eye(n)) @ (Mi + q * np.eye(n))
        quad_err = max(quad_err, float(np.max(np.abs(quad))))
    res["spectrum"] = float(spec_err)
    res["quadratic_relation"] = float(quad_err)

    Smat = qform = gauge = None
    if rootsys is not None:
        data = stokes_from_roots(rootsys)
        Smat = _num(data["S"])
        sq = cmath.exp(1j * cmath.pi * float(P.nu))
        qform = sq * Smat + (1 / sq) * Smat.T
        model = [_num(M) for M in model_monodromy(data["S"], q)]
        gauge = _fit_gauge(Ms, model)
        Dg = np.diag(gauge)
        Dginv = np.diag(1.0 / gauge)
        refl_err = 0.0
        for i in range(n):
            Mg = Dginv @ Ms[i] @ Dg
            refl_err = max(refl_err, float(np.max(np.abs(Mg - model[i]))))
        res["reflection"] = refl_err
        total = np.eye(n, dtype=complex)
        for Mi in reversed(Ms):
            total = total @ Mi
        # big counter-clockwise loop: M_n ... M_1 = -q S^{-T} S in the model
        total_model = -q * np.linalg.solve(Smat.T, Smat)
        res["total_monodromy"] = float(
            np.max(np.abs(Dginv @ _total(Ms) @ Dg - total_model)))
        if abs(float(P.nu)) < 1e-12:
            pres = 0.0
            G = Smat + Smat.T
            for i in range(n):
                Mg = Dginv @ Ms[i] @ Dg
                pres = max(pres, float(np.max(np.abs(Mg.T @ G @ Mg - G))))
            res["gram_preserved"] = pres
    return MonodromyResult(Ms, q, Smat, qform, res, gauge)


def _total(Ms):
    total = np.eye(Ms[0].shape[0], dtype=complex)
    for M in Ms:
        total = M @ total
    return total


def _num(M):
    out = np.zeros((len(M), len(M[0])), dtype=complex)
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            out[i, j] = x.embed() if isinstance(x, CycNum) else complex(x)
    return out


def _fit_gauge(Ms, model) -> np.ndarray:
    """Diagonal d with M_num = D M_model D^{-1}: the recorded branch choice."""
    n = Ms[0].shape[0]
    d = np.zeros(n, dtype=complex)
    d[0] = 1.0
    known = {0}
    # connect indices via nonzero off-diagonal model entries
    for _ in range(n * n):
        for i in range(n):
            for Mi, Mm in zip(Ms, model):
                for j in range(n):
                    if i == j:
                        continue
                    if abs(Mm[i][j]) > 1e-9:
                        if i in known and j not in known:
                            d[j] = d[i] * Mm[i][j] / Mi[i, j]
                            known.add(j)
                        elif j in known and i not in known:
                            d[i] = d[j] * Mi[i, j] / Mm[i][j]
                            known.add(i)
        if len(known) == n:
            break
    for i in range(n):
        if i not in known:
            d[i] = 1.0
    return d


def reflection_vector_check(P: MonodromyProblem, rootsys, nterms: int = 80,
                            gauge=None) -> float:
    """Vector-level reflection residual, usable even when the basis degenerates.

    Continues each phi^{(j)} around u_i and compares with
    phi^{(j)} - q^{1/2} (q-form)_{ij} phi^{(i)} at the base point.
    """
    n = P.n
    q = cmath.exp(2j * cmath.pi * float(P.nu))
    sq = cmath.exp(1j * cmath.pi * float(P.nu))
    data = stokes_from_roots(rootsys)
    Smat = _num(data["S"])
    qf = sq * Smat + (1 / sq) * Smat.T
    cols = [solution_at_base(P, i, nterms) for i in range(n)]
    if gauge is not None:
        cols = [gauge[i] * cols[i] for i in range(n)]
    worst = 0.0
    scale = max(np.max(np.abs(c)) for c in cols)
    for i in range(n):
        for j in range(n):
            Y = np.array([cols[j]]).T
            cont = loop_continue(P, Y, i)[:, 0]
            expected = cols[j] - sq * qf[i, j] * cols[i]
            worst = max(worst, float(np.max(np.abs(cont - expected))) / scale)
    return worst


# ----------------------------------------------------------- Shephard groups

class ClosureCapError(RuntimeError):
    def __init__(self, cap):
        super().__init__(f"group closure exceeded the cap of {cap} elements; "
                         "finiteness undecided")
        self.cap = cap


class DegenerateQFormError(ValueError):
    pass


@dataclass
class CycMatrixGroup:
    conductor: int
    generators: list
    elements: dict          # canonical key -> matrix
    order: int

    def element_order_histogram(self, cap: int = 200) -> dict:
        hist: dict = {}
        n = len(self.generators[0])
        ident = _cyc_identity(self.conductor, n)
        for mat in self.elements.values():
            p = mat
            k = 1
            while _cyc_key(p) != _cyc_key(ident):
                p = _cyc_matmul(p, mat)
                k += 1
                if k > cap:
                    raise RuntimeError("element order exceeded the cap")
            hist[k] = hist.get(k, 0) + 1
        return hist


def _cyc_identity(m: int, n: int):
    one = CycNum.from_int(m, 1)
    zero = CycNum.from_int(m, 0)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _cyc_matmul(A, B):
    n, p = len(A), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            total = None
            for k in range(len(B)):
                t = A[i][k] * B[k][j]
                total = t if total is None else total + t
            row.append(total)
        out.append(row)
    return out


def _cyc_key(M):
    return tuple(tuple((x.m, x.coeffs) for x in row) for row in M)


def _lift_matrix(M, conductor):
    return [[x.lift(conductor) if isinstance(x, CycNum) else
             CycNum.from_int(conductor, x) for x in row] for row in M]


def nu_for_kappa(h: int, kappa: Fraction) -> Fraction:
    """nu = (1/h)(1 - 1/kappa)."""
    kappa = Fraction(kappa)
    return Fraction(1, h) * (1 - 1 / kappa)


def shephard_group(R, kappa, cap: int = 10 ** 6,
                   generators=None, conductor=None) -> CycMatrixGroup:
    """Exact closure of the reflection representation at q = e^{2 pi i nu}.

    With no explicit generators, they are the model monodromy matrices of
    the root system's Stokes matrix.  Raises DegenerateQFormError when
    det(q S + S^T) = 0 and ClosureCapError past the element cap.
    """
    if generators is None:
        nu = nu_for_kappa(R.h, kappa)
        mq = nu.denominator
        root_cond = getattr(R, "conductor", 1)
        lcm = mq * root_cond // math.gcd(mq, root_cond)
        q = CycNum.zeta(lcm, lcm // mq * (nu.numerator % mq))
        data = stokes_from_roots(R)
        S = [[x.lift(lcm) if isinstance(x, CycNum)
              else CycNum.from_int(lcm, x) for x in row] for row in data["S"]]
        n = R.rank
        qS_ST = [[S[i][j] * q + S[j][i] for j in range(n)] for i in range(n)]
        det = exact_det(qS_ST)
        if det.is_zero():
            raise DegenerateQFormError(
                f"det(q S + S^T) = 0 for {R.tag}, kappa = {kappa}")
        generators = model_monodromy(S, q)
        conductor = lcm
    else:
        if conductor is None:
            conductor = generators[0][0][0].m
        generators = [_lift_matrix(G, conductor) for G in generators]
        q = None
    gens = generators
    n = len(gens[0])
    ident = _cyc_identity(conductor, n)
    elements = {_cyc_key(ident): ident}
    frontier = [ident]
    while frontier:
        new = []
        for mat in frontier:
            for g in gens:
                prod = _cyc_matmul(mat, g)
                key = _cyc_key(prod)
                if key not in elements:
                    elements[key] = prod
                    new.append(prod)
                    if len(elements) > cap:
                        raise ClosureCapError(cap)
        frontier = new
    grp = CycMatrixGroup(conductor, gens, elements, len(elements))
    if q is not None:
        # each generator satisfies (M - 1)(M + q) = 0 exactly
        for g in gens:
            minus = [[g[i][j] - (1 if i == j else 0) for j in range(n)]
                     for i in range(n)]
            plus = [[g[i][j] + (q if i == j else CycNum.from_int(conductor, 0))
                     for j in range(n)] for i in range(n)]
            prod = _cyc_matmul(minus, plus)
            if any(not x.is_zero() for row in prod for x in row):
                raise AssertionError("(M-1)(M+q) != 0 for a generator")
    return grp


def g25_generators():
    """The explicit 3x3 generators of G_25 at q = e^{i pi / 3}."""
    m = 6
    q = CycNum.zeta(6, 1)
    one = CycNum.from_int(m, 1)
    zero = CycNum.from_int(m, 0)
    M1 = [[-q, q, zero], [zero, one, zero], [zero, zero, one]]
    M2 = [[one, zero, zero], [one, -q, q], [zero, zero, one]]
    M3 = [[one, zero, zero], [zero, one, zero], [zero, one, -q]]
    return [M1, M2, M3]


# ----------------------------------------------------- G_25 cross-validation

def maschke_polynomials():
    """The degree 6, 9, 12 invariants of the Hessian group."""
    zv = ("z1", "z2", "z3")
    z1, z2, z3 = (MPoly.var(zv, v) for v in zv)
    c6 = (z1 ** 6 + z2 ** 6 + z3 ** 6
          - (z1 ** 3 * z2 ** 3 + z2 ** 3 * z3 ** 3 + z3 ** 3 * z1 ** 3) * 10)
    c9 = (z1 ** 3 - z2 ** 3) * (z2 ** 3 - z3 ** 3) * (z3 ** 3 - z1 ** 3)
    s3 = z1 ** 3 + z2 ** 3 + z3 ** 3
    c12 = s3 * (s3 ** 3 + z1 ** 3 * z2 ** 3 * z3 ** 3 * 216)
    return {"C6": c6, "C9": c9, "C12": c12, "vars": zv}


def hessian_displayed_metric():
    """30 * the displayed quadratic form, as the symmetric matrix h_{ij}."""
    zv = ("z1", "z2", "z3")
    z1, z2, z3 = (MPoly.var(zv, v) for v in zv)
    s3 = z1 ** 3 + z2 ** 3 + z3 ** 3
    h = [[MPoly.zero(zv) for _ in range(3)] for _ in range(3)]
    zs = [z1, z2, z3]
    for i in range(3):
        h[i][i] = (zs[i] ** 4 * 3 - s3 * zs[i]) * 30
    pairs = [(0, 1), (1, 2), (2, 0)]
    for i, j in pairs:
        val = zs[i] ** 2 * zs[j] ** 2 * (-3) * 30
        h[i][j] = h[i][j] + val
        h[j][i] = h[j][i] + val
    return h


def hessian_curvature(fpoly: MPoly, zvars, point) -> float:
    """Curvature of the Hessian metric of f, via the closed commutator form.

    Vanishes iff f satisfies the Hessian associativity system; evaluated
    numerically at one point.
    """
    n = len(zvars)
    d1 = [fpoly.diff(v) for v in zvars]
    d2 = [[d1[i].diff(zvars[j]) for j in range(n)] for i in range(n)]
    d3 = [[[d2[i][j].diff(zvars[k]) for k in range(n)] for j in range(n)]
          for i in range(n)]
    pt = {v: x for v, x in zip(zvars, point)}
    h = np.array([[complex(d2[i][j].eval(pt)) for j in range(n)] for i in range(n)])
    f3 = np.array([[[complex(d3[i][j][k].eval(pt)) for k in range(n)]
                    for j in range(n)] for i in range(n)])
    hinv = np.linalg.inv(h)
    # R^k_{ijl} = (1/4)[h^{kp} f_{pqj} h^{qs} f_{sil} - h^{kp} f_{pqi} h^{qs} f_{slj}]
    A = np.einsum("kp,pqj,qs,sil->kijl", hinv, f3, hinv, f3)
    B = np.einsum("kp,pqi,qs,slj->kijl", hinv, f3, hinv, f3)
    return float(np.max(np.abs(0.25 * (A - B))))


def solve_maschke_coordinates(c6, c9, c12):
    """Flat coordinates from the algebraic system, numerically.

    Reduces to a cubic in x_i^2: e1 = C6, e2 = (C6^2 - C12)/3, e3 = 16 C9^2,
    then fixes the signs of the square roots against C9 = x1 x2 x3 / 4.
    """
    e1 = c6
    e2 = (c6 ** 2 - c12) / 3.0
    e3 = 16.0 * c9 ** 2
    sq = np.roots([1.0, -e1, e2, -e3])
    x = np.sqrt(sq.astype(complex))
    prod = x[0] * x[1] * x[2]
    if abs(prod / 4.0 - c9) > abs(-prod / 4.0 - c9):
        x[0] = -x[0]
    return x


def g25_crosscheck(cap: int = 10 ** 6, curvature_points: int = 5,
                   seed: int = 0) -> dict:
    """Exact and numeric consistency checks for the G_25 realization."""
    from .constructors import root_system
    import random
    out: dict = {}
    gens = g25_generators()
    q = CycNum.zeta(6, 1)
    ident = _cyc_identity(6, 3)
    # generator orders and braid relations, exactly
    for k, M in enumerate(gens):
        cube = _cyc_matmul(_cyc_matmul(M, M), M)
        out[f"M{k+1}_cubed_is_identity"] = _cyc_key(cube) == _cyc_key(ident)
    b12 = _cyc_key(_cyc_matmul(_cyc_matmul(gens[0], gens[1]), gens[0])) == \
        _cyc_key(_cyc_matmul(_cyc_matmul(gens[1], gens[0]), gens[1]))
    b23 = _cyc_key(_cyc_matmul(_cyc_matmul(gens[1], gens[2]), gens[1])) == \
        _cyc_key(_cyc_matmul(_cyc_matmul(gens[2], gens[1]), gens[2]))
    comm13 = _cyc_key(_cyc_matmul(gens[0], gens[2])) == \
        _cyc_key(_cyc_matmul(gens[2], gens[0]))
    out["braid_relations"] = b12 and b23 and comm13
    grp_explicit = shephard_group(None, None, cap=cap, generators=gens, conductor=6)
    R = root_system("a3")
    grp_a3 = shephard_group(R, 3, cap=cap)
    out["explicit_order"] = grp_explicit.order
    out["a3_kappa3_order"] = grp_a3.order
    out["orders_match"] = grp_explicit.order == grp_a3.order
    out["order_histograms_match"] = (grp_explicit.element_order_histogram()
                                     == grp_a3.element_order_histogram())
    # Hessian metric of C6: displayed form and flatness
    data = maschke_polynomials()
    zv = data["vars"]
    c6 = data["C6"]
    disp = hessian_displayed_metric()
    hess_ok = True
    for i in range(3):
        for j in range(3):
            got = c6.diff(zv[i]).diff(zv[j]) * 30
            if not (got - disp[i][j]).is_zero():
                hess_ok = False
    out["hessian_matches_display"] = hess_ok
    rng = random.Random(seed)
    worst = 0.0
    pts = 0
    while pts < curvature_points:
        z = [rng.uniform(0.5, 2.0) + 0.3j * rng.uniform(-1, 1) for _ in range(3)]
        pt = {v: x for v, x in zip(zv, z)}
        d2 = [[complex(c6.diff(zv[i]).diff(zv[j]).eval(pt)) for j in range(3)]
              for i in range(3)]
        if abs(np.linalg.det(np.array(d2))) < 1e-3:
            continue
        worst = max(worst, hessian_curvature(c6, zv, z))
        pts += 1
    out["hessian_curvature"] = worst
    # algebraic system consistency
    worst_alg = 0.0
    for _ in range(5):
        z = [rng.uniform(0.5, 1.5) for _ in range(3)]
        pt = {v: x for v, x in zip(zv, z)}
        c6v = float(Fraction(0) + 0) + complex(c6.eval(pt))
        c9v = complex(data["C9"].eval(pt))
        c12v = complex(data["C12"].eval(pt))
        x = solve_maschke_coordinates(c6v, c9v, c12v)
        r1 = abs(sum(xi ** 2 for xi in x) - c6v)
        r2 = abs(x[0] * x[1] * x[2] / 4 - c9v)
        s = sum(xi ** 2 for xi in x)
        e2x = (x[0] * x[1]) ** 2 + (x[0] * x[2]) ** 2 + (x[1] * x[2]) ** 2
        r3 = abs(s ** 2 - 3 * e2x - c12v)
        scale = max(abs(c6v), abs(c9v), abs(c12v), 1.0)
        worst_alg = max(worst_alg, max(r1, r2, r3) / scale)
    out["algebraic_system_residual"] = worst_alg
    return out


# ------------------------------------------------- discriminant asymptotics

def periods_at_lambda(P: MonodromyProblem, lam: complex, nterms: int = 80):
    """All solutions phi^{(a)}(lam), by series where safe, else continuation."""
    n = P.n
    cols = []
    for a in range(n):
        r = _series_radius(P, a)
        if abs(lam - P.u[a]) < 0.55 * r:
            cols.append(eval_local(P, a, lam, nterms))
        else:
            direction = (lam - P.u[a]) / abs(lam - P.u[a])
            seed = P.u[a] + 0.45 * r * direction
            y0 = eval_local(P, a, seed, nterms)
            path = _safe_path(P, seed, lam,
                              avoid=[j for j in range(n) if j != a])
            cols.append(continue_linear(P.system, y0, path, rtol=P.ode_tol))
    return cols


def discriminant_exponents(M, rootsys, t_path, k_index: int = 0,
                           phi_angle: float = 0.0) -> dict:
    """Fit p^k ~ (u_k)^e and the dual blow-up c*_{kk} ~ (p^k)^f along a path
    of points where u_k -> 0 (lambda = 0, nu = 0 periods).

    Expected e = 1/2, f = -1 by the boundary behavior of the periods.
    """
    from .core.frame import canonical_frame
    d = M.d
    pref = 2.0 / (1.0 - float(d))
    data = stokes_from_roots(rootsys)
    G = _num(data["gram"])
    Ginv = np.linalg.inv(G)
    ref = None
    us, pk_vals, ck_vals, trans = [], [], [], []
    for t in t_path:
        frame = canonical_frame(M, t, phi_angle=phi_angle, ref=ref)
        ref = frame
        P = assemble_fuchsian(frame, Fraction(0))
        cols = periods_at_lambda(P, 0.0 + 0j)
        n = P.n
        p = np.zeros(n, dtype=complex)
        for a in range(n):
            p[a] = pref * sum(frame.u[i] * frame.psi1[i] * cols[a][i]
                              for i in range(n))
        cstar = np.zeros((n,), dtype=complex)
        # c*_{kk}^a with lowered indices via G
        k = k_index
        for a in range(n):
            total = 0j
            for i in range(n):
                w = frame.u[i] / frame.psi1[i] * cols[a][i]
                inner = sum(Ginv[k, f_] * cols[f_][i] for f_ in range(n))
                inner2 = sum(Ginv[k, d_] * cols[d_][i] for d_ in range(n))
                total += w * inner * inner2
            cstar[a] = total
        us.append(abs(frame.u[k_index]))
        pk_vals.append(abs(p[k_index]))
        ck_vals.append(np.max(np.abs(cstar)))
        trans.append([abs(p[a]) for a in range(n) if a != k_index])
    us = np.array(us)
    pk = np.array(pk_vals)
    ck = np.array(ck_vals)
    e_fit = np.polyfit(np.log(us), np.log(pk), 1)[0]
    f_fit = np.polyfit(np.log(pk), np.log(ck), 1)[0]
    spread = [max(x) - min(x) for x in np.array(trans).T] if trans else []
    return {"period_exponent": float(e_fit), "blowup_exponent": float(f_fit),
            "u_values": us.tolist(), "pk": pk.tolist(),
            "transverse_spread": spread}
