"""Canonical coordinates: eigenvalues of E*, idempotent frames, isomonodromy.

All frame data is numeric (complex).  Orderings follow the branch-cut
rule: rays u_j + i*rho*exp(-i*phi) must not intersect, and the
eigenvalues are sorted so the rays exit infinity in counter-clockwise
order.  Square-root branches for the frame normalization are principal,
with sign continuity available via a reference frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class NonSemisimpleError(ValueError):
    def __init__(self, i, j, gap):
        super().__init__(
            f"eigenvalues u_{i+1} and u_{j+1} collide (separation {gap:.3e})")
        self.pair = (i, j)


@dataclass
class CanonicalFrame:
    u: np.ndarray           # eigenvalues of the Euler multiplication, ordered
    Psi: np.ndarray         # transition matrix, rows indexed by idempotents
    psi1: np.ndarray        # first column: sqrt(<d/du_i, d/du_i>)
    V: np.ndarray           # Psi V_grading Psi^{-1}, antisymmetric
    Vi: list                # the n auxiliary matrices ad_{E_i} ad_U^{-1} V
    idempotents: np.ndarray # columns: d/du_i in the flat frame
    t0: tuple
    phi_angle: float
    residuals: dict


def choose_cut_angle(u, samples: int = 720) -> float:
    """Angle maximizing the angular clearance of all pairwise directions."""
    dirs = []
    n = len(u)
    for i in range(n):
        for j in range(n):
            if i != j:
                dirs.append(np.angle(u[i] - u[j]))
    best, best_gap = 0.0, -1.0
    for k in range(samples):
        phi = np.pi * k / samples
        ray = np.pi / 2 - phi       # direction of the cuts
        gap = min(_angdist(d, ray) for d in dirs)
        gap = min(gap, min(_angdist(d, ray + np.pi) for d in dirs))
        if gap > best_gap:
            best_gap, best = gap, phi
    return best


def _angdist(a, b):
    d = abs((a - b + np.pi) % (2 * np.pi) - np.pi)
    return d


def order_by_rays(u, phi_angle: float):
    """Order so the rays exit infinity counter-clockwise: Re(u e^{i phi}) decreasing."""
    keys = [(-np.real(ui * np.exp(1j * phi_angle)), k) for k, ui in enumerate(u)]
    keys.sort()
    return [k for _, k in keys]


def canonical_frame(M, t0, phi_angle: float | None = None,
                    ref: CanonicalFrame | None = None,
                    min_gap: float = 1e-8) -> CanonicalFrame:
    """Eigendata of multiplication by E at t0, with the orthonormal frame.

    Checks Psi^T Psi = eta, the antisymmetry of V, and the idempotent
    multiplication table; results land in ``residuals``.
    """
    n = M.n
    U = M.eval_matrix(M.calU(), t0)
    evals, evecs = np.linalg.eig(U)
    for i in range(n):
        for j in range(i + 1, n):
            gap = abs(evals[i] - evals[j])
            if gap < min_gap:
                raise NonSemisimpleError(i, j, gap)
    if phi_angle is None:
        phi_angle = choose_cut_angle(evals)
    order = order_by_rays(evals, phi_angle)
    evals = evals[order]
    evecs = evecs[:, order]
    # normalize eigenvectors to idempotents: v.v = kappa v  ->  pi = v/kappa
    c_num = _c_at_point(M, t0)
    idem = np.zeros((n, n), dtype=complex)
    for i in range(n):
        v = evecs[:, i]
        vv = np.einsum("a,b,abg->g", v, v, c_num)
        k = np.argmax(np.abs(v))
        kappa = vv[k] / v[k]
        idem[:, i] = v / kappa
    eta = np.array([[float(x) for x in row] for row in M.eta])
    psi1 = np.zeros(n, dtype=complex)
    for i in range(n):
        norm2 = idem[:, i] @ eta @ idem[:, i]
        psi1[i] = np.sqrt(norm2 + 0j)
    if ref is not None:
        evals, idem, psi1 = _match_reference(ref, evals, idem, psi1)
        order = None
    # Psi = diag(psi1) * P^{-1}, with P the idempotent column matrix
    Pinv = np.linalg.inv(idem)
    Psi = np.diag(psi1) @ Pinv
    Vgrad = np.array([[float(x) for x in row] for row in M.grading_operator()])
    V = Psi @ Vgrad @ np.linalg.inv(Psi)
    res = {}
    res["orthogonality"] = float(np.max(np.abs(Psi.T @ Psi - eta)))
    res["V_antisymmetry"] = float(np.max(np.abs(V + V.T)))
    res["diagonalization"] = float(np.max(np.abs(Psi @ U @ np.linalg.inv(Psi)
                                                 - np.diag(evals))))
    idem_res = 0.0
    for i in range(n):
        for j in range(n):
            prod = np.einsum("a,b,abg->g", idem[:, i], idem[:, j], c_num)
            target = idem[:, i] if i == j else np.zeros(n)
            idem_res = max(idem_res, float(np.max(np.abs(prod - target))))
    res["idempotents"] = idem_res
    Vi = [ad_decomposition(V, evals, i) for i in range(n)]
    return CanonicalFrame(evals, Psi, psi1, V, Vi, idem, tuple(t0), phi_angle, res)


def _c_at_point(M, t0):
    n = M.n
    c = M.c_mixed()
    pt = M.point_map(t0)
    out = np.zeros((n, n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            for g in range(n):
                out[a, b, g] = complex(c[a][b][g].eval(pt))
    return out


def _match_reference(ref, evals, idem, psi1):
    """Reorder and fix signs to follow a nearby reference frame."""
    n = len(evals)
    used = set()
    order = []
    for i in range(n):
        j = min((j for j in range(n) if j not in used),
                key=lambda j: abs(evals[j] - ref.u[i]))
        used.add(j)
        order.append(j)
    evals = evals[order]
    idem = idem[:, order]
    psi1 = psi1[order]
    for i in range(n):
        if abs(psi1[i] - ref.psi1[i]) > abs(-psi1[i] - ref.psi1[i]):
            psi1[i] = -psi1[i]
    return evals, idem, psi1


def ad_decomposition(V, u, i):
    """V_i = ad_{E_i} ad_U^{-1} V for the isomonodromy flows."""
    n = len(u)
    Mtil = np.zeros((n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            if a != b:
                Mtil[a, b] = V[a, b] / (u[a] - u[b])
    Ei = np.zeros((n, n))
    Ei[i, i] = 1.0
    return Ei @ Mtil - Mtil @ Ei


def isomonodromy_residual(M, t0, h: float = 1e-4,
                          phi_angle: float | None = None) -> dict:
    """Finite-difference dV/du_i against the commutator flow [V_i, V].

    Returns the max residual at steps h and h/2; the ratio should be
    about 2 for the O(h) scheme.
    """
    frame = canonical_frame(M, t0, phi_angle=phi_angle)
    n = M.n
    eta_inv = np.linalg.inv(np.array([[float(x) for x in row] for row in M.eta]))

    def v_at(tvec):
        fr = canonical_frame(M, tuple(tvec), phi_angle=frame.phi_angle, ref=frame)
        return fr.V

    out = {}
    for step in (h, h / 2):
        worst = 0.0
        for i in range(n):
            # dt producing du_i = step: dt^b = eta^{ba} psi_{i1} psi_{ia}
            dt = np.zeros(n, dtype=complex)
            for b in range(n):
                dt[b] = sum(eta_inv[b][a] * frame.psi1[i] * frame.Psi[i, a]
                            for a in range(n))
            t_plus = np.array(frame.t0, dtype=complex) + step * dt
            t_minus = np.array(frame.t0, dtype=complex) - step * dt
            dV = (v_at(t_plus) - v_at(t_minus)) / (2 * step)
            flow = frame.Vi[i] @ frame.V - frame.V @ frame.Vi[i]
            worst = max(worst, float(np.max(np.abs(dV - flow))))
        out[step] = worst
    return {"residuals": out, "frame": frame}
