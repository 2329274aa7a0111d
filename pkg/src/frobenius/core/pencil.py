"""Flat-pencil verification: curvature of (,) - lambda <,> at sample points.

The metric entries are rational in t, so everything up to the final
matrix algebra is evaluated exactly at rational points and only then
mapped to floats.  Flatness is a polynomial identity, so a handful of
generic samples certifies it to the documented budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..exact import MPoly


@dataclass
class PencilReport:
    ok: bool
    max_curvature: float
    samples: list = field(default_factory=list)
    skipped: list = field(default_factory=list)


def flat_pencil_check(M, sample_points, lambda_samples, tol: float = 1e-9) -> PencilReport:
    """Evaluate the Riemann tensor of (g - lambda*eta)^{-1} numerically."""
    n = M.n
    g = M.intersection_gram()
    Gamma = M.contravariant_christoffel()
    # first derivatives of the contravariant data (exact polynomials)
    dg = [[[M.diff(g[a][b], c) for c in range(n)] for b in range(n)] for a in range(n)]
    dGamma = [[[[M.diff(Gamma[gi][a][b], c) for c in range(n)]
                for b in range(n)] for a in range(n)] for gi in range(n)]
    eta = np.array([[float(x) for x in row] for row in M.eta])
    worst = 0.0
    entries = []
    skipped = []
    for t in sample_points:
        for lam in lambda_samples:
            gval = M.eval_matrix(g, t) - float(lam) * eta
            if abs(np.linalg.det(gval)) < 1e-12:
                skipped.append((t, lam))
                continue
            ginv = np.linalg.inv(gval)
            Gv = np.array([[[complex(Gamma[gi][a][b].eval(M.point_map(t)))
                             for b in range(n)] for a in range(n)]
                           for gi in range(n)])
            dGv = np.array([[[[complex(dGamma[gi][a][b][c].eval(M.point_map(t)))
                               for c in range(n)] for b in range(n)]
                             for a in range(n)] for gi in range(n)])
            dgv = np.array([[[complex(dg[a][b][c].eval(M.point_map(t)))
                              for c in range(n)] for b in range(n)]
                            for a in range(n)])
            # covariant Christoffels: Gamma^a_{bc} = -g_{br} Gamma_c^{ra}
            Gcov = -np.einsum("br,cra->abc", ginv, Gv)
            # d_m g_{br} = -g_{bs} (d_m g^{st}) g_{tr}
            dginv = -np.einsum("bs,stm,tr->brm", ginv, dgv, ginv)
            dGcov = -(np.einsum("brm,cra->abcm", dginv, Gv)
                      + np.einsum("br,cram->abcm", ginv, dGv))
            # R^a_{bcd} = d_c G^a_{db} - d_d G^a_{cb} + G^a_{ce} G^e_{db} - G^a_{de} G^e_{cb}
            R = (np.einsum("adbc->abcd", dGcov)
                 - np.einsum("acbd->abcd", dGcov)
                 + np.einsum("ace,edb->abcd", Gcov, Gcov)
                 - np.einsum("ade,ecb->abcd", Gcov, Gcov))
            m = float(np.max(np.abs(R)))
            entries.append({"t": [str(x) for x in t], "lambda": str(lam),
                            "max_R": m})
            worst = max(worst, m)
    return PencilReport(worst < tol and bool(entries), worst, entries, skipped)


def curvature_fd_oracle(M, t, lam, h: float = 1e-5) -> float:
    """Finite-difference curvature of the same metric at one point.

    Independent of the symbolic-derivative pipeline: the Christoffels are
    rebuilt from central differences of the covariant metric.
    """
    n = M.n
    g = M.intersection_gram()
    eta = np.array([[float(x) for x in row] for row in M.eta])

    def gcov(tv):
        gv = M.eval_matrix(g, tv) - float(lam) * eta
        return np.linalg.inv(gv)

    t = np.array([complex(x) for x in t])

    def shift(i, s):
        tv = t.copy()
        tv[i] += s
        return tuple(tv)

    g0 = gcov(tuple(t))
    dg = np.zeros((n, n, n), dtype=complex)
    for m in range(n):
        dg[:, :, m] = (gcov(shift(m, h)) - gcov(shift(m, -h))) / (2 * h)
    ginv = np.linalg.inv(g0)
    Gam = np.zeros((n, n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                Gam[a, b, c] = 0.5 * sum(
                    ginv[a, e] * (dg[e, b, c] + dg[e, c, b] - dg[b, c, e])
                    for e in range(n))
    dGam = np.zeros((n, n, n, n), dtype=complex)
    for m in range(n):
        gp = gcov(shift(m, h))
        gm = gcov(shift(m, -h))
        dgp = np.zeros((n, n, n), dtype=complex)
        dgm = np.zeros((n, n, n), dtype=complex)
        for mm in range(n):
            tp, tm = shift(m, h), shift(m, -h)
            tpv = np.array([complex(x) for x in tp])
            tmv = np.array([complex(x) for x in tm])

            def gc(base, i, s):
                tv = base.copy()
                tv[i] += s
                return gcov(tuple(tv))
            dgp[:, :, mm] = (gc(tpv, mm, h) - gc(tpv, mm, -h)) / (2 * h)
            dgm[:, :, mm] = (gc(tmv, mm, h) - gc(tmv, mm, -h)) / (2 * h)
        gpinv, gminv = np.linalg.inv(gp), np.linalg.inv(gm)
        Gp = np.zeros((n, n, n), dtype=complex)
        Gm = np.zeros((n, n, n), dtype=complex)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    Gp[a, b, c] = 0.5 * sum(
                        gpinv[a, e] * (dgp[e, b, c] + dgp[e, c, b] - dgp[b, c, e])
                        for e in range(n))
                    Gm[a, b, c] = 0.5 * sum(
                        gminv[a, e] * (dgm[e, b, c] + dgm[e, c, b] - dgm[b, c, e])
                        for e in range(n))
        dGam[:, :, :, m] = (Gp - Gm) / (2 * h)
    R = (np.einsum("adbc->abcd", dGam) - np.einsum("acbd->abcd", dGam)
         + np.einsum("ace,edb->abcd", Gam, Gam)
         - np.einsum("ade,ecb->abcd", Gam, Gam))
    return float(np.max(np.abs(R)))
