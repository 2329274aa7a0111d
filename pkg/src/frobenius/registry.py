"""Registry of every check the toolkit runs.

Each entry carries the equation tag it verifies and a terse statement of
the identity, so reports can be audited check by check.
"""

CHECKS = {
    "wdvv": {
        "tag": "wdvv2",
        "anchor": "F_{abl} eta^{lm} F_{mgd} symmetric under a <-> d, identically",
    },
    "wdvv-normalization": {
        "tag": "wdvv1",
        "anchor": "F_{1ab} = eta_{ab} identically",
    },
    "quasihomogeneity": {
        "tag": "wdvv3",
        "anchor": "E.F - (3-d) F is at most quadratic in the flat coordinates",
    },
    "grading-antisymmetry": {
        "tag": "2-7-4b",
        "anchor": "V = (2-d)/2 - grad E satisfies V eta + eta V^T = 0, V e = -(d/2) e",
    },
    "intersection-form": {
        "tag": "int-form1",
        "anchor": "E^e c_e^{ab} equals F^{ab} - V F - F V + A entrywise",
    },
    "flat-pencil": {
        "tag": "christ0",
        "anchor": "curvature of (g - lambda eta)^{-1} vanishes at samples",
    },
    "canonical-frame": {
        "tag": "orth",
        "anchor": "Psi^T Psi = eta, V(u) antisymmetric, idempotent products",
    },
    "isomonodromy": {
        "tag": "eq-per-v",
        "anchor": "dV/du_i equals the commutator flow [V_i, V], O(h) in differences",
    },
    "milnor-consistency": {
        "tag": "eguchi",
        "anchor": "d_a phi_b = d_x K_ab for the Milnor division quotients",
    },
    "unfolding-quasihomogeneity": {
        "tag": "q-h-v",
        "anchor": "f = r x f_x + sum (1-q_a) t^a phi_a with r = 1/(n+1)",
    },
    "root-counts": {
        "tag": "orb",
        "anchor": "|Delta+| = n h / 2 and (alpha, alpha) = 2 for every root",
    },
    "dual-product-unity": {
        "tag": "star",
        "anchor": "E * E = E for the division multiplication u.v/E",
    },
    "coxeter-dual-potential": {
        "tag": "star-cox",
        "anchor": "third derivatives sum alpha^3/(alpha,x) against the closed form",
    },
    "dual-law": {
        "tag": "law",
        "anchor": "A_n dual product -(n+1)/2 (d_i - d_j)/(x_i - x_j) from the displayed pair",
    },
    "dual-homogeneity": {
        "tag": "q-h-star",
        "anchor": "sum x dF* - 2F* = (1/(1-d)) (x,x) via sum alpha (x) alpha = h proj",
    },
    "dual-wdvv": {
        "tag": "w-star",
        "anchor": "F*_{ija} G^{ab} F*_{bkl} symmetric in i <-> l at rational samples",
    },
    "euler-poisson-darboux": {
        "tag": "eul-darb",
        "anchor": "A_n twisted flatness is d_i d_j p = -nu (d_i p - d_j p)/(x_i - x_j)",
    },
    "twisted-rhs": {
        "tag": "g-m-l-mu",
        "anchor": "d_a xi = xi (V + nu - 1/2) C_a (U - lambda)^{-1}, compatible flows",
    },
    "nu-shift": {
        "tag": "ab-shift",
        "anchor": "xi(nu-1) = xi(nu)(V + nu - 1/2) U^{-1} along continued solutions",
    },
    "pairing-sign": {
        "tag": "sign",
        "anchor": "(xi(nu-1), xi(1-nu)) = -(xi(nu), xi(-nu)) at endpoints",
    },
    "odd-poisson": {
        "tag": "pb",
        "anchor": "brackets of odd periods constant along paths, antisymmetric",
    },
    "darboux": {
        "tag": "darb",
        "anchor": "{t^a, t^b} = eta^{ag} V^b_g exactly",
    },
    "reconstruction": {
        "tag": "de",
        "anchor": "d^i e^j + d^j e^i = -e^k c*_k^{ij}, gamma1 = gamma2, eta = e.c*",
    },
    "fuchsian-residues": {
        "tag": "fuchs2",
        "anchor": "A_i = E_i(nu - 1/2 - V), rank 1, trace nu - 1/2",
    },
    "local-solutions": {
        "tag": "local",
        "anchor": "phi^(i) = norm (u_i - lambda)^{nu-1/2}(e_i + O(u_i - lambda))",
    },
    "monodromy-spectrum": {
        "tag": "local",
        "anchor": "each M_i has eigenvalues {-q, 1, ..., 1}",
    },
    "monodromy-reflection": {
        "tag": "reflect",
        "anchor": "M_i phi^j = phi^j - q^{1/2} (q-form)_{ij} phi^i after the branch gauge",
    },
    "monodromy-total": {
        "tag": "total",
        "anchor": "M_n ... M_1 = -q S^{-T} S in the distinguished basis",
    },
    "gram-preserved": {
        "tag": "mono",
        "anchor": "M^T (S + S^T) M = S + S^T for the nu = 0 reflections",
    },
    "stokes-data": {
        "tag": "gram0",
        "anchor": "S upper triangular with S_ij = (e_i, e_j); G = S + S^T",
    },
    "shephard-closure": {
        "tag": "mono-stokes",
        "anchor": "exact closure of the reflection matrices over Q(zeta); orders computed",
    },
    "shephard-quadratic": {
        "tag": "ch-q",
        "anchor": "(M_i - 1)(M_i + q) = 0 exactly over the cyclotomic field",
    },
    "g25-generators": {
        "tag": "maschke",
        "anchor": "explicit 3x3 generators: cubes, braid relations, closure order",
    },
    "hessian-metric": {
        "tag": "he-ma",
        "anchor": "Hessian of C6 equals the displayed metric times 30; curvature flat",
    },
    "maschke-system": {
        "tag": "alg-sys",
        "anchor": "flat coordinates solve the C6/C9/C12 algebraic system",
    },
    "discriminant-exponent": {
        "tag": "p-beh1",
        "anchor": "p^k ~ (u_k - lambda)^{1/2} near the discriminant wall",
    },
    "dual-blowup": {
        "tag": "c-beh",
        "anchor": "c*_{kk} ~ 1/p^k approaching the wall (fitted exponent -1)",
    },
    "cp-period-recursion": {
        "tag": "cp-per",
        "anchor": "theta^{d+1} p = Q t1^{-(d+1)} prod [-(d+1) theta + (1-d)/2 + nu - m] p",
    },
    "quintic-coefficients": {
        "tag": "cand",
        "anchor": "holomorphic solution has c_k = (5k)!/(k!)^5 (c1 = 120, c2 = 113400)",
    },
    "a1-golden-series": {
        "tag": "ser-x",
        "anchor": "Q^k coefficient of X is -2^{2k}(4k-3)!!/(k!)^2 x^{1-4k}",
    },
    "hamilton-jacobi": {
        "tag": "ham-jac",
        "anchor": "theta S = H on the Lagrangian family, order by order",
    },
    "canonical-brackets": {
        "tag": "canon",
        "anchor": "{X^a, Y_b} = delta, {X,X} = {Y,Y} = 0 including log monomials",
    },
    "y-asymptotics": {
        "tag": "lim-y",
        "anchor": "Y_a = x_a log Q - 2 dF*/dx^a + O(Q), matched to dS/dX",
    },
    "varpi-system": {
        "tag": "varpi1",
        "anchor": "Lie_E w + 2 d_s w = (1-d)/2 w; d_s^2 w = Q d_1^2 w; products",
    },
    "elliptic-representation": {
        "tag": "elliptic",
        "anchor": "contour quadrature of the odd period matches the series",
    },
    "series-inversion": {
        "tag": "a-n",
        "anchor": "compositional inverse of k = f^{1/(n+1)} to the working order",
    },
}


def list_checks() -> list:
    return [{"check_id": k, "equation_tag": v["tag"], "anchor": v["anchor"]}
            for k, v in sorted(CHECKS.items())]
