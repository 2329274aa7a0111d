"""Adaptive Dormand-Prince 5(4) integration for complex linear systems.

The Fuchsian continuations need dense complex right-hand sides along
paths and circles in the lambda-plane; rolling our own keeps the state
complex end to end and lets loops enforce a minimum number of accepted
steps.
"""

from __future__ import annotations

import numpy as np

_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
_B5 = [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0]
_B4 = [5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200,
       187 / 2100, 1 / 40]
_C = [0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0]


class ODEFailure(RuntimeError):
    def __init__(self, tau, msg="adaptive step size collapsed"):
        super().__init__(f"{msg} at path parameter {tau:.6f}")
        self.tau = tau


def integrate(f, y0: np.ndarray, t0: float, t1: float,
              rtol: float = 1e-10, atol: float = 1e-12,
              max_step: float | None = None, min_steps: int = 0):
    """Integrate y' = f(t, y) from t0 to t1; returns y(t1)."""
    y = np.array(y0, dtype=complex)
    t = t0
    span = t1 - t0
    if span == 0:
        return y
    h = span / max(min_steps, 16)
    if max_step is not None:
        h = np.sign(span) * min(abs(h), max_step)
    if min_steps:
        cap = abs(span) / min_steps
        h = np.sign(span) * min(abs(h), cap)
    else:
        cap = None
    k = [None] * 7
    while True:
        remaining = t1 - t
        if abs(remaining) <= 1e-13 * abs(span):
            break
        last = abs(h) >= abs(remaining)
        if last:
            h = remaining
        k[0] = f(t, y)
        for i in range(1, 7):
            yi = y + h * sum(_A[i][j] * k[j] for j in range(i))
            k[i] = f(t + _C[i] * h, yi)
        y5 = y + h * sum(b * ki for b, ki in zip(_B5, k))
        y4 = y + h * sum(b * ki for b, ki in zip(_B4, k))
        scale = atol + rtol * np.maximum(np.abs(y), np.abs(y5))
        err = np.sqrt(np.mean((np.abs(y5 - y4) / scale) ** 2))
        if err <= 1.0:
            t += h
            y = y5
            if last:
                break
            factor = 2.0 if err == 0 else min(2.0, max(0.2, 0.9 * err ** -0.2))
        else:
            factor = max(0.2, 0.9 * err ** -0.2)
        h *= factor
        if cap is not None:
            h = np.sign(span) * min(abs(h), cap)
        if max_step is not None:
            h = np.sign(span) * min(abs(h), max_step)
        if abs(h) < 1e-14 * abs(span):
            raise ODEFailure(t)
    return y


def continue_linear(system, y0, path, rtol=1e-10, atol=1e-13):
    """Continue y' = A(lambda) y along straight segments between waypoints."""
    y = np.array(y0, dtype=complex)
    for lam_a, lam_b in zip(path[:-1], path[1:]):
        dlam = lam_b - lam_a

        def f(tau, yv, a=lam_a, d=dlam):
            lam = a + tau * d
            return d * (system(lam) @ yv)

        y = integrate(f, y, 0.0, 1.0, rtol=rtol, atol=atol)
    return y


def continue_circle(system, y0, center, radius, theta0, theta1,
                    rtol=1e-10, atol=1e-13, min_steps=720):
    """Continue around an arc lambda = center + r e^{i theta}."""
    def f(theta, yv):
        lam = center + radius * np.exp(1j * theta)
        dlam = 1j * radius * np.exp(1j * theta)
        return dlam * (system(lam) @ yv)

    return integrate(f, np.array(y0, dtype=complex), theta0, theta1,
                     rtol=rtol, atol=atol,
                     max_step=2 * np.pi / max(min_steps, 1))
