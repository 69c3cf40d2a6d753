"""Pure-numpy kernels: reference implementation and import-time fallback.

Signatures mirror ``_kernels_cy``.  The tridiagonal RK4 stepper propagates the
self-consistent von Neumann flow for effective hamiltonians of the form
diag(d) + offdiag(e); because every product is evaluated with conjugate-pair
symmetric arithmetic, the state stays hermitian to the bit and only the trace
needs renormalizing each step (the dense path in `dynamics` re-hermitizes for
real).
"""

from __future__ import annotations

import numpy as np


def _mu_components(y: np.ndarray, d1: np.ndarray, e1: np.ndarray) -> np.ndarray:
    diag = y.diagonal().real
    sup = y.diagonal(1).real
    sub = y.diagonal(-1).real
    return d1 @ diag + e1 @ (sup + sub)


def _rhs(y, d0, e0, d1, e1, lam, mu_out):
    mu = _mu_components(y, d1, e1)
    mu_out[:] = mu
    d = d0 - lam * (mu @ d1)
    e = e0 - lam * (mu @ e1)
    hy = d[:, None] * y
    hy[1:] += e[:, None] * y[:-1]
    hy[:-1] += e[:, None] * y[1:]
    yh = y * d[None, :]
    yh[:, 1:] += y[:, :-1] * e[None, :]
    yh[:, :-1] += y[:, 1:] * e[None, :]
    return -1j * (hy - yh)


def meanfield_rk4_span(rho, d0, e0, d1, e1, lam, dt, nsteps, mu_buf, threads=1):
    """Advance `rho` in place by `nsteps` RK4 steps; returns max pre-correction
    (trace defect, diagonal-imaginary defect) over the span."""
    trace_err = 0.0
    herm_err = 0.0
    for _ in range(nsteps):
        k1 = _rhs(rho, d0, e0, d1, e1, lam, mu_buf)
        k2 = _rhs(rho + (0.5 * dt) * k1, d0, e0, d1, e1, lam, mu_buf)
        k3 = _rhs(rho + (0.5 * dt) * k2, d0, e0, d1, e1, lam, mu_buf)
        k4 = _rhs(rho + dt * k3, d0, e0, d1, e1, lam, mu_buf)
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        diag = rho.diagonal()
        herm_err = max(herm_err, float(np.max(np.abs(diag.imag))))
        tr = float(diag.real.sum())
        trace_err = max(trace_err, abs(tr - 1.0))
        rho *= 1.0 / tr
    return trace_err, herm_err


def hmf_leapfrog_span(theta, p, lam, dt, nsteps, mu_buf, threads=1):
    """Advance the mean-field pendulum ensemble in place by `nsteps`
    kick-drift-kick steps; leaves (mu1, mu2) of the final positions in mu_buf."""
    c = np.cos(theta)
    s = np.sin(theta)
    mu1 = float(c.mean())
    mu2 = float(s.mean())
    half = 0.5 * dt * lam
    for _ in range(nsteps):
        p -= half * (mu1 * s - mu2 * c)
        theta += dt * p
        theta += np.pi
        np.mod(theta, 2.0 * np.pi, out=theta)
        theta -= np.pi
        np.cos(theta, out=c)
        np.sin(theta, out=s)
        mu1 = float(c.mean())
        mu2 = float(s.mean())
        p -= half * (mu1 * s - mu2 * c)
    mu_buf[0] = mu1
    mu_buf[1] = mu2
