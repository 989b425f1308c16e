"""Phase-function evaluation for the chain integrals.

Points are grouped as t^{(1)}, ..., t^{(n)}.  The vectorized form takes a
list of (N, k_s) arrays and returns an N-vector; coincident coordinates
(measure zero under continuous sampling) yield zero contributions and are
counted by the caller.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..macdonald import jack_P_numeric, monomial_in_vars
from ..partitions import Partition
from .params import SelbergParams

RATIONAL_GAMMA_DEN_LIMIT = 10 ** 6


def jack_coeff_floats(mu: Partition, gamma: float):
    """Monomial coefficients of P_mu^{(1/gamma)} as floats.

    gamma values that are exact binary rationals (the usual case for CLI
    inputs) go through exact-rational alpha; otherwise alpha is a float.
    """
    frac = Fraction(gamma)
    if frac.denominator <= RATIONAL_GAMMA_DEN_LIMIT and frac != 0:
        alpha = 1 / frac
    else:
        alpha = 1.0 / gamma
    coeffs = jack_P_numeric(mu, alpha)
    return {lam: float(c) for lam, c in coeffs.items()}


def jack_factor_vec(mu: Partition, gamma: float, x: np.ndarray) -> np.ndarray:
    """P_mu^{(1/gamma)} evaluated rowwise on an (N, k_1) array."""
    if mu.weight() == 0:
        return np.ones(len(x))
    nvars = x.shape[1]
    coeffs = jack_coeff_floats(mu, gamma)
    out = np.zeros(len(x))
    for lam, c in coeffs.items():
        if lam.length() > nvars:
            continue
        msum = np.zeros(len(x))
        for expo in monomial_in_vars(lam, nvars):
            term = np.ones(len(x))
            for col, e in enumerate(expo):
                if e:
                    term = term * x[:, col] ** e
            msum += term
        out += c * msum
    return out


def _vandermonde_pow(g: np.ndarray, expo: float) -> np.ndarray:
    """prod_{i<j} |g_i - g_j|^expo along rows."""
    n = g.shape[1]
    out = np.ones(len(g))
    for i in range(n):
        for j in range(i + 1, n):
            out *= np.abs(g[:, i] - g[:, j]) ** expo
    return out


def _cross_pow(a: np.ndarray, b: np.ndarray, expo: float) -> np.ndarray:
    """prod_{i,j} |a_i - b_j|^expo along rows."""
    out = np.ones(len(a))
    for i in range(a.shape[1]):
        for j in range(b.shape[1]):
            out *= np.abs(a[:, i] - b[:, j]) ** expo
    return out


def phase_integrand_vec(p: SelbergParams, groups) -> np.ndarray:
    """The integrand of the requested variant on grouped sample arrays."""
    g = p.gamma
    n = p.n
    npts = len(groups[0]) if groups else 0
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.ones(npts)
        for s in range(1, n + 1):
            x = groups[s - 1]
            if x.shape[1] == 0:
                continue
            out *= _vandermonde_pow(x, 2 * g)
            for i in range(x.shape[1]):
                xi = x[:, i]
                if p.variant == "finite":
                    a_s = p.alpha_s(s)
                    if a_s != 1.0:
                        out *= xi ** (a_s - 1)
                    out *= (1 - xi) ** (p.beta[s - 1] - 1)
                elif p.variant == "exp1":
                    a_s = p.alpha_s(s)
                    if a_s != 1.0:
                        out *= xi ** (a_s - 1)
                    out *= np.exp(-p.beta[s - 1] * xi)
                elif p.variant == "exp2":
                    out *= xi ** (p.beta[s - 1] - 1)
                    if s == n:
                        out *= np.exp(-xi)
                elif p.variant == "jack":
                    a_s = p.alpha_s(s)
                    if a_s != 1.0:
                        out *= (1 - xi) ** (a_s - 1)
                    out *= xi ** (p.beta[s - 1] - 1)
        for s in range(1, n):
            if groups[s - 1].shape[1] and groups[s].shape[1]:
                out *= _cross_pow(groups[s - 1], groups[s], -g)
        if p.variant == "jack" and groups[0].shape[1]:
            out *= jack_factor_vec(p.mu, g, groups[0])
    return out


def phase_integrand(p: SelbergParams, point) -> float:
    """Scalar integrand; raises at coincident (singular) points."""
    from ..chains import ChainSpec
    spec_orient = "qintegral" if p.variant in ("exp2", "jack") else "selberg"
    spec = ChainSpec(p.n, p.k, p.gamma, spec_orient)
    pt = np.asarray(point, dtype=float).reshape(1, -1)
    groups = [pt[:, a:b] for a, b in spec.group_slices()]
    val = phase_integrand_vec(p, groups)[0]
    if not np.isfinite(val):
        raise ValueError("integrand is singular at %r" % (point,))
    return float(val)
