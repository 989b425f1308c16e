"""The restricted q-integral route: truncated lattice sum vs Gamma_q product.

The left side is the sum over tuples of partitions (ordered by the
interleaving constraint) of the q-deformed integrand with x_i^{(s)} =
q^{lambda_i^{(s)}}; every factor reduces to ratios of infinite products
S(y) = (q^y;q)_inf at a small set of base exponents shifted by integers,
so the whole sum is assembled from precomputed tables.  Cross-group
factors with negative shifts use the rewriting

    (1 - q^e) = -q^e (1 - q^{-e})        (e < 0)

to stay in safe floating-point range.  Pass precision="extended" for an
mpmath evaluation at >= 30 significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..partitions import Partition, partitions_boxed
from .params import QSelbergParams, validate_params
from .special import PoleError, q_gamma, qpoch_inf


@dataclass
class QIntegralResult:
    lhs: float
    rhs: float
    rel_err: float
    tail_indicator: float
    terms: int
    shells: list


def _context(qp: QSelbergParams, precision: str, dps: int):
    if precision == "extended":
        from mpmath import mp, mpf
        mp.dps = max(dps, 30)
        q = mpf(repr(qp.q))
        tol = mpf(10) ** (-(mp.dps + 5))
    elif precision == "double":
        q = float(qp.q)
        tol = 1e-17
    else:
        raise ValueError("precision must be double or extended")
    return q, tol


class _STable:
    """S(base + j) for j = 0..jmax, S(y) = (q^y;q)_inf."""

    def __init__(self, q, base, jmax, tol):
        self.base = base
        vals = [qpoch_inf(q ** base, q, tol)]
        for j in range(jmax):
            prev = vals[-1]
            vals.append(prev / (1 - q ** (base + j)))
        self.vals = vals

    def __call__(self, j):
        return self.vals[j]


def _safe_ratio(q, e, gamma):
    """(1 - q^e) / (1 - q^{e - gamma}) in a form stable for e < 0."""
    if e > 0:
        num = 1 - q ** e
        den = 1 - q ** (e - gamma)
        if den == 0:
            raise PoleError("degenerate q-exponent %r" % (e - gamma,))
        return num / den
    if e == 0:
        return 0 * q
    den = 1 - q ** (gamma - e)
    if den == 0:
        raise PoleError("degenerate q-exponent %r" % (gamma - e,))
    return q ** gamma * (1 - q ** (-e)) / den


class _CrossTable:
    """F_u(d) = S(1 - u*gamma + d) / S(1 - (u+1)*gamma + d) for d in [-W, W]."""

    def __init__(self, q, gamma, u, W, tol):
        self.W = W
        top = (qpoch_inf(q ** (1 - u * gamma + W), q, tol)
               / qpoch_inf(q ** (1 - (u + 1) * gamma + W), q, tol))
        vals = [top]
        for d in range(W - 1, -W - 1, -1):
            vals.append(_safe_ratio(q, 1 - u * gamma + d, gamma) * vals[-1])
        vals.reverse()  # vals[i] corresponds to d = i - W
        self.vals = vals

    def __call__(self, d):
        return self.vals[d + self.W]


def q_selberg_both(qp: QSelbergParams, precision: str = "double", dps: int = 30) -> QIntegralResult:
    """Both sides of the restricted q-integral identity, truncated at
    total weight qp.trunc_weight."""
    p = qp.base
    if p.variant != "finite":
        raise ValueError("the q-integral route applies to the finite variant")
    report = validate_params(p)
    if not report.ok:
        raise ValueError("invalid parameters: %s" % "; ".join(report.violations))
    q, tol = _context(qp, precision, dps)
    gamma, alpha = p.gamma, p.alpha
    n, k, W = p.n, p.k, qp.trunc_weight
    kn = k[-1]

    # tables: last-group prefactor (q^{1+(kn-i)gamma} x_i;q)_{alpha-1}
    s_num = [_STable(q, 1 + (kn - i) * gamma, W, tol) for i in range(1, kn + 1)]
    s_den = [_STable(q, alpha + (kn - i) * gamma, W, tol) for i in range(1, kn + 1)]
    # within-group Pochhammer parts, indexed by j - i
    max_gap = max(k) - 1
    g_num = {m: _STable(q, 1 + (m - 1) * gamma, W, tol) for m in range(1, max_gap + 1)}
    g_den = {m: _STable(q, (m + 1) * gamma, W, tol) for m in range(1, max_gap + 1)}
    # cross-group ratio tables per consecutive pair
    cross = []
    for s in range(n - 1):
        ks, ks1 = k[s], k[s + 1]
        us = range(1 - ks1, ks)  # u = i - j - k_s + k_{s+1} over the index box
        cross.append({u: _CrossTable(q, gamma, u + ks1 - ks, W, tol) for u in us})
        # note: stored keyed by i - j; u_{ij} = (i - j) + k_{s+1} - k_s

    one = 1 + 0 * q

    def group_factor(lam: Partition, ks: int, beta_s):
        w = sum(lam.parts)
        out = q ** (beta_s * w)
        for i in range(1, ks + 1):
            for j in range(i + 1, ks + 1):
                d = lam[i] - lam[j]
                m = j - i
                out *= q ** (2 * gamma * lam[j])
                out *= 1 - q ** (m * gamma + d)
                out *= g_num[m](d) / g_den[m](d)
        return out

    def cross_factor(s, lam: Partition, mu: Partition):
        ks, ks1 = k[s], k[s + 1]
        tab = cross[s]
        out = q ** (-gamma * ks * sum(mu.parts))
        for i in range(1, ks + 1):
            for j in range(1, ks1 + 1):
                out *= tab[i - j](lam[i] - mu[j])
        return out

    def last_group_prefactor(lam: Partition):
        out = one
        for i in range(1, kn + 1):
            d = lam[i]
            out *= s_num[i - 1](d) / s_den[i - 1](d)
        return out

    shells = [0 * q for _ in range(W + 1)]
    terms = 0

    def descend(s, rem, upper, acc):
        """Sum over lambda^{(s)}, ..., lambda^{(1)} given lambda^{(s+1)} = upper."""
        nonlocal terms
        ks = k[s - 1]
        if s < n:
            ks1 = k[s]
            lower = [upper[i + ks1 - ks] for i in range(1, ks + 1)]
        else:
            lower = []
        for w in range(rem + 1):
            for lam in partitions_boxed(w, lower=lower, max_length=ks):
                fac = acc * group_factor(lam, ks, p.beta[s - 1])
                if s == n:
                    fac = fac * last_group_prefactor(lam)
                else:
                    fac = fac * cross_factor(s - 1, lam, upper)
                if s > 1:
                    descend(s - 1, rem - w, lam, fac)
                else:
                    shells[W - (rem - w)] += fac
                    terms += 1

    descend(n, W, Partition(()), one)

    prefactor = (1 - q) ** sum(k)
    lhs = prefactor * sum(shells)

    # right-hand side
    rhs = one
    for s in range(1, n + 1):
        for r in range(s, n + 1):
            bsum = p.beta_sum(s, r)
            for i in range(1, p.k_at(s) - p.k_at(s - 1) + 1):
                rhs *= q_gamma(bsum + (i + s - r - 1) * gamma, q, tol)
                rhs /= q_gamma(p.alpha_s(r) + bsum
                               + (i + s - r + p.k_at(r) - p.k_at(r + 1) - 2) * gamma, q, tol)
    for s in range(1, n + 1):
        for i in range(1, p.k_at(s) + 1):
            rhs *= q_gamma(p.alpha_s(s) + (i - p.k_at(s + 1) - 1) * gamma, q, tol)
            rhs *= q_gamma(i * gamma, q, tol) / q_gamma(gamma, q, tol)

    rel = abs(lhs / rhs - 1)
    tail = abs(prefactor * shells[W] / rhs) if W >= 0 else 0.0
    return QIntegralResult(lhs=lhs, rhs=rhs, rel_err=rel,
                           tail_indicator=tail, terms=terms,
                           shells=[prefactor * s for s in shells])
