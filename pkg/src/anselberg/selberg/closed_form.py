"""Closed-form gamma-product evaluations of the chain integrals.

All products follow the boundary conventions k_0 = k_{n+1} = 0 and
alpha_1 = ... = alpha_{n-1} = 1, alpha_n = alpha.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..partitions import Partition
from .params import SelbergParams
from .special import gamma_product, pochhammer


def an_selberg_rhs(p: SelbergParams) -> float:
    """The gamma-product value of the requested variant."""
    if p.variant == "finite":
        return _finite_rhs(p)
    if p.variant == "exp1":
        return _exp1_rhs(p)
    if p.variant == "exp2":
        return _exp2_rhs(p)
    if p.variant == "jack":
        return _jack_prefactor(p) * _finite_rhs(p)
    raise ValueError(p.variant)


def _finite_rhs(p: SelbergParams) -> float:
    n, g = p.n, p.gamma
    num, den = [], []
    for s in range(1, n + 1):
        for r in range(s, n + 1):
            bsum = p.beta_sum(s, r)
            for i in range(1, p.k_at(s) - p.k_at(s - 1) + 1):
                num.append(bsum + (i + s - r - 1) * g)
                den.append(p.alpha_s(r) + bsum + (i + s - r + p.k_at(r) - p.k_at(r + 1) - 2) * g)
    for s in range(1, n + 1):
        for i in range(1, p.k_at(s) + 1):
            num.append(p.alpha_s(s) + (i - p.k_at(s + 1) - 1) * g)
            num.append(i * g)
            den.append(g)
    return gamma_product(num, den)


def _exp1_rhs(p: SelbergParams) -> float:
    n, g = p.n, p.gamma
    out = 1.0
    for s in range(1, n + 1):
        for r in range(s, n + 1):
            expo = -(p.alpha_s(r) + (p.k_at(r) - p.k_at(r + 1) - 1) * g) * (p.k_at(s) - p.k_at(s - 1))
            out *= p.beta_sum(s, r) ** expo
    num, den = [], []
    for s in range(1, n + 1):
        for i in range(1, p.k_at(s) + 1):
            num.append(p.alpha_s(s) + (i - p.k_at(s + 1) - 1) * g)
            num.append(i * g)
            den.append(g)
    return out * gamma_product(num, den)


def _exp2_rhs(p: SelbergParams) -> float:
    n, g = p.n, p.gamma
    num, den = [], []
    for s in range(1, n + 1):
        for r in range(s, n + 1):
            bsum = p.beta_sum(s, r)
            for i in range(1, p.k_at(s) - p.k_at(s - 1) + 1):
                num.append(bsum + (i + s - r - 1) * g)
                if r <= n - 1:
                    den.append(1 + bsum + (i + s - r + p.k_at(r) - p.k_at(r + 1) - 2) * g)
    for s in range(1, n + 1):
        for i in range(1, p.k_at(s) + 1):
            num.append(i * g)
            den.append(g)
    for s in range(1, n):
        for i in range(1, p.k_at(s) + 1):
            num.append(1 + (i - p.k_at(s + 1) - 1) * g)
    return gamma_product(num, den)


def _jack_prefactor(p: SelbergParams) -> float:
    """The Pochhammer correction attached to the Jack polynomial P_mu^{(1/gamma)}."""
    mu, g, n = p.mu, p.gamma, p.n
    k1 = p.k[0]
    out = 1.0
    for i in range(1, k1 + 1):
        for j in range(i + 1, k1 + 1):
            d = mu[i] - mu[j]
            out *= pochhammer((j - i + 1) * g, d) / pochhammer((j - i) * g, d)
    for s in range(1, n + 1):
        bsum = p.beta_sum(1, s)
        for i in range(1, k1 + 1):
            m = mu[i]
            out *= pochhammer(bsum + (k1 - s - i + 1) * g, m)
            out /= pochhammer(p.alpha_s(s) + bsum + (k1 + p.k_at(s) - p.k_at(s + 1) - s - i) * g, m)
    return out


def selberg_rhs_unordered(k: int, alpha: float, beta: float, gamma: float) -> float:
    """The classical Selberg value over the full cube [0,1]^k."""
    num, den = [], []
    for i in range(1, k + 1):
        num.append(alpha + (i - 1) * gamma)
        num.append(beta + (i - 1) * gamma)
        num.append(i * gamma + 1)
        den.append(alpha + beta + (i + k - 2) * gamma)
        den.append(gamma + 1)
    return gamma_product(num, den)


def selberg_rhs_ordered(k: int, alpha: float, beta: float, gamma: float) -> float:
    """The classical Selberg value over the descending simplex (cube / k!)."""
    return selberg_rhs_unordered(k, alpha, beta, gamma) / math.factorial(k)


def kadell_rhs(k: int, alpha: float, beta: float, gamma: float, mu: Partition) -> float:
    """Kadell's Jack-Selberg value: (1/k!) int_{[0,1]^k} P_mu^{(1/gamma)} x
    the Selberg weight, as a gamma product."""
    num, den = [], []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            num.append((j - i + 1) * gamma + mu[i] - mu[j])
            den.append((j - i) * gamma + mu[i] - mu[j])
    for i in range(1, k + 1):
        num.append(alpha + (k - i) * gamma + mu[i])
        num.append(beta + (i - 1) * gamma)
        den.append(alpha + beta + (2 * k - i - 1) * gamma + mu[i])
    return gamma_product(num, den)


def aomoto_rhs_unordered(k: int, r: int, alpha: float, beta: float, gamma: float) -> float:
    """Aomoto's integral over [0,1]^k with the extra factor x_1 ... x_r."""
    out = 1.0
    for i in range(1, r + 1):
        out *= (alpha + (k - i) * gamma) / (alpha + beta + (2 * k - i - 1) * gamma)
    return out * selberg_rhs_unordered(k, alpha, beta, gamma)


def keen_factor(beta1: float, gamma: float) -> float:
    """Gamma(1-gamma) Gamma(beta_1) / Gamma(beta_1 - gamma + 1)."""
    return gamma_product([1 - gamma, beta1], [beta1 - gamma + 1])


def keen_reduced_params(p: SelbergParams) -> SelbergParams:
    """The right-hand side of the k_1 = k_2 = 1 recursion: one group fewer,
    beta_1 and beta_2 merged into beta_1 + beta_2 - gamma."""
    if p.n < 2 or p.k[0] != 1 or p.k[1] != 1:
        raise ValueError("recursion needs k_1 = k_2 = 1")
    beta = (p.beta[0] + p.beta[1] - p.gamma,) + p.beta[2:]
    return SelbergParams(n=p.n - 1, k=p.k[1:], alpha=p.alpha,
                         beta=beta, gamma=p.gamma, variant=p.variant)


def example_1k_rhs(n: int, k: int, alpha: float, beta, gamma: float) -> float:
    """The worked (1,...,1,k) evaluation: closed form of the n-group chain
    with k_1 = ... = k_{n-1} = 1 and k_n = k."""
    beta = tuple(beta)
    if len(beta) != n:
        raise ValueError("need n beta parameters")
    num, den = [], []
    num.append(1 - k * gamma)
    for _ in range(n - 2):
        num.append(1 - gamma)
    for i in range(1, k + 1):
        num.append(alpha + (i - 1) * gamma)
        num.append(i * gamma)
        den.append(gamma)
    for i in range(1, k):
        num.append(beta[n - 1] + (i - 1) * gamma)
        den.append(alpha + beta[n - 1] + (i + k - 2) * gamma)
    bsum = 0.0
    for i in range(1, n + 1):
        bsum += beta[i - 1]
        if i <= n - 2:
            a_i = 1.0
        elif i == n - 1:
            a_i = 1 - (k - 1) * gamma
        else:
            a_i = alpha + k * gamma
        num.append(bsum + (1 - i) * gamma)
        den.append(a_i + bsum - i * gamma)
    return gamma_product(num, den)


def a2_1k_rhs(k: int, alpha: float, beta1: float, beta2: float, gamma: float) -> float:
    """The displayed n = 2 evaluation of the (1, k) chain integral."""
    num = [beta1, 1 - k * gamma, alpha + beta2 + (2 * k - 2) * gamma, beta1 + beta2 - gamma]
    den = [1 + beta1 - k * gamma, alpha + beta1 + beta2 + (k - 2) * gamma,
           beta2 + (k - 1) * gamma]
    for i in range(1, k + 1):
        num.append(alpha + (i - 1) * gamma)
        num.append(beta2 + (i - 1) * gamma)
        num.append(i * gamma)
        den.append(alpha + beta2 + (i + k - 2) * gamma)
        den.append(gamma)
    return gamma_product(num, den)


def gamma0_rhs(k, alpha: float, beta) -> float:
    """The gamma = 0 value of the chain integral:

        prod_{1<=s<=r<=n-1} (beta_s+..+beta_r)^{-(k_s-k_{s-1})}
        * prod_s (1/k_s!) B(alpha, beta_s+..+beta_n)^{k_s-k_{s-1}},

    i.e. the gamma -> 0 limit of the finite closed form.  (The first factor
    is confirmed by the worked (1,k) special case with its 1/beta_1.)
    """
    n = len(k)
    out = 1.0
    kprev = 0
    for s in range(1, n + 1):
        bsum = sum(beta[s - 1:])
        bval = gamma_product([alpha, bsum], [alpha + bsum])
        out *= bval ** (k[s - 1] - kprev) / math.factorial(k[s - 1])
        for r in range(s, n):
            out /= sum(beta[s - 1:r]) ** (k[s - 1] - kprev)
        kprev = k[s - 1]
    return out


def gamma0_rhs_exact(k, alpha: int, beta) -> Fraction:
    """Exact rational gamma = 0 value for integer parameters."""
    n = len(k)
    out = Fraction(1)
    kprev = 0
    for s in range(1, n + 1):
        bsum = sum(beta[s - 1:])
        bval = Fraction(math.factorial(alpha - 1) * math.factorial(bsum - 1),
                        math.factorial(alpha + bsum - 1))
        out *= bval ** (k[s - 1] - kprev) / math.factorial(k[s - 1])
        for r in range(s, n):
            out /= Fraction(sum(beta[s - 1:r])) ** (k[s - 1] - kprev)
        kprev = k[s - 1]
    return out
