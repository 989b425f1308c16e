"""Gamma, q-gamma and real-exponent q-Pochhammer evaluation.

The q-products are generic over the number type: pass floats for double
precision or mpmath.mpf values for the extended-precision mode.  Infinite
products (a;q)_inf are truncated when the tail bound |a| q^N / (1-q) falls
below the requested relative tolerance.
"""

from __future__ import annotations

import math


class PoleError(ArithmeticError):
    """Evaluation at a pole of Gamma or Gamma_q."""


def gamma_fn(x: float) -> float:
    """Gamma(x) for real x, rejecting the poles at nonpositive integers."""
    if x <= 0 and float(x) == int(x):
        raise PoleError("Gamma pole at %g" % x)
    return math.gamma(x)


def log_abs_gamma(x: float):
    """(log|Gamma(x)|, sign) for real non-pole x."""
    if x <= 0 and float(x) == int(x):
        raise PoleError("Gamma pole at %g" % x)
    if x > 0:
        return math.lgamma(x), 1
    sign = -1 if math.floor(-x) % 2 == 0 else 1
    return math.lgamma(x), sign


def gamma_product(numerators, denominators=()):
    """prod Gamma(a) / prod Gamma(b), accumulated in log space."""
    total = 0.0
    sign = 1
    for a in numerators:
        lg, s = log_abs_gamma(a)
        total += lg
        sign *= s
    for b in denominators:
        lg, s = log_abs_gamma(b)
        total -= lg
        sign *= s
    return sign * math.exp(total)


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1) for integer n >= 0."""
    if n < 0:
        raise ValueError("need n >= 0")
    out = 1.0
    for j in range(n):
        out *= a + j
    return out


# ---------------------------------------------------------------------------
# q-products
# ---------------------------------------------------------------------------

def qpoch_inf(a, q, tol=1e-17):
    """(a;q)_inf = prod_{j>=0} (1 - a q^j), truncated by the tail bound."""
    if not 0 < q < 1:
        raise ValueError("need 0 < q < 1")
    one = q / q  # unit in the working number type
    out = one
    aq = a * one
    bound = abs(a) / (1 - q)
    while bound > tol:
        out = out * (1 - aq)
        aq = aq * q
        bound = bound * q
    return out


def qpow(q, x):
    """q**x for real x in the number type of q."""
    return q ** x


def qpoch_real(a, q, z, tol=1e-17):
    """(a;q)_z = (a;q)_inf / (a q^z;q)_inf for real z."""
    den = qpoch_inf(a * qpow(q, z), q, tol)
    if den == 0:
        raise PoleError("(a;q)_z pole: (a q^z;q)_inf = 0")
    return qpoch_inf(a, q, tol) / den


def q_gamma(x, q, tol=1e-17):
    """Gamma_q(x) = (q;q)_inf / (q^x;q)_inf * (1-q)^{1-x}.

    Converges to Gamma(x) as q -> 1-.  Poles at x = 0, -1, -2, ...
    """
    if not 0 < q < 1:
        raise ValueError("need 0 < q < 1")
    xf = float(x)
    if xf <= 0 and xf == int(xf):
        raise PoleError("Gamma_q pole at %g" % xf)
    den = qpoch_inf(qpow(q, x), q, tol)
    if den == 0:
        raise PoleError("Gamma_q pole at %r" % (x,))
    return qpoch_inf(q, q, tol) / den * qpow(1 - q, 1 - x)
