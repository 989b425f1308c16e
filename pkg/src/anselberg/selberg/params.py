"""Parameter records and the validity window of the closed-form evaluations.

The inequalities are those of the finite-integral theorem, with the A/0
convention: whenever a bound has the form A/0 it is read as +-infinity with
the sign of A, which drops the condition.  For shapes with k_s = k_{s-1}
the paper only promises the result with "minor modifications", so these are
flagged as warnings rather than violations.  The upper bound gamma < 1/k_n
comes from the internal groups and does not apply when n = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..partitions import EMPTY, Partition

VARIANTS = ("finite", "exp1", "exp2", "jack")


@dataclass(frozen=True)
class SelbergParams:
    n: int
    k: tuple
    alpha: float
    beta: tuple
    gamma: float
    variant: str = "finite"
    mu: Partition = EMPTY

    def __post_init__(self):
        if self.n < 1 or len(self.k) != self.n or len(self.beta) != self.n:
            raise ValueError("need len(k) == len(beta) == n >= 1")
        if any(b < a for a, b in zip(self.k, self.k[1:])) or self.k[0] < 0:
            raise ValueError("need 0 <= k_1 <= ... <= k_n")
        if self.variant not in VARIANTS:
            raise ValueError("variant must be one of %r" % (VARIANTS,))
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        object.__setattr__(self, "beta", tuple(float(b) for b in self.beta))

    def alpha_s(self, s: int) -> float:
        """alpha_1 = ... = alpha_{n-1} = 1 and alpha_n = alpha."""
        return self.alpha if s == self.n else 1.0

    def k_at(self, s: int) -> int:
        """k_s with the boundary convention k_0 = k_{n+1} = 0."""
        if 1 <= s <= self.n:
            return self.k[s - 1]
        return 0

    def beta_sum(self, s: int, r: int) -> float:
        """beta_s + ... + beta_r."""
        return sum(self.beta[s - 1:r])


@dataclass(frozen=True)
class QSelbergParams:
    base: SelbergParams
    q: float
    trunc_weight: int

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise ValueError("need 0 < q < 1")
        if self.trunc_weight < 0:
            raise ValueError("need trunc_weight >= 0")


@dataclass
class ParamReport:
    ok: bool
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def validate_params(p: SelbergParams) -> ParamReport:
    """Check the hypotheses of the requested variant; violations are data."""
    v, w = [], []
    n, k, gamma = p.n, p.k, p.gamma
    kn = k[-1]

    if p.variant in ("finite", "exp1", "jack"):
        if not p.alpha > 0:
            v.append("Re(alpha) > 0 fails (alpha = %g)" % p.alpha)
    for s, b in enumerate(p.beta, start=1):
        if not b > 0:
            v.append("Re(beta_%d) > 0 fails (beta_%d = %g)" % (s, s, b))

    if p.variant in ("finite", "exp1", "jack"):
        lower = -math.inf
        if kn >= 1:
            lower = max(lower, -1.0 / kn)
        if kn > 1 and p.alpha > 0:
            lower = max(-p.alpha / (kn - 1), -1.0 / kn)
        if not gamma > lower:
            v.append("gamma > -min{alpha/(k_n-1), 1/k_n} fails (%g <= %g)"
                     % (gamma, lower))
        if n >= 2 and kn >= 1 and not gamma < 1.0 / kn:
            v.append("gamma < 1/k_n fails (%g >= %g)" % (gamma, 1.0 / kn))
    elif p.variant == "exp2":
        if kn >= 1:
            if not -1.0 / kn < gamma < 1.0 / kn:
                v.append("-1/k_n < gamma < 1/k_n fails (gamma = %g)" % gamma)

    if p.variant in ("finite", "exp2", "jack"):
        for s in range(1, n + 1):
            div = p.k_at(s) - p.k_at(s - 1) - 1
            if div > 0:
                bound = -p.beta[s - 1] / div
                if not gamma > bound:
                    v.append("gamma > -beta_%d/(k_%d-k_%d-1) fails (%g <= %g)"
                             % (s, s, s - 1, gamma, bound))
            elif div < 0:
                w.append("k_%d = k_%d: paper-unspecified condition regime" % (s, s - 1))
        for s in range(1, n + 1):
            for r in range(s + 1, n + 1):
                bound = p.beta_sum(s, r) / (r - s)
                if not gamma < bound:
                    v.append("gamma < (beta_%d+..+beta_%d)/(%d) fails (%g >= %g)"
                             % (s, r, r - s, gamma, bound))

    if p.variant == "jack":
        if p.mu.length() > k[0]:
            v.append("l(mu) <= k_1 fails (l = %d > %d)" % (p.mu.length(), k[0]))

    return ParamReport(ok=not v, violations=v, warnings=w)
