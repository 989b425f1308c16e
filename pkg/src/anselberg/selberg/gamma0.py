"""The gamma = 0 degeneration and its combinatorial core.

At gamma = 0 the integrand decouples into one-dimensional beta factors but
the chain still couples the domain, so the left side is evaluated exactly
(for integer parameters) by expanding the integrand into monomials and
integrating each monomial over every weighted region's order polytope:
the integral of prod u_i^{c_i} over a chain 0 <= u_{sigma(1)} <= ... <= 1
is 1/prod_j (c_{sigma(1)} + ... + c_{sigma(j)} + j), summed over linear
extensions of the region's partial order.

The two polynomial identities behind the paper's evaluation - the
elementary-symmetric expansion over bounded partitions and its generating
form with the free x_0 - are verified exactly over Q[x] and Q[t, x].
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..chains import ChainSpec, chain_weight, map_tuples
from ..partitions import Partition
from ..ratfunc import Frac, Poly, Ring
from .closed_form import gamma0_rhs_exact


def _region_dag(spec: ChainSpec, maps):
    """Edges v -> w meaning x_v <= x_w, variables flattened selberg-style
    (descending groups): larger values point to smaller indices."""
    slices = spec.group_slices()
    edges = set()
    for a, b in slices:
        for i in range(a, b - 1):
            edges.add((i + 1, i))  # x_{i+1} <= x_i inside a group
    for s, M in enumerate(maps):
        a_cur, _ = slices[s]
        a_nxt, _ = slices[s + 1]
        for i in range(1, spec.k[s] + 1):
            m = M(i)
            edges.add((a_nxt + m - 1, a_cur + i - 1))   # t^{(s+1)}_m <= t^{(s)}_i
            if m > 1:
                edges.add((a_cur + i - 1, a_nxt + m - 2))
    return edges


def _linear_extensions(nvars, edges):
    """All orderings v_1, ..., v_K with v_1 smallest, respecting v <= w edges."""
    preds = {v: set() for v in range(nvars)}
    for v, w in edges:
        preds[w].add(v)  # w needs v placed first (v is smaller)

    def rec(placed, remaining):
        if not remaining:
            yield placed
            return
        for v in sorted(remaining):
            if preds[v] <= set(placed):
                yield from rec(placed + (v,), remaining - {v})

    yield from rec((), frozenset(range(nvars)))


def _chain_monomial_integral(expos, order):
    """Integral of prod x_v^{expos[v]} over 0 <= x_{order[0]} <= ... <= 1."""
    out = Fraction(1)
    acc = 0
    for j, v in enumerate(order, start=1):
        acc += expos[v]
        out /= acc + j
    return out


def _integrand_monomials(spec: ChainSpec, alpha: int, beta):
    """Expansion of prod (x_v)^{alpha_v - 1} (1 - x_v)^{beta_v - 1} into
    monomials: list of (coef, exponent tuple).  Integer parameters only."""
    n = spec.n
    per_var = []
    for s in range(1, n + 1):
        a_s = alpha if s == n else 1
        b_s = beta[s - 1]
        terms = [(Fraction((-1) ** j) * comb(b_s - 1, j), a_s - 1 + j)
                 for j in range(b_s)]
        per_var.extend([terms] * spec.k[s - 1])
    combos = [(Fraction(1), ())]
    for terms in per_var:
        combos = [(c * tc, e + (te,)) for c, e in combos for tc, te in terms]
    return combos


def gamma0_lhs_exact(k, alpha: int, beta) -> Fraction:
    """Exact gamma = 0 chain integral: gamma->0 limit weights times the
    region-by-region order-polytope integrals."""
    beta = tuple(int(b) for b in beta)
    if alpha < 1 or any(b < 1 for b in beta):
        raise ValueError("exact gamma = 0 evaluation needs integer parameters >= 1")
    spec = ChainSpec(len(k), tuple(k), 0.0)
    total = Fraction(0)
    monomials = _integrand_monomials(spec, alpha, beta)
    for maps in map_tuples(spec):
        w = Fraction(1)
        for s, M in enumerate(maps):
            ks, ks1 = spec.k[s], spec.k[s + 1]
            for i in range(1, ks + 1):
                w *= Fraction(i + ks1 - ks - M(i) + 1, i + ks1 - ks)
        region = Fraction(0)
        for order in _linear_extensions(spec.total_dim, _region_dag(spec, maps)):
            for coef, expos in monomials:
                region += coef * _chain_monomial_integral(expos, order)
        total += w * region
    return total


def gamma0_check(k, alpha: int, beta):
    """Exact comparison of the gamma = 0 chain integral with its closed form."""
    lhs = gamma0_lhs_exact(k, alpha, beta)
    rhs = gamma0_rhs_exact(tuple(k), alpha, tuple(beta))
    return {"pass": lhs == rhs, "lhs": lhs, "rhs": rhs}


# ---------------------------------------------------------------------------
# the symbolic identities (er) and (x0gen)
# ---------------------------------------------------------------------------

def _bounded_partitions(r, n):
    """Partitions with exactly r parts, each in 1..n."""
    def gen(rem_parts, mx):
        if rem_parts == 0:
            yield ()
            return
        for p in range(mx, 0, -1):
            for rest in gen(rem_parts - 1, p):
                yield (p,) + rest
    yield from gen(r, n)


def verify_er(r: int, n: int):
    """sum over partitions of prod 1/m_j! * prod (n - la_i - i + 2)(x_{la_i} -
    x_{la_i - 1}) equals e_r(x_1..x_n), exactly over Q[x]; x_0 = 0."""
    ring = Ring(tuple("x%d" % i for i in range(1, n + 1)))
    x = {i: Frac(ring.gens[i - 1]) for i in range(1, n + 1)}
    x[0] = Frac(ring.zero)
    lhs = Frac(ring.zero)
    for parts in _bounded_partitions(r, n):
        lam = Partition(parts)
        coef = Fraction(1)
        for j in range(1, n + 1):
            coef /= factorial(lam.multiplicity(j))
        term = Frac(ring.const(coef.numerator), ring.const(coef.denominator))
        for i, p in enumerate(parts, start=1):
            term = term * (n - p - i + 2) * (x[p] - x[p - 1])
        lhs = lhs + term
    # e_r over n variables
    rhs = Frac(ring.zero)
    idxs = list(range(1, n + 1))
    from itertools import combinations
    for sel in combinations(idxs, r):
        term = Frac(ring.one)
        for i in sel:
            term = term * x[i]
        rhs = rhs + term
    return {"pass": lhs == rhs, "lhs": lhs, "rhs": rhs}


def verify_x0gen(n: int):
    """The generating-function form with a free x_0: both sides exact
    polynomials in t, x_0, ..., x_n."""
    ring = Ring(("t",) + tuple("x%d" % i for i in range(n + 1)))
    t = Frac(ring.gens[0])
    x = {i: Frac(ring.gens[i + 1]) for i in range(n + 1)}
    one = Frac(ring.one)

    def compositions(total_max, slots):
        if slots == 0:
            yield ()
            return
        for first in range(total_max + 1):
            for rest in compositions(total_max - first, slots - 1):
                yield (first,) + rest

    lhs = Frac(ring.zero)
    for ms in compositions(n, n):  # terms with M_1 > n vanish by 1/(n-M_1)!
        M = [0] * (n + 2)
        for j in range(n, 0, -1):
            M[j] = M[j + 1] + ms[j - 1]
        if M[1] > n:
            continue
        coef = Fraction(1, factorial(n - M[1]))
        term = (one + t * x[0]) ** (n - M[1])
        for j in range(1, n + 1):
            coef *= Fraction(n - j + 1 - M[j + 1], 1) / factorial(ms[j - 1])
            term = term * (t * (x[j] - x[j - 1])) ** ms[j - 1]
        term = term * Frac(ring.const(coef.numerator), ring.const(coef.denominator))
        lhs = lhs + term
    rhs = one
    for i in range(1, n + 1):
        rhs = rhs * (one + t * x[i])
    return {"pass": lhs == rhs, "lhs": lhs, "rhs": rhs}
