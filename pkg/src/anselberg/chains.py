"""Interleaving maps, weighted integration regions and chain weights.

A chain C^{k_1..k_n}_gamma[a,b] is a formal sum of regions indexed by
tuples of interleaving maps M_1..M_{n-1}, each region weighted by a product
of ratios of sines of pi*gamma-multiples.  Two orientations are used: the
"selberg" one (descending coordinates inside every group, upper neighbour
t^{(s+1)}_0 = b) and the "qintegral" one (ascending coordinates, lower
neighbour x^{(s+1)}_0 = 0), which are exchanged by x = 1 - t on [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from math import comb

import numpy as np

GAMMA_SWITCH = 1e-8   # below this |gamma|, sine ratios use their rational limits
EPS_SIN = 1e-10       # degenerate-parameter threshold on denominator arguments


class DegenerateGammaError(ValueError):
    """A chain-weight denominator sin(pi * m * gamma) vanishes (to within EPS_SIN)."""


@dataclass(frozen=True)
class InterleavingMap:
    """A monotone map {1..source_size} -> {1..target_size} with
    M(i) <= target_size - source_size + i."""

    source_size: int
    target_size: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.source_size:
            raise ValueError("map must have %d values" % self.source_size)
        prev = 1
        for i, v in enumerate(self.values, start=1):
            if not (prev <= v <= self.target_size - self.source_size + i):
                raise ValueError("invalid interleaving map %r" % (self.values,))
            prev = v

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def to_json(self):
        return list(self.values)


@dataclass(frozen=True)
class ChainSpec:
    """Shape data (k_1 <= ... <= k_n) plus gamma and an orientation."""

    n: int
    k: tuple
    gamma: float
    orientation: str = "selberg"

    def __post_init__(self):
        if self.n < 1 or len(self.k) != self.n:
            raise ValueError("need n >= 1 and len(k) == n")
        if any(b < a for a, b in zip(self.k, self.k[1:])) or self.k[0] < 0:
            raise ValueError("need 0 <= k_1 <= ... <= k_n")
        if self.orientation not in ("selberg", "qintegral"):
            raise ValueError("orientation must be selberg or qintegral")

    @property
    def total_dim(self):
        return sum(self.k)

    def group_slices(self):
        """Index ranges of the groups inside a flat coordinate vector."""
        out = []
        start = 0
        for ks in self.k:
            out.append((start, start + ks))
            start += ks
        return out


def enumerate_maps(ks: int, ks1: int):
    """All interleaving maps {1..ks} -> {1..ks1}, lexicographically."""
    if ks > ks1 or ks < 0:
        raise ValueError("need 0 <= ks <= ks1")

    def gen(i, lo):
        if i > ks:
            yield ()
            return
        for v in range(lo, ks1 - ks + i + 1):
            for rest in gen(i + 1, v):
                yield (v,) + rest

    return [InterleavingMap(ks, ks1, vals) for vals in gen(1, 1)]


def count_maps(ks: int, ks1: int) -> int:
    """(ks1 - ks + 1)/(ks1 + 1) * binom(ks + ks1, ks), a ballot number."""
    if ks > ks1 or ks < 0:
        raise ValueError("need 0 <= ks <= ks1")
    return (ks1 - ks + 1) * comb(ks + ks1, ks) // (ks1 + 1)


def map_tuples(spec: ChainSpec):
    """All tuples (M_1, ..., M_{n-1}) of admissible interleaving maps."""
    pools = [enumerate_maps(spec.k[s], spec.k[s + 1]) for s in range(spec.n - 1)]
    return [tuple(mt) for mt in product(*pools)]


def _split_groups(spec: ChainSpec, point):
    pt = list(point)
    if len(pt) != spec.total_dim:
        raise ValueError("point must have %d coordinates" % spec.total_dim)
    return [pt[a:b] for a, b in spec.group_slices()]


def region_contains(spec: ChainSpec, maps, point) -> bool:
    """Closed-region membership for one map tuple (boundaries included)."""
    if len(maps) != spec.n - 1:
        raise ValueError("need %d maps" % (spec.n - 1))
    groups = _split_groups(spec, point)
    desc = spec.orientation == "selberg"
    for g in groups:
        for a, b in zip(g, g[1:]):
            if desc and a < b:
                return False
            if not desc and a > b:
                return False
    for s, M in enumerate(maps):
        cur, nxt = groups[s], groups[s + 1]
        if M.source_size != spec.k[s] or M.target_size != spec.k[s + 1]:
            raise ValueError("map sizes do not match the shape")
        for i in range(1, spec.k[s] + 1):
            m = M(i)
            if desc:
                hi = math.inf if m == 1 else nxt[m - 2]
                if not (nxt[m - 1] <= cur[i - 1] <= hi):
                    return False
            else:
                lo = 0.0 if m == 1 else nxt[m - 2]
                if not (lo <= cur[i - 1] <= nxt[m - 1]):
                    return False
    return True


def region_mask(spec: ChainSpec, maps, pts: np.ndarray) -> np.ndarray:
    """Vectorized region_contains for an (N, total_dim) array of points."""
    groups = []
    for a, b in spec.group_slices():
        groups.append(pts[:, a:b])
    desc = spec.orientation == "selberg"
    mask = np.ones(len(pts), dtype=bool)
    for g in groups:
        for j in range(g.shape[1] - 1):
            if desc:
                mask &= g[:, j] >= g[:, j + 1]
            else:
                mask &= g[:, j] <= g[:, j + 1]
    for s, M in enumerate(maps):
        cur, nxt = groups[s], groups[s + 1]
        for i in range(1, spec.k[s] + 1):
            m = M(i)
            if desc:
                mask &= nxt[:, m - 1] <= cur[:, i - 1]
                if m > 1:
                    mask &= cur[:, i - 1] <= nxt[:, m - 2]
            else:
                mask &= cur[:, i - 1] <= nxt[:, m - 1]
                if m > 1:
                    mask &= nxt[:, m - 2] <= cur[:, i - 1]
    return mask


def in_domain(spec: ChainSpec, point) -> bool:
    """Membership in D (selberg) or D-bar (qintegral): group ordering plus
    the interleaving inequality linking consecutive groups."""
    groups = _split_groups(spec, point)
    desc = spec.orientation == "selberg"
    for g in groups:
        for a, b in zip(g, g[1:]):
            if (desc and a < b) or (not desc and a > b):
                return False
    for s in range(spec.n - 1):
        ks, ks1 = spec.k[s], spec.k[s + 1]
        for i in range(1, ks + 1):
            j = i - ks + ks1
            if desc and groups[s][i - 1] < groups[s + 1][j - 1]:
                return False
            if not desc and groups[s][i - 1] > groups[s + 1][j - 1]:
                return False
    return True


def _sine_ratio(num_arg: float, den_arg: float, gamma: float) -> float:
    """sin(pi num_arg gamma)/sin(pi den_arg gamma) with the gamma->0 limit."""
    if abs(gamma) < GAMMA_SWITCH:
        return num_arg / den_arg
    x = den_arg * gamma
    if abs(x - round(x)) < EPS_SIN * max(1.0, abs(x)):
        raise DegenerateGammaError(
            "sin(pi * %g * gamma) vanishes at gamma = %g" % (den_arg, gamma))
    return math.sin(math.pi * num_arg * gamma) / math.sin(math.pi * x)


def chain_weight(spec: ChainSpec, maps) -> float:
    """F_{M_1..M_{n-1}}^{k_1..k_n}(gamma): the product of sine ratios
    sin(pi(i + k_{s+1} - k_s - M_s(i) + 1)gamma) / sin(pi(i + k_{s+1} - k_s)gamma)."""
    if len(maps) != spec.n - 1:
        raise ValueError("need %d maps" % (spec.n - 1))
    gamma = spec.gamma
    out = 1.0
    for s, M in enumerate(maps):
        ks, ks1 = spec.k[s], spec.k[s + 1]
        for i in range(1, ks + 1):
            out *= _sine_ratio(i + ks1 - ks - M(i) + 1, i + ks1 - ks, gamma)
    return out


def r_factor(u: int, gamma: float) -> float:
    """R_{ij}^{(s)}(gamma) = sin(pi u gamma)/sin(pi (u+1) gamma) for
    u = i - j - k_s + k_{s+1}."""
    return _sine_ratio(u, u + 1, gamma)
