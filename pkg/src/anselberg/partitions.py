"""Integer partitions and their diagram combinatorics.

Partitions are stored zero-stripped as tuples, so they are hashable value
types.  Conventions: rows and columns of the diagram are 1-indexed, and a
cell (i, j) belongs to lambda iff j <= lambda_i.
"""

from __future__ import annotations

from collections import Counter
from math import comb, factorial


class Partition:
    """A weakly decreasing tuple of positive integers (zeros stripped)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        k = len(parts)
        while k and parts[k - 1] == 0:
            k -= 1
        parts = parts[:k]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be nonnegative: %r" % (parts,))
        self.parts = parts

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        """1-indexed part; zero beyond the length."""
        if i < 1:
            raise IndexError("parts are 1-indexed")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition%r" % (self.parts,)

    def length(self) -> int:
        return len(self.parts)

    def weight(self) -> int:
        return sum(self.parts)

    def multiplicity(self, i: int) -> int:
        """m_i: the number of parts equal to i >= 1."""
        return self.parts.count(i)

    def cells(self):
        """All cells (i, j), 1-indexed, row by row."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other_i <= self_i for all i."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def to_json(self):
        return list(self.parts)

    @classmethod
    def from_json(cls, data):
        return cls(data)


EMPTY = Partition()


def conjugate(lam: Partition) -> Partition:
    """Reflect the diagram in the main diagonal."""
    if not lam.parts:
        return EMPTY
    cols = [0] * lam.parts[0]
    for p in lam.parts:
        for j in range(p):
            cols[j] += 1
    return Partition(cols)


def arm_leg(lam: Partition, i: int, j: int):
    """(a, a', l, l') for the cell (i, j): arm, arm-colength, leg, leg-colength."""
    if not (1 <= i <= len(lam.parts)) or not (1 <= j <= lam.parts[i - 1]):
        raise ValueError("cell (%d, %d) not in %r" % (i, j, lam))
    conj = conjugate(lam)
    a = lam.parts[i - 1] - j
    ap = j - 1
    l = conj.parts[j - 1] - i
    lp = i - 1
    return a, ap, l, lp


def n_stat(lam: Partition) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum((i - 1) * p for i, p in enumerate(lam.parts, start=1))


def n_stat_conjugate_form(lam: Partition) -> int:
    """The equivalent form sum_j binom(lambda'_j, 2); used as a cross-check."""
    return sum(comb(c, 2) for c in conjugate(lam).parts)


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """mu <= lambda in dominance order; requires equal weights."""
    if mu.weight() != lam.weight():
        raise ValueError("dominance order needs equal weights: %r vs %r" % (mu, lam))
    sm = sl = 0
    for i in range(1, max(len(mu.parts), len(lam.parts)) + 1):
        sm += mu[i]
        sl += lam[i]
        if sl < sm:
            return False
    return True


def complement(lam: Partition, m: int, width: int) -> Partition:
    """Complement inside the m x width box: result_i = width - lambda_{m+1-i}."""
    if len(lam.parts) > m or (lam.parts and lam.parts[0] > width):
        raise ValueError("%r does not fit in (%d^%d)" % (lam, width, m))
    return Partition(tuple(width - lam[m + 1 - i] for i in range(1, m + 1)))


def z_lambda(lam: Partition) -> int:
    """z_lambda = prod_i m_i! i^{m_i}, the centralizer order of the cycle type."""
    z = 1
    for i, m in Counter(lam.parts).items():
        z *= factorial(m) * i ** m
    return z


def partitions_of(n: int, max_length=None, max_part=None):
    """All partitions of n in lexicographically decreasing order."""
    if max_length is None:
        max_length = n
    if max_part is None:
        max_part = n

    def gen(rem, mx, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(rem, mx), 0, -1):
            for rest in gen(rem - p, p, slots - 1):
                yield (p,) + rest

    for parts in gen(n, max_part, max_length):
        yield Partition(parts)


def partitions_upto(weight: int, max_length=None, max_part=None):
    """All partitions with |lambda| <= weight, by weight then lex decreasing."""
    for w in range(weight + 1):
        yield from partitions_of(w, max_length, max_part)


def partitions_boxed(n: int, lower=(), max_length=None, max_part=None):
    """Partitions of n with per-position lower bounds lambda_{i+1} >= lower[i].

    ``lower`` must be weakly decreasing (it comes from the tail parts of
    another partition when enumerating interleaving-constrained tuples).
    """
    lower = tuple(int(x) for x in lower)
    while lower and lower[-1] == 0:
        lower = lower[:-1]
    if max_length is None:
        max_length = max(n, len(lower))
    if max_part is None:
        max_part = n
    if n < 0 or sum(lower) > n or len(lower) > max_length:
        return
    if lower and lower[0] > max_part:
        return

    def gen(rem, mx, pos):
        lo = lower[pos] if pos < len(lower) else 0
        if rem == 0 and lo == 0:
            yield ()
            return
        if pos >= max_length:
            return
        hi = min(rem, mx)
        floor = max(lo, 1)
        for p in range(hi, floor - 1, -1):
            for rest in gen(rem - p, p, pos + 1):
                yield (p,) + rest

    for parts in gen(n, max_part, 0):
        yield Partition(parts)
