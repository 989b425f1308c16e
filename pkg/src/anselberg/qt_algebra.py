"""Exact arithmetic in Q(q,t) and the q-shifted-factorial building blocks.

``QtField`` wraps the rational-function field built on :mod:`ratfunc`; the
default field has generators q and t, and extra formal parameters (a, b,
...) can be adjoined when an identity is checked with symbolic parameters.
All values are reduced fractions of integer polynomials, so equality is
structural and arithmetic never rounds.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import Partition, arm_leg, conjugate
from .ratfunc import Frac, Poly, Ring, format_poly


class QtPoleError(ZeroDivisionError):
    """A q-Pochhammer or rational function was evaluated at a pole."""


class QtField:
    """The field Q(q, t, *extra) of rational functions."""

    _cache = {}

    def __new__(cls, extra=()):
        key = tuple(extra)
        inst = cls._cache.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst._init(key)
            cls._cache[key] = inst
        return inst

    def _init(self, extra):
        self.ring = Ring(("q", "t") + extra)
        self.extra = extra
        self.zero = Frac(self.ring.zero)
        self.one = Frac(self.ring.one)
        self.q = Frac(self.ring.gens[0])
        self.t = Frac(self.ring.gens[1])

    def gen(self, name) -> Frac:
        return Frac(self.ring.gen(name))

    def const(self, c) -> Frac:
        if isinstance(c, Fraction):
            return Frac(self.ring.const(c.numerator), self.ring.const(c.denominator))
        return Frac(self.ring.const(c))

    def qt_monomial(self, qexp: int, texp: int) -> Frac:
        """q^qexp * t^texp with integer (possibly negative) exponents."""
        num = {}
        den = {}
        mono_n = [0] * self.ring.nvars
        mono_d = [0] * self.ring.nvars
        for v, e in ((0, qexp), (1, texp)):
            if e >= 0:
                mono_n[v] = e
            else:
                mono_d[v] = -e
        num[tuple(mono_n)] = 1
        den[tuple(mono_d)] = 1
        return Frac(Poly(self.ring, num), Poly(self.ring, den), _reduced=True)

    def embed(self, x: Frac) -> Frac:
        """Map an element of a field with a subset of our generators."""
        src = x.num.ring
        if src is self.ring:
            return x
        pos = [self.ring.names.index(n) for n in src.names]

        def conv(p):
            out = {}
            for m, c in p.terms.items():
                mm = [0] * self.ring.nvars
                for i, e in enumerate(m):
                    mm[pos[i]] = e
                out[tuple(mm)] = c
            return Poly(self.ring, out)

        return Frac(conv(x.num), conv(x.den), _reduced=True)

    def __repr__(self):
        return "QtField%r" % (self.ring.names,)


class QtPoint:
    """A numeric evaluation point q in (0,1), t = q^gamma."""

    __slots__ = ("q", "t", "gamma", "extras")

    def __init__(self, q, gamma=None, t=None, **extras):
        if not 0 < q < 1:
            raise ValueError("q must lie in (0, 1)")
        self.q = float(q)
        if t is None:
            if gamma is None:
                raise ValueError("give either t or gamma")
            t = q ** gamma
        self.t = float(t)
        self.gamma = gamma
        self.extras = extras

    def values(self):
        d = {"q": self.q, "t": self.t}
        d.update(self.extras)
        return d


def eval_numeric(x: Frac, point: QtPoint):
    """Evaluate a QtRational at a numeric point; raises QtPoleError at a pole."""
    vals = point.values()
    den = x.den.subs_num(vals)
    if den == 0:
        raise QtPoleError("evaluation at a pole of %r" % (x,))
    return x.num.subs_num(vals) / den


def to_string(x: Frac) -> str:
    """Canonical string "num / den", monomials in descending graded-lex order."""
    return "%s / %s" % (format_poly(x.num), format_poly(x.den))


# ---------------------------------------------------------------------------
# q-shifted factorials
# ---------------------------------------------------------------------------

def qpoch_int(field: QtField, b: Frac, n: int) -> Frac:
    """(b;q)_n for integer n, extended to negative n by
    (b;q)_{-n} = 1/((b q^{-n};q)_n).  Raises QtPoleError when the negative
    case hits a vanishing factor (e.g. (q;q)_{-n}), whose reciprocal is the
    zero element by convention; see :func:`qpoch_int_reciprocal`.
    """
    q = field.q
    if n >= 0:
        out = field.one
        bq = b
        for _ in range(n):
            out = out * (field.one - bq)
            bq = bq * q
        return out
    den = qpoch_int(field, b * field.qt_monomial(n, 0), -n)
    if not den:
        raise QtPoleError("(b;q)_%d has a vanishing denominator factor" % n)
    return field.one / den


def qpoch_int_reciprocal(field: QtField, b: Frac, n: int) -> Frac:
    """1/(b;q)_n with the convention that the reciprocal of an infinite
    value is zero, so e.g. 1/(q;q)_{-N} = 0 for N > 0."""
    if n >= 0:
        den = qpoch_int(field, b, n)
        if not den:
            raise QtPoleError("1/(b;q)_%d division by zero" % n)
        return field.one / den
    return qpoch_int(field, b * field.qt_monomial(n, 0), -n)


def qpoch_ratio(field: QtField, b: Frac, d1: int, d2: int) -> Frac:
    """(b;q)_{d1} / (b;q)_{d2} = (b q^{d2};q)_{d1-d2} for any integers d1 >= d2.

    This telescoped form is a polynomial, so it stays finite even where the
    two factors separately hit the negative-index pole convention.
    """
    if d1 < d2:
        return field.one / qpoch_ratio(field, b, d2, d1)
    return qpoch_int(field, b * field.qt_monomial(d2, 0), d1 - d2)


def qpoch_partition(field: QtField, b: Frac, lam: Partition) -> Frac:
    """(b;q,t)_lambda = prod over cells (1 - b q^{a'(s)} t^{-l'(s)})."""
    out = field.one
    for i, p in enumerate(lam.parts):
        row = field.one
        for j in range(p):
            row = row * (field.one - b * field.qt_monomial(j, -i))
        out = out * row
    return out


def qpoch_partition_rowform(field: QtField, b: Frac, lam: Partition) -> Frac:
    """The equivalent row form prod_i (b t^{1-i};q)_{lambda_i}."""
    out = field.one
    for i, p in enumerate(lam.parts, start=1):
        out = out * qpoch_int(field, b * field.qt_monomial(0, 1 - i), p)
    return out


def c_polys(lam: Partition, n: int, field: QtField = None, check: bool = False):
    """The hook polynomials (c, c', b) of a partition.

    c and c' are the products over cells of (1 - q^{a} t^{l+1}) and
    (1 - q^{a+1} t^{l}); b = c/c'.  With ``check=True`` the alternative
    Pochhammer-quotient expressions are evaluated as well and asserted
    equal.  ``n`` only enters those alternative forms and must be at least
    the number of parts.
    """
    if field is None:
        field = QtField()
    if n < lam.length():
        raise ValueError("need n >= l(lambda)")
    c = field.one
    cp = field.one
    conj = conjugate(lam)
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            a = p - j
            l = conj.parts[j - 1] - i
            c = c * (field.one - field.qt_monomial(a, l + 1))
            cp = cp * (field.one - field.qt_monomial(a + 1, l))
    if check:
        c2, cp2 = c_polys_pochhammer_form(lam, n, field)
        if c2 != c or cp2 != cp:
            raise AssertionError("hook and Pochhammer forms disagree for %r" % (lam,))
    if not cp:
        raise QtPoleError("c' vanishes for %r" % (lam,))
    return c, cp, c / cp


def c_polys_pochhammer_form(lam: Partition, n: int, field: QtField = None):
    """(c, c') via the Pochhammer-quotient expressions with n variables."""
    if field is None:
        field = QtField()
    if n < lam.length():
        raise ValueError("need n >= l(lambda)")
    q = field.q
    tn = field.qt_monomial(0, n)
    c = qpoch_partition(field, tn, lam)
    cp = qpoch_partition(field, q * field.qt_monomial(0, n - 1), lam)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = lam[i] - lam[j]
            tj = field.qt_monomial(0, j - i)
            c = c * qpoch_int(field, tj, d) / qpoch_int(field, tj * field.t, d)
            cp = cp * qpoch_int(field, q * tj / field.t, d) / qpoch_int(field, q * tj, d)
    return c, cp
