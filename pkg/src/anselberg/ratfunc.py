"""Exact sparse multivariate polynomials over Z and their fraction field.

This is the arithmetic kernel for the whole package: everything symbolic
(q-Pochhammers, Macdonald coefficients, series expansions) is built from
``Poly`` (integer polynomials in named variables) and ``Frac`` (reduced
ratios of such polynomials).  Fractions keep the invariant

    gcd(num, den) = 1  and  leading coefficient of den > 0

where "leading" refers to graded lexicographic order, so equality is
structural equality.  Addition and multiplication use Henrici's scheme:
gcds are taken of the small cross parts only, which keeps the gcd work
proportional to the factors actually shared.

GCD itself is the heuristic (evaluate at a big integer, reconstruct by
balanced digits, verify by exact division) with a subresultant-PRS
fallback, so it is always correct and almost always fast.
"""

from __future__ import annotations

import math
from fractions import Fraction


class Ring:
    """Polynomial ring Z[names]; also the factory for constants and gens."""

    def __init__(self, names):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self._zero_mono = (0,) * self.nvars
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._zero_mono: 1})
        self.gens = tuple(
            Poly(self, {tuple(int(i == j) for j in range(self.nvars)): 1})
            for i in range(self.nvars)
        )

    def const(self, c) -> "Poly":
        c = int(c)
        if c == 0:
            return self.zero
        return Poly(self, {self._zero_mono: c})

    def gen(self, name) -> "Poly":
        return self.gens[self.names.index(name)]

    def __repr__(self):
        return "Ring(%s)" % ",".join(self.names)


def _grlex(mono):
    return (sum(mono), mono)


class Poly:
    """Sparse polynomial: dict monomial-exponent-tuple -> nonzero int."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basics ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {self.ring._zero_mono: other}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_one(self):
        return self.terms == {self.ring._zero_mono: 1}

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_mono in self.terms)

    def const_value(self):
        return self.terms.get(self.ring._zero_mono, 0)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def degree_in(self, v):
        return max((m[v] for m in self.terms), default=0)

    def leading(self):
        m = max(self.terms, key=_grlex)
        return m, self.terms[m]

    def max_norm(self):
        return max(abs(c) for c in self.terms.values()) if self.terms else 0

    def content(self):
        return math.gcd(*self.terms.values()) if self.terms else 0

    def primitive(self):
        """Return (c, p) with self = c*p, p primitive with positive leading coeff."""
        if not self.terms:
            return 0, self
        c = self.content()
        if self.leading()[1] < 0:
            c = -c
        if c == 1:
            return 1, self
        return c, Poly(self.ring, {m: cf // c for m, cf in self.terms.items()})

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            nc = t.get(m, 0) + c
            if nc:
                t[m] = nc
            else:
                del t[m]
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            nc = t.get(m, 0) - c
            if nc:
                t[m] = nc
            else:
                del t[m]
        return Poly(self.ring, t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero
            if other == 1:
                return self
            return Poly(self.ring, {m: c * other for m, c in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        if not a:
            return self.ring.zero
        out = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(map(sum, zip(ma, mb)))
                nc = get(m, 0) + ca * cb
                if nc:
                    out[m] = nc
                else:
                    del out[m]
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative exponent on Poly; use Frac")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, divisor):
        """Quotient self/divisor, or None if division is not exact."""
        if not divisor.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.terms:
            return self.ring.zero
        if divisor.is_const():
            d = divisor.const_value()
            q = {}
            for m, c in self.terms.items():
                qc, r = divmod(c, d)
                if r:
                    return None
                q[m] = qc
            return Poly(self.ring, q)
        rem = dict(self.terms)
        dm, dc = divisor.leading()
        dterms = list(divisor.terms.items())
        q = {}
        while rem:
            m = max(rem, key=_grlex)
            c = rem[m]
            qm = tuple(x - y for x, y in zip(m, dm))
            if any(e < 0 for e in qm):
                return None
            qc, r = divmod(c, dc)
            if r:
                return None
            q[qm] = qc
            for mm, cc in dterms:
                key = tuple(map(sum, zip(qm, mm)))
                nc = rem.get(key, 0) - qc * cc
                if nc:
                    rem[key] = nc
                else:
                    del rem[key]
        return Poly(self.ring, q)

    def eval_var_int(self, v, value):
        """Substitute the integer ``value`` for variable ``v``."""
        # group by degree in v, then Horner
        byd = {}
        for m, c in self.terms.items():
            key = m[:v] + (0,) + m[v + 1:]
            byd.setdefault(m[v], {})[key] = c
        if not byd:
            return self.ring.zero
        acc = {}
        for d in range(max(byd), -1, -1):
            if acc:
                acc = {m: c * value for m, c in acc.items()}
            for m, c in byd.get(d, {}).items():
                nc = acc.get(m, 0) + c
                if nc:
                    acc[m] = nc
                else:
                    del acc[m]
        return Poly(self.ring, acc)

    def subs_num(self, values):
        """Evaluate at a point; ``values`` maps variable name -> number.

        Works for float, Fraction, mpmath and similar coefficient types.
        """
        vals = [values[n] for n in self.ring.names]
        total = 0
        powcache = [{} for _ in vals]
        for m, c in self.terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    p = powcache[i].get(e)
                    if p is None:
                        p = vals[i] ** e
                        powcache[i][e] = p
                    term = term * p
            total = total + term
        return total

    def __repr__(self):
        return format_poly(self)


def format_poly(p: Poly) -> str:
    """Render in canonical monomial order (graded lex, descending)."""
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=_grlex, reverse=True):
        c = p.terms[m]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(p.ring.names[i])
            elif e > 1:
                factors.append("%s^%d" % (p.ring.names[i], e))
        body = "*".join(factors)
        if not body:
            s = str(c)
        elif c == 1:
            s = body
        elif c == -1:
            s = "-" + body
        else:
            s = "%d*%s" % (c, body)
        if parts and not s.startswith("-"):
            parts.append("+ " + s)
        elif parts:
            parts.append("- " + s[1:])
        else:
            parts.append(s)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# gcd
# ---------------------------------------------------------------------------

def poly_gcd(f: Poly, g: Poly) -> Poly:
    """gcd in Z[vars], primitive with positive leading coefficient, times
    the gcd of the integer contents."""
    ring = f.ring
    if not f.terms:
        return g.primitive()[1] * abs(g.content()) if g.terms else ring.zero
    if not g.terms:
        return f.primitive()[1] * abs(f.content())
    cf, pf = f.primitive()
    cg, pg = g.primitive()
    cgcd = math.gcd(cf, cg)
    if pf.terms == pg.terms:
        return pf * cgcd
    if pf.is_one() or pg.is_one():
        return ring.const(cgcd)
    # pull out the common monomial factor first
    mono, pf, pg = _extract_monomial(pf, pg)
    if len(pf.terms) == 1 or len(pg.terms) == 1:
        return Poly(ring, {mono: cgcd})
    active = [v for v in range(ring.nvars) if pf.degree_in(v) and pg.degree_in(v)]
    if not active:
        h = ring.one
    else:
        h = _heugcd(pf, pg, tries=6)
        if h is None:
            h = _prs_gcd(pf, pg, active[0])
        h = h.primitive()[1]
    if any(mono):
        h = Poly(ring, {tuple(map(sum, zip(m, mono))): c for m, c in h.terms.items()})
    return h * cgcd


def _extract_monomial(f: Poly, g: Poly):
    """Split off the largest monomial dividing both f and g."""
    mf = None
    for m in f.terms:
        mf = m if mf is None else tuple(map(min, zip(mf, m)))
        if not any(mf):
            break
    mg = None
    for m in g.terms:
        mg = m if mg is None else tuple(map(min, zip(mg, m)))
        if not any(mg):
            break
    common = tuple(map(min, zip(mf, mg)))
    ring = f.ring
    if any(mf):
        f = Poly(ring, {tuple(a - b for a, b in zip(m, mf)): c for m, c in f.terms.items()})
    if any(mg):
        g = Poly(ring, {tuple(a - b for a, b in zip(m, mg)): c for m, c in g.terms.items()})
    return common, f, g


def _isqrt(n):
    return math.isqrt(n)


def _heugcd(f: Poly, g: Poly, tries=6):
    """Heuristic gcd with verified result (gcd only, no cofactors).

    Follows the classical GCDHEU scheme: evaluate the first active variable
    at a large integer, take the gcd of the images recursively, reconstruct
    by balanced digits, and verify by exact division.  When the direct
    reconstruction fails, the two cofactor reconstructions are tried.
    Returns None when every attempt fails within ``tries`` rounds.
    """
    res = _heugcd_cof(f, g, tries)
    return res[0] if res is not None else None


def _heugcd_cof(f: Poly, g: Poly, tries):
    ring = f.ring
    for v in range(ring.nvars):
        if f.degree_in(v) and g.degree_in(v):
            break
    else:
        return None
    # extract the integer content gcd; at inner recursion levels it carries
    # the evaluated images of outer-variable factors
    ground = math.gcd(f.content(), g.content())
    if ground > 1:
        f = Poly(ring, {m: c // ground for m, c in f.terms.items()})
        g = Poly(ring, {m: c // ground for m, c in g.terms.items()})
    f_norm = f.max_norm()
    g_norm = g.max_norm()
    B = 2 * min(f_norm, g_norm) + 29
    xi = max(min(B, 99 * _isqrt(B)),
             2 * min(f_norm // abs(f.leading()[1]),
                     g_norm // abs(g.leading()[1])) + 4)
    for _ in range(tries):
        fe = f.eval_var_int(v, xi)
        ge = g.eval_var_int(v, xi)
        if fe.terms and ge.terms:
            if fe.is_const() and ge.is_const():
                a, b = fe.const_value(), ge.const_value()
                d = math.gcd(a, b)
                sub = (ring.const(d), ring.const(a // d), ring.const(b // d))
            else:
                sub = _heugcd_cof(fe, ge, tries)
            if sub is not None:
                h_img, cff_img, cfg_img = sub
                # route 1: interpolate the gcd itself
                h = _lift_digits(h_img, v, xi).primitive()[1]
                if h.terms:
                    cff = f.exact_div(h)
                    if cff is not None:
                        cfg = g.exact_div(h)
                        if cfg is not None:
                            return h * ground, cff, cfg
                # route 2: interpolate the f-cofactor; h keeps its content
                cff = _lift_digits(cff_img, v, xi)
                if cff.terms:
                    h = f.exact_div(cff)
                    if h is not None and h.terms:
                        cfg = g.exact_div(h)
                        if cfg is not None:
                            return h * ground, cff, cfg
                # route 3: interpolate the g-cofactor
                cfg = _lift_digits(cfg_img, v, xi)
                if cfg.terms:
                    h = g.exact_div(cfg)
                    if h is not None and h.terms:
                        cff = f.exact_div(h)
                        if cff is not None:
                            return h * ground, cff, cfg
        xi = 73794 * xi * _isqrt(_isqrt(xi)) // 27011
    return None


def _lift_digits(img: Poly, v, xi):
    """Reconstruct a polynomial in variable v from its value at xi by
    balanced base-xi digits."""
    ring = img.ring
    acc = {}
    power = 0
    while img.terms:
        newimg = {}
        for m, c in img.terms.items():
            d = c % xi
            if 2 * d > xi:
                d -= xi
            if d:
                acc[m[:v] + (power,) + m[v + 1:]] = d
            rest = (c - d) // xi
            if rest:
                newimg[m] = rest
        img = Poly(ring, newimg)
        power += 1
    return Poly(ring, acc)


def _prs_gcd(f: Poly, g: Poly, v: int) -> Poly:
    """Primitive PRS gcd in the main variable v, contents handled recursively."""
    ring = f.ring

    def to_univ(p):
        byd = {}
        for m, c in p.terms.items():
            byd.setdefault(m[v], {})[m[:v] + (0,) + m[v + 1:]] = c
        deg = max(byd)
        return [Poly(ring, byd.get(i, {})) for i in range(deg + 1)]

    def content_of(coeffs):
        c = ring.zero
        for p in coeffs:
            if p.terms:
                c = poly_gcd(c, p)
                if c.is_one():
                    break
        return c

    def div_all(coeffs, c):
        return [p.exact_div(c) if p.terms else p for p in coeffs]

    def trim(coeffs):
        while coeffs and not coeffs[-1].terms:
            coeffs.pop()
        return coeffs

    def pseudo_rem(fc, gc):
        fc = list(fc)
        dg = len(gc) - 1
        lg = gc[-1]
        while len(fc) - 1 >= dg and fc:
            k = len(fc) - 1 - dg
            lead = fc[-1]
            fc = [p * lg for p in fc[:-1]]
            for i in range(dg):
                fc[i + k] = fc[i + k] - lead * gc[i]
            trim(fc)
        return fc

    F = to_univ(f)
    G = to_univ(g)
    if len(F) < len(G):
        F, G = G, F
    contF = content_of(F)
    contG = content_of(G)
    F = div_all(F, contF)
    G = div_all(G, contG)
    cont = poly_gcd(contF, contG)
    while True:
        R = trim(pseudo_rem(F, G))
        if not R:
            h = G
            break
        if len(R) == 1:
            h = [ring.one]
            break
        R = div_all(R, content_of(R))
        F, G = G, R
    out = ring.zero
    for e, p in enumerate(h):
        out = out + Poly(ring, {m[:v] + (e,) + m[v + 1:]: c for m, c in p.terms.items()})
    if not cont.is_one():
        out = out * cont
    return out.primitive()[1]


# ---------------------------------------------------------------------------
# fraction field
# ---------------------------------------------------------------------------

class Frac:
    """Reduced fraction of integer polynomials, i.e. an element of Q(vars)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = num.ring.one
        if not den.terms:
            raise ZeroDivisionError("zero denominator in Frac")
        if not _reduced:
            if not num.terms:
                den = num.ring.one
            elif not den.is_one():
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            if den.leading()[1] < 0:
                num = -num
                den = -den
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def __bool__(self):
        return bool(self.num.terms)

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __eq__(self, other):
        if isinstance(other, Frac):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Poly)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    # -- Henrici-style arithmetic: outputs stay reduced -----------------

    def _coerce(self, other):
        if isinstance(other, Frac):
            return other
        if isinstance(other, int):
            return Frac(self.ring.const(other), None, _reduced=True)
        if isinstance(other, Poly):
            return Frac(other)
        if isinstance(other, Fraction):
            return Frac(self.ring.const(other.numerator),
                        self.ring.const(other.denominator))
        return None

    def __add__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self
            # gcd(num + den*k, den) = gcd(num, den) = 1
            return Frac(self.num + self.den * other, self.den, _reduced=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            t = a + c
            if not t.terms:
                return Frac(b.ring.zero, None, _reduced=True)
            g = poly_gcd(t, b)
            if g.is_one():
                return Frac(t, b, _reduced=True)
            return Frac(t.exact_div(g), b.exact_div(g), _reduced=True)
        if b.is_one():
            return Frac(a * d + c, d, _reduced=True)
        if d.is_one():
            return Frac(a + c * b, b, _reduced=True)
        g1 = poly_gcd(b, d)
        if g1.is_one():
            return Frac(a * d + c * b, b * d, _reduced=True)
        bp = b.exact_div(g1)
        dp = d.exact_div(g1)
        t = a * dp + c * bp
        if not t.terms:
            return Frac(b.ring.zero, None, _reduced=True)
        g2 = poly_gcd(t, g1)
        if g2.is_one():
            return Frac(t, bp * d, _reduced=True)
        return Frac(t.exact_div(g2), bp * d.exact_div(g2), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self
            return Frac(self.num - self.den * other, self.den, _reduced=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Frac(self.ring.zero, None, _reduced=True)
            if other == 1:
                return self
            cd = self.den.content()
            g = math.gcd(other, cd)
            if g == 1:
                return Frac(self.num * other, self.den, _reduced=True)
            return Frac(self.num * (other // g),
                        self.den.exact_div(self.ring.const(g)), _reduced=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a.terms or not c.terms:
            return Frac(b.ring.zero, None, _reduced=True)
        g1 = poly_gcd(a, d) if not d.is_one() else b.ring.one
        g2 = poly_gcd(c, b) if not b.is_one() else b.ring.one
        if not g1.is_one():
            a = a.exact_div(g1)
            d = d.exact_div(g1)
        if not g2.is_one():
            c = c.exact_div(g2)
            b = b.exact_div(g2)
        return Frac(a * c, b * d, _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("Frac division by zero")
            return self * Frac(self.ring.one, self.ring.const(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num.terms:
            raise ZeroDivisionError("Frac division by zero")
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        rec = self.reciprocal()
        if other == 1:
            return rec
        return rec * other

    def reciprocal(self):
        if not self.num.terms:
            raise ZeroDivisionError("reciprocal of zero")
        num, den = self.den, self.num
        if den.leading()[1] < 0:
            num, den = -num, -den
        return Frac(num, den, _reduced=True)

    def __pow__(self, n):
        n = int(n)
        if n == 0:
            return Frac(self.ring.one, None, _reduced=True)
        if n < 0:
            return self.reciprocal() ** (-n)
        return Frac(self.num ** n, self.den ** n, _reduced=True)

    def subs_num(self, values):
        """Numeric evaluation; raises ZeroDivisionError at a pole."""
        den = self.den.subs_num(values)
        if den == 0:
            raise ZeroDivisionError("Frac evaluated at a pole")
        return self.num.subs_num(values) / den

    def __repr__(self):
        if self.den.is_one():
            return format_poly(self.num)
        return "(%s) / (%s)" % (format_poly(self.num), format_poly(self.den))
