"""Exact arithmetic over Z[q,t] and the rational function field Q(q,t).

Polynomials are sparse maps from exponent pairs (deg_q, deg_t) to Python
ints.  Fractions keep a reduced numerator/denominator pair in a canonical
form (gcd removed, denominator's grlex-least term positive), so equal
values always have identical storage and compare by structure.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class PoleError(ZeroDivisionError):
    """Evaluation point lies on the zero set of a denominator."""


def _grlex(e):
    return (e[0] + e[1], e[0], e[1])


# ---------------------------------------------------------------------------
# univariate helpers over Z, coefficients as dict {exp: int}

def _u_deg(f):
    return max(f) if f else -1


def _u_add(f, g):
    h = dict(f)
    for e, c in g.items():
        s = h.get(e, 0) + c
        if s:
            h[e] = s
        else:
            h.pop(e, None)
    return h


def _u_neg(f):
    return {e: -c for e, c in f.items()}


def _u_mul(f, g):
    h = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            s = h.get(e, 0) + c1 * c2
            if s:
                h[e] = s
            else:
                h.pop(e, None)
    return h


def _u_scale(f, c, shift=0):
    if c == 0:
        return {}
    return {e + shift: a * c for e, a in f.items()}


def _u_content(f):
    c = 0
    for a in f.values():
        c = _int_gcd(c, a)
        if c == 1:
            break
    return c


def _u_divexact_int(f, c):
    return {e: a // c for e, a in f.items()}


def _u_prem(f, g):
    # pseudo-remainder of f by g (deg g >= 0); repeated lc multiplication
    d = _u_deg(g)
    lcg = g[d]
    r = dict(f)
    while r and _u_deg(r) >= d:
        dr = _u_deg(r)
        lcr = r[dr]
        r = _u_add(_u_scale(r, lcg), _u_scale(g, -lcr, dr - d))
    return r


def _u_gcd(f, g):
    """Gcd in Z[t] via primitive PRS, returned with positive leading coeff."""
    if not f:
        g = dict(g)
        if g and g[_u_deg(g)] < 0:
            g = _u_neg(g)
        return g
    if not g:
        return _u_gcd(g, f)
    cf, cg = _u_content(f), _u_content(g)
    c = _int_gcd(cf, cg)
    f = _u_divexact_int(f, cf)
    g = _u_divexact_int(g, cg)
    if _u_deg(f) < _u_deg(g):
        f, g = g, f
    while g:
        r = _u_prem(f, g)
        cr = _u_content(r)
        f, g = g, (_u_divexact_int(r, cr) if cr else {})
    if f[_u_deg(f)] < 0:
        f = _u_neg(f)
    return _u_scale(f, c) if c != 1 else f


def _u_divexact(f, g):
    # exact division in Z[t]; assumes g | f
    if not f:
        return {}
    q = {}
    r = dict(f)
    dg = _u_deg(g)
    lcg = g[dg]
    while r:
        dr = _u_deg(r)
        lcr = r[dr]
        if dr < dg or lcr % lcg:
            raise ArithmeticError("inexact univariate division")
        qc = lcr // lcg
        q[dr - dg] = qc
        r = _u_add(r, _u_scale(g, -qc, dr - dg))
    return q


# ---------------------------------------------------------------------------
# bivariate helpers: dict {deg_q: {deg_t: int}}

def _b_from_pairs(d):
    out = {}
    for (a, b), c in d.items():
        out.setdefault(a, {})[b] = c
    return out


def _b_to_pairs(F):
    return {(a, b): c for a, coef in F.items() for b, c in coef.items()}


def _b_degq(F):
    return max(F) if F else -1


def _b_add(F, G):
    H = {a: dict(c) for a, c in F.items()}
    for a, coef in G.items():
        s = _u_add(H.get(a, {}), coef)
        if s:
            H[a] = s
        else:
            H.pop(a, None)
    return H


def _b_scale(F, u, shift=0):
    # multiply by u(t) * q^shift
    H = {}
    for a, coef in F.items():
        s = _u_mul(coef, u)
        if s:
            H[a + shift] = s
    return H


def _b_content(F):
    c = {}
    for coef in F.values():
        c = _u_gcd(c, coef)
        if _u_deg(c) == 0 and c.get(0) == 1:
            break
    return c


def _b_pp(F, cont=None):
    if not F:
        return {}
    cont = cont or _b_content(F)
    if _u_deg(cont) == 0 and cont.get(0) == 1:
        return F
    return {a: _u_divexact(coef, cont) for a, coef in F.items()}


def _b_prem(F, G):
    d = _b_degq(G)
    if d == 0:
        return {}
    lcg = G[d]
    R = {a: dict(c) for a, c in F.items()}
    while R and _b_degq(R) >= d:
        dr = _b_degq(R)
        lcr = R[dr]
        R = _b_add(_b_scale(R, lcg), _b_scale(G, _u_neg(lcr), dr - d))
    return R


def _b_gcd(F, G):
    if not F:
        return G
    if not G:
        return F
    contF, contG = _b_content(F), _b_content(G)
    c = _u_gcd(contF, contG)
    f, g = _b_pp(F, contF), _b_pp(G, contG)
    if _b_degq(f) < _b_degq(g):
        f, g = g, f
    while g:
        r = _b_prem(f, g)
        f, g = g, _b_pp(r)
    if not (_u_deg(c) == 0 and c.get(0) == 1):
        f = {a: _u_mul(coef, c) for a, coef in f.items()}
    return f


# ---------------------------------------------------------------------------
# heuristic gcd (evaluate at a large integer, reconstruct balanced digits,
# verify by exact division); falls back to the primitive PRS above

def _balanced_digits(v, xi):
    digits = {}
    b = 0
    while v:
        d = v % xi
        if d > xi // 2:
            d -= xi
        if d:
            digits[b] = d
        v = (v - d) // xi
        b += 1
    return digits


def _pairs_eval_t(d, xi):
    # substitute t = xi in dict {(a,b): c}, giving {a: int}
    out = {}
    for (a, b), c in d.items():
        out[a] = out.get(a, 0) + c * xi**b
    return {a: v for a, v in out.items() if v}


def _upoly_eval(f, xi):
    return sum(c * xi**e for e, c in f.items())


def _u_try_div(f, g):
    # quotient f/g in Z[q] or None
    if not f:
        return {}
    q = {}
    r = dict(f)
    dg = _u_deg(g)
    lcg = g[dg]
    while r:
        dr = _u_deg(r)
        lcr = r[dr]
        if dr < dg or lcr % lcg:
            return None
        qc = lcr // lcg
        q[dr - dg] = qc
        r = _u_add(r, _u_scale(g, -qc, dr - dg))
    return q


def _u_heu_gcd(f, g):
    # heuristic gcd in Z[q]; splits off integer contents first so the
    # digit reconstruction below works on primitive parts
    cf, cg = _u_content(f), _u_content(g)
    ci = _int_gcd(cf, cg)
    if cf > 1:
        f = _u_divexact_int(f, cf)
    if cg > 1:
        g = _u_divexact_int(g, cg)
    norm = max(max(abs(c) for c in f.values()), max(abs(c) for c in g.values()))
    xi = 2 * norm + 29
    for _ in range(6):
        h0 = _int_gcd(_upoly_eval(f, xi), _upoly_eval(g, xi))
        h = _balanced_digits(h0, xi)
        cont = _u_content(h)
        if cont > 1:
            h = _u_divexact_int(h, cont)
        if h and _u_try_div(f, h) is not None and _u_try_div(g, h) is not None:
            return _u_scale(h, ci) if ci != 1 else h
        xi = xi * 73794 // 27011 | 1
    return None


def _b_try_div(F, G):
    # quotient F/G in recursive form (division in (Z[t])[q]), or None
    if not F:
        return {}
    dG = max(G)
    LG = G[dG]
    R = {a: dict(c) for a, c in F.items()}
    Q = {}
    while R:
        dR = max(R)
        if dR < dG:
            return None
        qc = _u_try_div(R[dR], LG)
        if qc is None:
            return None
        Q[dR - dG] = qc
        for a, coef in G.items():
            k = a + dR - dG
            s = _u_add(R.get(k, {}), _u_mul(coef, _u_neg(qc)))
            if s:
                R[k] = s
            else:
                R.pop(k, None)
    return Q


def _pairs_try_div(f, g):
    # quotient f/g in Z[q,t] in pair form, or None
    Q = _b_try_div(_b_from_pairs(f), _b_from_pairs(g))
    return None if Q is None else _b_to_pairs(Q)


def _pairs_heu_gcd(f, g):
    # heuristic gcd in Z[q,t] on pair dicts; inputs integer-content-free
    norm = max(max(abs(c) for c in f.values()), max(abs(c) for c in g.values()))
    tdeg = max(max(b for _, b in f), max(b for _, b in g))
    xi = 2 * norm + 29
    for _ in range(6):
        fq = _pairs_eval_t(f, xi)
        gq = _pairs_eval_t(g, xi)
        if fq and gq:
            hq = _u_heu_gcd(fq, gq)
            if hq is not None:
                h = {}
                for a, v in hq.items():
                    for b, d in _balanced_digits(v, xi).items():
                        h[(a, b)] = d
                if h and max(b for _, b in h) <= tdeg:
                    cont = 0
                    for c in h.values():
                        cont = _int_gcd(cont, c)
                    if cont > 1:
                        h = {e: c // cont for e, c in h.items()}
                    if _pairs_try_div(f, h) is not None and _pairs_try_div(g, h) is not None:
                        return h
        xi = xi * 73794 // 27011 | 1
    return None


# ---------------------------------------------------------------------------


class PolyQT:
    """Sparse integer polynomial in q and t; canonical (no zero terms)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if c:
                    e = (int(e[0]), int(e[1]))
                    s = d.get(e, 0) + c
                    if s:
                        d[e] = s
                    else:
                        del d[e]
        self._c = d
        self._hash = None

    @staticmethod
    def _make(d):
        p = PolyQT.__new__(PolyQT)
        p._c = d
        p._hash = None
        return p

    @classmethod
    def from_int(cls, n):
        return cls._make({(0, 0): n} if n else {})

    @classmethod
    def zero(cls):
        return _P_ZERO

    @classmethod
    def one(cls):
        return _P_ONE

    @classmethod
    def gen_q(cls):
        return _P_Q

    @classmethod
    def gen_t(cls):
        return _P_T

    @classmethod
    def monomial(cls, c, a, b):
        return cls._make({(a, b): c} if c else {})

    @classmethod
    def one_minus_qt(cls, a, b):
        """1 - q^a t^b  (the ubiquitous bracket factor)."""
        if a == 0 and b == 0:
            return _P_ZERO
        return cls._make({(0, 0): 1, (a, b): -1})

    def items(self):
        return self._c.items()

    @property
    def is_zero(self):
        return not self._c

    @property
    def is_one(self):
        return self._c == {(0, 0): 1}

    def total_degree(self):
        return max((a + b for a, b in self._c), default=-1)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({(0, 0): other} if other else {})
        if not isinstance(other, PolyQT):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return PolyQT._make({e: -c for e, c in self._c.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = PolyQT.from_int(other)
        if not isinstance(other, PolyQT):
            return NotImplemented
        d = dict(self._c)
        for e, c in other._c.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                del d[e]
        return PolyQT._make(d)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = PolyQT.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return PolyQT.from_int(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _P_ZERO
            if other == 1:
                return self
            return PolyQT._make({e: c * other for e, c in self._c.items()})
        if not isinstance(other, PolyQT):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return _P_ZERO
        if len(a) > len(b):
            a, b = b, a
        d = {}
        for (a1, b1), c1 in a.items():
            for (a2, b2), c2 in b.items():
                e = (a1 + a2, b1 + b2)
                s = d.get(e, 0) + c1 * c2
                if s:
                    d[e] = s
                else:
                    del d[e]
        return PolyQT._make(d)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("PolyQT power must be non-negative")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, a, b):
        """Multiply by the monomial q^a t^b."""
        return PolyQT._make({(e0 + a, e1 + b): c for (e0, e1), c in self._c.items()})

    def least_term(self):
        """Grlex-least (exponent, coeff) pair; None for the zero polynomial."""
        if not self._c:
            return None
        e = min(self._c, key=_grlex)
        return e, self._c[e]

    def eval(self, q0, t0) -> Fraction:
        q0, t0 = Fraction(q0), Fraction(t0)
        total = Fraction(0)
        for (a, b), c in self._c.items():
            total += c * q0**a * t0**b
        return total

    def subs_q_eq_t(self):
        """Substitute q -> t, folding exponents."""
        d = {}
        for (a, b), c in self._c.items():
            e = (0, a + b)
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                del d[e]
        return PolyQT._make(d)

    def gcd(self, other):
        if self._c == other._c:
            g = self
            lt = g.least_term()
            return -g if lt and lt[1] < 0 else g
        return _gcd_cached(self, other)

    def divexact(self, other):
        """Exact division; raises ArithmeticError if not divisible."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return _P_ZERO
        if other.is_one:
            return self
        if len(other._c) == 1:
            (da, db), dc = next(iter(other._c.items()))
            out = {}
            for (a, b), c in self._c.items():
                if a < da or b < db or c % dc:
                    raise ArithmeticError("inexact polynomial division")
                out[(a - da, b - db)] = c // dc
            return PolyQT._make(out)
        Q = _b_try_div(_b_from_pairs(self._c), _b_from_pairs(other._c))
        if Q is None:
            raise ArithmeticError("inexact polynomial division")
        return PolyQT._make(_b_to_pairs(Q))

    def __str__(self):
        if not self._c:
            return "0"
        chunks = []
        for e in sorted(self._c, key=_grlex):
            c = self._c[e]
            mono = []
            if e[0]:
                mono.append("q" if e[0] == 1 else f"q^{e[0]}")
            if e[1]:
                mono.append("t" if e[1] == 1 else f"t^{e[1]}")
            mag = abs(c)
            if mag != 1 or not mono:
                mono.insert(0, str(mag))
            term = "*".join(mono)
            if not chunks:
                chunks.append(term if c > 0 else "-" + term)
            else:
                chunks.append(("+" if c > 0 else "-") + term)
        return "".join(chunks)

    __repr__ = __str__


_P_ZERO = PolyQT._make({})
_P_ONE = PolyQT._make({(0, 0): 1})
_P_Q = PolyQT._make({(1, 0): 1})
_P_T = PolyQT._make({(0, 1): 1})

_GCD_CACHE: dict = {}
_GCD_CACHE_MAX = 200_000


def _gcd_cached(p1: PolyQT, p2: PolyQT) -> PolyQT:
    if p1.is_zero:
        g, lt = p2, p2.least_term()
        return -g if lt and lt[1] < 0 else g
    if p2.is_zero:
        g, lt = p1, p1.least_term()
        return -g if lt and lt[1] < 0 else g
    key = (p1, p2) if hash(p1) <= hash(p2) else (p2, p1)
    hit = _GCD_CACHE.get(key)
    if hit is not None:
        return hit
    g = _gcd_compute(p1._c, p2._c)
    if len(_GCD_CACHE) >= _GCD_CACHE_MAX:
        _GCD_CACHE.clear()
    _GCD_CACHE[key] = g
    return g


def _gcd_compute(f: dict, g: dict) -> PolyQT:
    # common monomial part
    fa = min(a for a, _ in f)
    fb = min(b for _, b in f)
    ga = min(a for a, _ in g)
    gb = min(b for _, b in g)
    ma, mb = min(fa, ga), min(fb, gb)
    if fa or fb:
        f = {(a - fa, b - fb): c for (a, b), c in f.items()}
    if ga or gb:
        g = {(a - ga, b - gb): c for (a, b), c in g.items()}
    # integer contents
    cf = 0
    for c in f.values():
        cf = _int_gcd(cf, c)
    cg = 0
    for c in g.values():
        cg = _int_gcd(cg, c)
    ci = _int_gcd(cf, cg)
    if cf > 1:
        f = {e: c // cf for e, c in f.items()}
    if cg > 1:
        g = {e: c // cg for e, c in g.items()}
    if len(f) == 1 or len(g) == 1:
        # a stripped monomial is a unit times a pure power already removed
        core = {}
    elif f == g:
        core = f
    else:
        core = _pairs_heu_gcd(f, g)
        if core is None:
            core = _b_to_pairs(_b_gcd(_b_from_pairs(f), _b_from_pairs(g)))
    if not core:
        core = {(0, 0): 1}
    result = {(a + ma, b + mb): c * ci for (a, b), c in core.items()}
    p = PolyQT._make(result)
    lt = p.least_term()
    if lt[1] < 0:
        p = -p
    return p


class RatQT:
    """Reduced fraction of PolyQT values; canonical and immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = PolyQT.from_int(num)
        if den is None:
            den = _P_ONE
        elif isinstance(den, int):
            den = PolyQT.from_int(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in RatQT")
        if num.is_zero:
            self.num, self.den = _P_ZERO, _P_ONE
            self._hash = None
            return
        g = num.gcd(den)
        if not g.is_one:
            num = num.divexact(g)
            den = den.divexact(g)
        lt = den.least_term()
        if lt[1] < 0:
            num, den = -num, -den
        self.num, self.den = num, den
        self._hash = None

    @staticmethod
    def _raw(num, den):
        # trusted constructor: inputs already reduced; fixes only den sign
        if num.is_zero:
            return RAT_ZERO
        r = RatQT.__new__(RatQT)
        lt = den.least_term()
        if lt[1] < 0:
            num, den = -num, -den
        r.num, r.den = num, den
        r._hash = None
        return r

    @classmethod
    def from_int(cls, n):
        return cls._raw(PolyQT.from_int(n), _P_ONE)

    @classmethod
    def from_fraction(cls, f: Fraction):
        return cls._raw(PolyQT.from_int(f.numerator), PolyQT.from_int(f.denominator))

    @classmethod
    def q(cls):
        return RAT_Q

    @classmethod
    def t(cls):
        return RAT_T

    @classmethod
    def monomial(cls, c, a, b):
        return cls._raw(PolyQT.monomial(c, a, b), _P_ONE)

    @classmethod
    def one_minus_qt(cls, a, b):
        return cls._raw(PolyQT.one_minus_qt(a, b), _P_ONE)

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.is_one and self.den.is_one

    @property
    def is_polynomial(self):
        return self.den.is_one

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        if isinstance(other, int):
            return self.den.is_one and self.num == other
        if not isinstance(other, RatQT):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RatQT._raw(-self.num, self.den)

    def __add__(self, other):
        if isinstance(other, int):
            other = RatQT.from_int(other)
        if not isinstance(other, RatQT):
            return NotImplemented
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        if self.den.is_one and other.den.is_one:
            return RatQT._raw(self.num + other.num, _P_ONE)
        if self.den == other.den:
            num = self.num + other.num
            if num.is_zero:
                return RAT_ZERO
            g = num.gcd(self.den)
            if g.is_one:
                return RatQT._raw(num, self.den)
            return RatQT._raw(num.divexact(g), self.den.divexact(g))
        g = self.den.gcd(other.den)
        if g.is_one:
            num = self.num * other.den + other.num * self.den
            return RatQT._raw(num, self.den * other.den)
        db = other.den.divexact(g)
        num = self.num * db + other.num * self.den.divexact(g)
        if num.is_zero:
            return RAT_ZERO
        h = num.gcd(g)
        if not h.is_one:
            num = num.divexact(h)
            g = g.divexact(h)
            # den = (self.den / h) * db
            return RatQT._raw(num, self.den.divexact(h) * db)
        return RatQT._raw(num, self.den * db)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatQT.from_int(other)
        if not isinstance(other, RatQT):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatQT.from_int(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = RatQT.from_int(other)
        if not isinstance(other, RatQT):
            return NotImplemented
        if self.num.is_zero or other.num.is_zero:
            return RAT_ZERO
        if self.is_one:
            return other
        if other.is_one:
            return self
        if self.den.is_one and other.den.is_one:
            return RatQT._raw(self.num * other.num, _P_ONE)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1 = self.num if g1.is_one else self.num.divexact(g1)
        n2 = other.num if g2.is_one else other.num.divexact(g2)
        d1 = self.den if g2.is_one else self.den.divexact(g2)
        d2 = other.den if g1.is_one else other.den.divexact(g1)
        return RatQT._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.num.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        return RatQT._raw(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatQT.from_int(other)
        if not isinstance(other, RatQT):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return RatQT.from_int(other) * self.reciprocal()

    def __pow__(self, n):
        if n == 0:
            return RAT_ONE
        if n < 0:
            return self.reciprocal() ** (-n)
        return RatQT._raw(self.num**n, self.den**n)

    def eval(self, q0, t0) -> Fraction:
        """Exact value at rational (q0, t0); PoleError on a vanishing denominator."""
        dv = self.den.eval(q0, t0)
        if dv == 0:
            raise PoleError(f"denominator {self.den} vanishes at q={q0}, t={t0}")
        return self.num.eval(q0, t0) / dv

    def subs_q_eq_t(self):
        return RatQT(self.num.subs_q_eq_t(), self.den.subs_q_eq_t())

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _rat_unchecked(num, den):
    r = RatQT.__new__(RatQT)
    r.num, r.den, r._hash = num, den, None
    return r


RAT_ZERO = _rat_unchecked(_P_ZERO, _P_ONE)
RAT_ONE = _rat_unchecked(_P_ONE, _P_ONE)
RAT_Q = _rat_unchecked(_P_Q, _P_ONE)
RAT_T = _rat_unchecked(_P_T, _P_ONE)


def poly_mul(a: PolyQT, b: PolyQT) -> PolyQT:
    """Exact product in Z[q,t]."""
    return a * b


def rat_normalize(num: PolyQT, den: PolyQT) -> RatQT:
    """Reduced canonical fraction num/den."""
    return RatQT(num, den)


def rat_eval(r: RatQT, q0, t0) -> Fraction:
    """Exact rational value of r at (q0, t0)."""
    return r.eval(q0, t0)


def as_ratqt(x) -> RatQT:
    if isinstance(x, RatQT):
        return x
    if isinstance(x, PolyQT):
        return RatQT._raw(x, _P_ONE)
    if isinstance(x, int):
        return RatQT.from_int(x)
    if isinstance(x, Fraction):
        return RatQT.from_fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to RatQT")


def t_power(e: int) -> RatQT:
    """t^e for any integer e (negative exponents give fractions)."""
    if e >= 0:
        return RatQT.monomial(1, 0, e)
    return RatQT._raw(_P_ONE, PolyQT.monomial(1, 0, -e))


def q_power(e: int) -> RatQT:
    if e >= 0:
        return RatQT.monomial(1, e, 0)
    return RatQT._raw(_P_ONE, PolyQT.monomial(1, -e, 0))
