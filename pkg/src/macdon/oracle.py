"""Classical constructions of Macdonald polynomials, used as independent checks.

Three routes live here: Gram orthogonalization of the monomial basis under
the (q,t) power-sum inner product, the first Macdonald q-difference operator
with its eigenvalue formula, and Schur polynomials via the bialternant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import check_partition, pad, partitions_of, z_lambda
from .qfield import RAT_ONE, PolyQT, RatQT, as_ratqt
from .xpoly import XPoly


def strip_zeros(lam) -> tuple:
    return tuple(p for p in lam if p)


def monomial_sym(lam, n: int) -> XPoly:
    """m_lam in n variables; zero when lam has more than n nonzero parts."""
    lam = strip_zeros(check_partition(lam))
    if len(lam) > n:
        return XPoly.zero(n)
    if not lam:
        return XPoly.one(n)
    exps = set(itertools.permutations(pad(lam, n)))
    return XPoly(n, {e: RAT_ONE for e in exps})


def power_sum(k: int, n: int) -> XPoly:
    e = [0] * n
    d = {}
    for i in range(n):
        e[i] = k
        d[tuple(e)] = RAT_ONE
        e[i] = 0
    return XPoly(n, d)


@lru_cache(maxsize=None)
def _partitions_list(d: int) -> tuple:
    return tuple(sorted(partitions_of(d)))


@lru_cache(maxsize=None)
def p_to_m(d: int):
    """Expansion p_lam = sum_mu M[lam][mu] m_mu over partitions of d (int entries)."""
    if d == 0:
        return {(): {(): 1}}
    parts = _partitions_list(d)
    out = {}
    for lam in parts:
        poly = XPoly.one(d)
        for part in lam:
            poly = poly * power_sum(part, d)
        row = {}
        for mu in parts:
            c = poly.coeff_of(pad(mu, d))
            if not c.is_zero:
                row[mu] = _as_int(c)
        out[lam] = row
    return out


def _as_int(c: RatQT) -> int:
    v = c.eval(0, 0)
    assert v.denominator == 1
    return v.numerator


@lru_cache(maxsize=None)
def m_to_p(d: int):
    """Inverse transition: m_mu = sum_lam N[mu][lam] p_lam, Fraction entries."""
    parts = _partitions_list(d)
    k = len(parts)
    M = p_to_m(d)
    aug = [[Fraction(M[parts[i]].get(parts[j], 0)) for j in range(k)] + [Fraction(i == j) for j in range(k)]
           for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    inv_m = {}
    for i, mu in enumerate(parts):
        inv_m[mu] = {parts[j]: aug[i][k + j] for j in range(k) if aug[i][k + j]}
    return inv_m


@dataclass(frozen=True)
class SymFunc:
    """Symmetric function of one degree in a tagged basis ('m' or 'p')."""

    degree: int
    basis: str
    coeffs: tuple  # sorted tuple of (partition, RatQT)

    @classmethod
    def from_dict(cls, degree, basis, d):
        clean = tuple(sorted((k, v) for k, v in d.items() if not v.is_zero))
        return cls(degree, basis, clean)

    def as_dict(self):
        return dict(self.coeffs)

    def to_p_basis(self):
        if self.basis == "p":
            return self.as_dict()
        conv = m_to_p(self.degree)
        out = {}
        for mu, c in self.coeffs:
            for lam, frac in conv[mu].items():
                add = c * RatQT.from_fraction(frac)
                prev = out.get(lam)
                s = add if prev is None else prev + add
                if s.is_zero:
                    out.pop(lam, None)
                else:
                    out[lam] = s
        return out


def _pair_weight(lam) -> RatQT:
    w = as_ratqt(z_lambda(lam))
    for part in lam:
        w = w * RatQT(PolyQT.one_minus_qt(part, 0), PolyQT.one_minus_qt(0, part))
    return w


def macd_inner(f: SymFunc, g: SymFunc) -> RatQT:
    """Bilinear extension of <p_lam, p_mu> = delta z_lam prod (1-q^a)/(1-t^a)."""
    if f.degree != g.degree:
        raise ValueError("inner product needs equal degrees")
    fp, gp = f.to_p_basis(), g.to_p_basis()
    total = RatQT.from_int(0)
    for lam, c in fp.items():
        d = gp.get(lam)
        if d is not None:
            total = total + c * d * _pair_weight(lam)
    return total


@lru_cache(maxsize=None)
def _m_gram_matrix(d: int):
    """Gram matrix of the monomial basis under the Macdonald inner product."""
    parts = _partitions_list(d)
    conv = m_to_p(d)
    weights = {lam: _pair_weight(lam) for lam in parts}
    gram = {}
    for mu in parts:
        row_mu = conv[mu]
        for nu in parts:
            if (nu, mu) in gram:
                gram[(mu, nu)] = gram[(nu, mu)]
                continue
            total = RatQT.from_int(0)
            row_nu = conv[nu]
            for lam, a in row_mu.items():
                b = row_nu.get(lam)
                if b:
                    total = total + RatQT.from_fraction(a * b) * weights[lam]
            gram[(mu, nu)] = total
    return gram


def _order_key(lam, tie_break: str):
    # any linear extension of dominance works; both choices put dominated
    # partitions first, differing on incomparable ties
    if tie_break == "lex":
        return lam
    return (-len(lam), lam)


@lru_cache(maxsize=None)
def gram_coeffs(d: int, tie_break: str = "lex"):
    """Monomial-basis coefficients of P_lam for every partition of d."""
    if d == 0:
        return {(): {(): RAT_ONE}}
    parts = sorted(_partitions_list(d), key=lambda lam: _order_key(lam, tie_break))
    gram = _m_gram_matrix(d)

    def inner_vec(u, v):
        total = RatQT.from_int(0)
        for mu, a in u.items():
            for nu, b in v.items():
                total = total + a * b * gram[(mu, nu)]
        return total

    solved = {}
    norms = {}
    for lam in parts:
        vec = {lam: RAT_ONE}
        for mu in parts:
            if mu == lam:
                break
            prev = solved[mu]
            c = inner_vec({lam: RAT_ONE}, prev) / norms[mu]
            if c.is_zero:
                continue
            for nu, v in prev.items():
                add = -(c * v)
                cur = vec.get(nu)
                s = add if cur is None else cur + add
                if s.is_zero:
                    vec.pop(nu, None)
                else:
                    vec[nu] = s
        solved[lam] = vec
        norms[lam] = inner_vec(vec, vec)
    return solved


def gram_macdonald(lam, n: int, tie_break: str = "lex") -> XPoly:
    """P_lam in n variables from the orthogonality definition."""
    lam0 = strip_zeros(check_partition(lam))
    d = sum(lam0)
    if d == 0:
        return XPoly.one(n)
    coeffs = gram_coeffs(d, tie_break)[lam0]
    out = XPoly.zero(n)
    for mu, c in coeffs.items():
        m = monomial_sym(mu, n)
        if not m.is_zero:
            out = out + m.scale(c)
    return out


def gram_macdonald_sym(lam) -> SymFunc:
    """P_lam as an abstract m-basis vector (all partitions of |lam| kept)."""
    lam0 = strip_zeros(check_partition(lam))
    d = sum(lam0)
    return SymFunc.from_dict(d, "m", gram_coeffs(d)[lam0])


def macdonald_eigenvalue(lam, n: int) -> RatQT:
    """sum_i q^{lam_i} t^{n-i} for the first Macdonald operator."""
    lam = pad(check_partition(lam), n)
    total = RatQT.from_int(0)
    for i, part in enumerate(lam, start=1):
        total = total + RatQT.monomial(1, part, n - i)
    return total


def macd_operator_D1(p: XPoly, n: int) -> XPoly:
    """First Macdonald q-difference operator, exactly.

    D_1 = sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) . (x_i -> q x_i);
    all Vandermonde factors cancel for symmetric input, otherwise the final
    exact division fails loudly.
    """
    if p.nvars != n:
        raise ValueError("variable count mismatch")
    t, q = RatQT.t(), RatQT.q()
    xs = [XPoly.var(n, i) for i in range(1, n + 1)]
    total = XPoly.zero(n)
    for i in range(1, n + 1):
        numer = XPoly.one(n)
        for j in range(1, n + 1):
            if j != i:
                numer = numer * (xs[i - 1].scale(t) - xs[j - 1])
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                if j != i and k != i:
                    numer = numer * (xs[j - 1] - xs[k - 1])
        shifted = p.scale_var(i, q)
        term = numer * shifted
        if (i - 1) % 2:
            term = -term
        total = total + term
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            try:
                total = total.divide_exact(j, k)
            except ArithmeticError as exc:
                raise ValueError("difference operator left a denominator; "
                                 "input is not symmetric") from exc
    return total


def schur(lam, n: int) -> XPoly:
    """s_lam in n variables via the bialternant with exact division."""
    lam0 = strip_zeros(check_partition(lam))
    if len(lam0) > n:
        return XPoly.zero(n)
    lam = pad(lam0, n)
    staircase = tuple(lam[i] + n - 1 - i for i in range(n))
    terms = {}
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        e = tuple(staircase[perm[i]] for i in range(n))
        terms[e] = RatQT.from_int(sign)
    alt = XPoly(n, terms)
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            alt = alt.divide_exact(j, k)
    return alt


def _perm_sign(perm) -> int:
    inv = 0
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                inv += 1
    return -1 if inv % 2 else 1
