"""Sparse polynomials in x_1..x_n over the exact field Q(q,t).

Terms map dense exponent tuples to RatQT coefficients.  Variable indices in
the public API are 1-based to match the usual x_1..x_n conventions.
"""

from __future__ import annotations

from fractions import Fraction

from .qfield import RAT_ONE, RAT_ZERO, RatQT, as_ratqt


def _render_key(e):
    return (sum(e), e)


class XPoly:
    """Multivariate polynomial with RatQT coefficients, canonical sparse form."""

    __slots__ = ("nvars", "_c", "_hash")

    def __init__(self, nvars: int, coeffs=None):
        self.nvars = nvars
        d = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                c = as_ratqt(c)
                if c.is_zero:
                    continue
                e = tuple(int(v) for v in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} vars")
                prev = d.get(e)
                s = c if prev is None else prev + c
                if s.is_zero:
                    d.pop(e, None)
                else:
                    d[e] = s
        self._c = d
        self._hash = None

    @staticmethod
    def _make(nvars, d):
        p = XPoly.__new__(XPoly)
        p.nvars, p._c, p._hash = nvars, d, None
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._make(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls._make(nvars, {(0,) * nvars: RAT_ONE})

    @classmethod
    def constant(cls, nvars, c):
        c = as_ratqt(c)
        return cls._make(nvars, {} if c.is_zero else {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        """The variable x_i (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._make(nvars, {tuple(e): RAT_ONE})

    @classmethod
    def monomial(cls, exps, coeff=1):
        coeff = as_ratqt(coeff)
        exps = tuple(int(v) for v in exps)
        return cls._make(len(exps), {exps: coeff} if not coeff.is_zero else {})

    def items(self):
        return self._c.items()

    def __len__(self):
        return len(self._c)

    @property
    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._c.items())))
        return self._hash

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __neg__(self):
        return XPoly._make(self.nvars, {e: -c for e, c in self._c.items()})

    def __add__(self, other):
        if isinstance(other, (int, RatQT)):
            other = XPoly.constant(self.nvars, other)
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check(other)
        d = dict(self._c)
        for e, c in other._c.items():
            prev = d.get(e)
            s = c if prev is None else prev + c
            if s.is_zero:
                d.pop(e, None)
            else:
                d[e] = s
        return XPoly._make(self.nvars, d)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, RatQT)):
            other = XPoly.constant(self.nvars, other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, RatQT)):
            return self.scale(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check(other)
        a, b = self._c, other._c
        if not a or not b:
            return XPoly.zero(self.nvars)
        if len(a) > len(b):
            a, b = b, a
        d = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(u + v for u, v in zip(e1, e2))
                prev = d.get(e)
                s = c1 * c2 if prev is None else prev + c1 * c2
                if s.is_zero:
                    d.pop(e, None)
                else:
                    d[e] = s
        return XPoly._make(self.nvars, d)

    __rmul__ = __mul__

    def scale(self, c):
        c = as_ratqt(c)
        if c.is_zero:
            return XPoly.zero(self.nvars)
        if c.is_one:
            return self
        return XPoly._make(self.nvars, {e: v * c for e, v in self._c.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of XPoly")
        result = XPoly.one(self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def coeff_of(self, exps) -> RatQT:
        return self._c.get(tuple(exps), RAT_ZERO)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._c), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._c}
        return len(degs) <= 1

    def swap_vars(self, i: int):
        """Exchange x_i and x_{i+1} (1-based i)."""
        if not 1 <= i <= self.nvars - 1:
            raise IndexError(f"swap index {i} out of range 1..{self.nvars - 1}")
        k = i - 1
        d = {}
        for e, c in self._c.items():
            if e[k] != e[k + 1]:
                e = e[:k] + (e[k + 1], e[k]) + e[k + 2:]
            d[e] = c
        return XPoly._make(self.nvars, d)

    def divided_diff(self, i: int):
        """(p - s_i p)/(x_i - x_{i+1}), exact by the per-monomial geometric sum."""
        if not 1 <= i <= self.nvars - 1:
            raise IndexError(f"index {i} out of range 1..{self.nvars - 1}")
        k = i - 1
        d = {}
        for e, c in self._c.items():
            alpha, beta = e[k], e[k + 1]
            if alpha == beta:
                continue
            neg = alpha < beta
            lo, hi = (alpha, beta) if neg else (beta, alpha)
            val = -c if neg else c
            for u in range(lo, hi):
                key = e[:k] + (u, lo + hi - 1 - u) + e[k + 2:]
                prev = d.get(key)
                s = val if prev is None else prev + val
                if s.is_zero:
                    d.pop(key, None)
                else:
                    d[key] = s
        return XPoly._make(self.nvars, d)

    def divide_exact(self, i: int, j: int | None = None):
        """Exact quotient by (x_i - x_j), default j = i+1; error if not divisible."""
        j = i + 1 if j is None else j
        if not (1 <= i <= self.nvars and 1 <= j <= self.nvars and i != j):
            raise IndexError(f"bad variable pair ({i}, {j})")
        ii, jj = i - 1, j - 1
        rem = dict(self._c)
        out = {}
        # eliminate lex-leading terms (x_i weighted highest) against x_i - x_j
        while rem:
            e = max(rem, key=lambda v: (v[ii], v))
            c = rem[e]
            if e[ii] == 0:
                raise ArithmeticError(f"not divisible by (x_{i} - x_{j})")
            qe = e[:ii] + (e[ii] - 1,) + e[ii + 1:]
            prev = out.get(qe)
            s = c if prev is None else prev + c
            if s.is_zero:
                out.pop(qe, None)
            else:
                out[qe] = s
            # rem -= c * x^qe * (x_i - x_j)
            del rem[e]
            e2 = qe[:jj] + (qe[jj] + 1,) + qe[jj + 1:]
            prev = rem.get(e2)
            s = c if prev is None else prev + c
            if s.is_zero:
                rem.pop(e2, None)
            else:
                rem[e2] = s
        return XPoly._make(self.nvars, out)

    def cycle_substitute(self):
        """Substitute (x_1,...,x_n) -> (q x_n, x_1,...,x_{n-1})."""
        from .qfield import q_power

        d = {}
        for e, c in self._c.items():
            key = e[1:] + (e[0],)
            val = c * q_power(e[0]) if e[0] else c
            prev = d.get(key)
            s = val if prev is None else prev + val
            if s.is_zero:
                d.pop(key, None)
            else:
                d[key] = s
        return XPoly._make(self.nvars, d)

    def scale_var(self, i: int, factor: RatQT):
        """Substitute x_i -> factor * x_i."""
        k = i - 1
        d = {}
        for e, c in self._c.items():
            v = c * factor**e[k] if e[k] else c
            if not v.is_zero:
                d[e] = v
        return XPoly._make(self.nvars, d)

    def is_symmetric(self) -> bool:
        return all(self.swap_vars(i) == self for i in range(1, self.nvars))

    def map_coeffs(self, fn):
        d = {}
        for e, c in self._c.items():
            v = fn(c)
            if not v.is_zero:
                d[e] = v
        return XPoly._make(self.nvars, d)

    def eval(self, xs, q0, t0) -> Fraction:
        """Exact value with x_i = xs[i-1] and parameters (q0, t0)."""
        xs = [Fraction(v) for v in xs]
        total = Fraction(0)
        for e, c in self._c.items():
            term = c.eval(q0, t0)
            for v, p in zip(xs, e):
                if p:
                    term *= v**p
            total += term
        return total

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        """Terms ordered leading-first: by total degree then exponents, descending."""
        return sorted(self._c.items(), key=lambda kv: _render_key(kv[0]), reverse=True)

    def to_text(self) -> str:
        if not self._c:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}"
                for i, p in enumerate(e) if p
            )
            if not mono:
                chunks.append(str(c))
            elif c.is_one:
                chunks.append(mono)
            elif c == -1:
                chunks.append(f"-{mono}")
            elif c.is_polynomial and len(c.num.items()) == 1:
                chunks.append(f"{c}*{mono}")
            else:
                chunks.append(f"({c})*{mono}")
        out = chunks[0]
        for piece in chunks[1:]:
            out += piece if piece.startswith("-") else "+" + piece
        return out

    def to_latex(self) -> str:
        if not self._c:
            return "0"

        def poly_latex(p):
            return str(p).replace("*", " ").replace("q^", "q^").replace("t^", "t^")

        chunks = []
        for e, c in self.sorted_terms():
            mono = " ".join(
                f"x_{{{i + 1}}}" if p == 1 else f"x_{{{i + 1}}}^{{{p}}}"
                for i, p in enumerate(e) if p
            )
            if c.is_polynomial:
                cs = poly_latex(c.num)
                if cs == "1" and mono:
                    cs = ""
                elif cs == "-1" and mono:
                    cs = "-"
                elif mono and ("+" in cs[1:] or "-" in cs[1:]):
                    cs = f"\\left({cs}\\right)"
            else:
                cs = f"\\frac{{{poly_latex(c.num)}}}{{{poly_latex(c.den)}}}"
            chunks.append((cs + " " + mono).strip() if mono else (cs or "1"))
        out = chunks[0]
        for piece in chunks[1:]:
            out += piece if piece.startswith("-") else " + " + piece
        return out

    def to_json_obj(self):
        """List of term objects; num/den are [coeff, deg_q, deg_t] triples."""
        out = []
        for e, c in self.sorted_terms():
            out.append({
                "exponents": list(e),
                "num": [[v, a, b] for (a, b), v in sorted(c.num.items())],
                "den": [[v, a, b] for (a, b), v in sorted(c.den.items())],
            })
        return out

    @classmethod
    def from_json_obj(cls, data, nvars=None):
        from .qfield import PolyQT

        terms = {}
        for item in data:
            e = tuple(item["exponents"])
            if nvars is None:
                nvars = len(e)
            num = PolyQT({(a, b): v for v, a, b in item["num"]})
            den = PolyQT({(a, b): v for v, a, b in item["den"]})
            terms[e] = RatQT(num, den)
        if nvars is None:
            raise ValueError("cannot infer variable count from empty term list")
        return cls(nvars, terms)

    def __str__(self):
        return self.to_text()

    __repr__ = __str__
