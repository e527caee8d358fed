"""Polynomial representation of the type A Hecke algebra on n variables.

T_i acts by t*p - (t*x_i - x_{i+1}) * (p - s_i p)/(x_i - x_{i+1}); the
divided difference is always exact, so T_i maps polynomials to polynomials.
Words of generators apply rightmost letter first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .qfield import RAT_T
from .xpoly import XPoly


def apply_Ti(p: XPoly, i: int) -> XPoly:
    if not 1 <= i <= p.nvars - 1:
        raise IndexError(f"generator index {i} out of range 1..{p.nvars - 1}")
    delta = p.divided_diff(i)
    if delta.is_zero:
        return p.scale(RAT_T)
    factor = XPoly.var(p.nvars, i).scale(RAT_T) - XPoly.var(p.nvars, i + 1)
    return p.scale(RAT_T) - factor * delta


def apply_Tword(p: XPoly, word) -> XPoly:
    for i in reversed(word):
        p = apply_Ti(p, i)
    return p


def apply_Tsigma(p: XPoly, sigma) -> XPoly:
    """sigma is any object with a .word of generator indices."""
    return apply_Tword(p, sigma.word)


def random_xpoly(nvars, rng, degree=4, terms=5, coeff_range=5):
    """Random sparse polynomial with small integer coefficients."""
    d = {}
    for _ in range(terms):
        e = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(nvars)] += 1
        d[tuple(e)] = d.get(tuple(e), 0) + rng.randint(-coeff_range, coeff_range)
    return XPoly(nvars, {e: c for e, c in d.items() if c})


@dataclass
class RelationReport:
    """Outcome of a relation suite; failures carry a witness string."""

    checks: list = field(default_factory=list)

    def record(self, name: str, ok: bool, witness: str = ""):
        self.checks.append((name, ok, witness))

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self):
        return [(name, w) for name, ok, w in self.checks if not ok]

    def lines(self):
        out = []
        for name, ok, witness in self.checks:
            line = f"{'PASS' if ok else 'FAIL'}  {name}"
            if witness and not ok:
                line += f"  [witness: {witness}]"
            out.append(line)
        return out

    def __str__(self):
        return "\n".join(self.lines())


def check_hecke_relations(n: int, samples: int = 20, seed: int = 0) -> RelationReport:
    """Quadratic, braid and commuting relations on random polynomials."""
    rng = random.Random(seed)
    report = RelationReport()
    for s in range(samples):
        p = random_xpoly(n, rng)
        for i in range(1, n):
            lhs = apply_Ti(apply_Ti(p, i), i)
            rhs = apply_Ti(p, i).scale(RAT_T - 1) + p.scale(RAT_T)
            ok = lhs == rhs  # (T_i - t)(T_i + 1) = 0
            report.record(f"quadratic i={i} sample={s}", ok, "" if ok else p.to_text())
        for i in range(1, n - 1):
            lhs = apply_Ti(apply_Ti(apply_Ti(p, i), i + 1), i)
            rhs = apply_Ti(apply_Ti(apply_Ti(p, i + 1), i), i + 1)
            ok = lhs == rhs
            report.record(f"braid i={i} sample={s}", ok, "" if ok else p.to_text())
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                lhs = apply_Ti(apply_Ti(p, j), i)
                rhs = apply_Ti(apply_Ti(p, i), j)
                ok = lhs == rhs
                report.record(f"commute i={i} j={j} sample={s}", ok, "" if ok else p.to_text())
    return report
