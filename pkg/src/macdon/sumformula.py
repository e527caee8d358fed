"""Column-by-column sum formula for symmetric Macdonald polynomials.

The polynomial is built right to left: starting from 1, each column level i
multiplies in the indicator monomial of the level-i truncation and applies a
coefficient-weighted sum of Hecke operators over the distinct rearrangements
of that truncation; the outermost level carries no coefficients.
"""

from __future__ import annotations

from .hecke import apply_Ti
from .partitions import (apply_perm, check_partition, conjugate,
                         distinct_rearrangements, full_symmetric_group, pad,
                         truncate)
from .qfield import RAT_ONE, RAT_ZERO, PolyQT, RatQT
from .xpoly import XPoly


def coeff_C(i: int, lam, mu, r: int) -> RatQT:
    """Branching coefficient attached to column i, for rows lam over mu.

    Vanishes whenever some position has 0 < lam_k < mu_k; otherwise it is
    prod_{j=i+1}^{r} q^{(j-i) a_j} prod_{k=1}^{b_j} (1-t^k)/(1-q^{j-i} t^{l'_i - l'_j + k})
    with a_j counting pairs (0, j), b_j counting pairs (j, smaller), and l'
    the conjugate of the sorted first row.
    """
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        raise ValueError("rows must have equal length")
    if any(v > r for v in lam + mu):
        raise ValueError(f"entries exceed declared largest part {r}")
    if any(0 < a < b for a, b in zip(lam, mu)):
        return RAT_ZERO
    conj = conjugate(tuple(sorted(lam, reverse=True)))
    conj = conj + (0,) * (r - len(conj))
    a_cnt = [0] * (r + 1)
    b_cnt = [0] * (r + 1)
    for a, b in zip(lam, mu):
        if a == 0 and b > 0:
            a_cnt[b] += 1
        if a > 0 and a > b:
            b_cnt[a] += 1
    value = RAT_ONE
    for j in range(i + 1, r + 1):
        if a_cnt[j]:
            value = value * RatQT.monomial(1, (j - i) * a_cnt[j], 0)
        gap = conj[i - 1] - conj[j - 1]
        for k in range(1, b_cnt[j] + 1):
            value = value * RatQT(PolyQT.one_minus_qt(0, k),
                                  PolyQT.one_minus_qt(j - i, gap + k))
    return value


def column_monomial(nu, nvars: int | None = None) -> XPoly:
    """Product of x_k over positions where nu_k > 0."""
    nu = tuple(nu)
    nvars = len(nu) if nvars is None else nvars
    exps = tuple(1 if v > 0 else 0 for v in pad(nu, nvars))
    return XPoly.monomial(exps, 1)


def _hecke_sum(base: XPoly, rearrangements, coeff_fn) -> XPoly:
    """Sum of C(mu) * T_word(base) over rearrangement nodes.

    Words come from a BFS tree, so each node's polynomial is one T_i away
    from its parent's; every node is computed even when its own coefficient
    vanishes, because descendants may still contribute.
    """
    computed = {(): base}
    total = XPoly.zero(base.nvars)
    for comp, word in rearrangements:
        if word:
            poly = apply_Ti(computed[word[1:]], word[0])
            computed[word] = poly
        else:
            poly = base
        c = coeff_fn(comp)
        if not c.is_zero:
            total = total + poly.scale(c)
    return total


def macdonald_sum(lam, n: int, rearrangement_mode: str = "distinct") -> XPoly:
    """P_lam(x_1..x_n; q, t) from the explicit column sum formula.

    rearrangement_mode 'distinct' sums each rearrangement once with its
    minimal Hecke word; 'full' sums over all n! permutations and is kept
    only to document that it fails for repeated parts.
    """
    lam = check_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} needs more than {n} variables")
    lam = pad(lam, n)
    r = lam[0]
    state = XPoly.one(n)
    for i in range(r - 1, -1, -1):
        level = truncate(lam, i)
        upper = truncate(lam, i - 1) if i > 0 else None
        base = column_monomial(level, n) * state
        if i == 0:
            coeff_fn = lambda comp: RAT_ONE
        else:
            coeff_fn = lambda comp, up=upper, lvl=i: coeff_C(lvl, up, comp, r)
        if rearrangement_mode == "distinct":
            nodes = distinct_rearrangements(level)
        elif rearrangement_mode == "full":
            nodes = [(apply_perm(pw.perm, level), pw.word)
                     for pw in full_symmetric_group(n)]
        else:
            raise ValueError(f"unknown rearrangement mode {rearrangement_mode!r}")
        state = _hecke_sum(base, nodes, coeff_fn)
    return state
