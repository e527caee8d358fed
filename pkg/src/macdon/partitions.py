"""Partitions, compositions and the adjacent-swap words that rearrange them.

Partitions are plain tuples of weakly decreasing non-negative ints, kept at
an explicit fixed length (trailing zeros matter: they track the number of
variables).  Rearrangement words are tuples of 1-based adjacent-transposition
indices (i_1, ..., i_k), to be applied rightmost-first by operators indexed
the same way.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, NamedTuple


class Rearrangement(NamedTuple):
    composition: tuple
    word: tuple


class PermWord(NamedTuple):
    perm: tuple  # one-line notation, 1-based images
    word: tuple


def check_partition(lam) -> tuple:
    lam = tuple(int(p) for p in lam)
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not weakly decreasing")
    return lam


def pad(parts, n) -> tuple:
    parts = tuple(parts)
    if len(parts) > n:
        if any(parts[n:]):
            raise ValueError(f"{parts} does not fit in {n} parts")
        return parts[:n]
    return parts + (0,) * (n - len(parts))


def weight(parts) -> int:
    return sum(parts)


def conjugate(lam) -> tuple:
    """Column counts of the Young diagram, length max(lam_1, 1)."""
    lam = check_partition(lam)
    r = lam[0] if lam else 0
    if r == 0:
        return (0,)
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, r + 1))


def truncate(lam, k: int) -> tuple:
    """Zero out all parts of size <= k."""
    lam = check_partition(lam)
    return tuple(p if p > k else 0 for p in lam)


def dominance_less(mu, lam) -> bool:
    """Strict dominance: every leading partial sum of mu is <= that of lam."""
    mu, lam = check_partition(mu), check_partition(lam)
    if weight(mu) != weight(lam):
        raise ValueError("dominance compares partitions of equal weight")
    n = max(len(mu), len(lam))
    mu, lam = pad(mu, n), pad(lam, n)
    if mu == lam:
        return False
    s, u = 0, 0
    for a, b in zip(mu, lam):
        s += a
        u += b
        if s > u:
            return False
    return True


def z_lambda(lam) -> int:
    """prod_i i^{m_i} m_i! over part multiplicities m_i."""
    lam = check_partition(lam)
    mult = {}
    for p in lam:
        if p:
            mult[p] = mult.get(p, 0) + 1
    z = 1
    for p, m in mult.items():
        z *= p**m
        for j in range(1, m + 1):
            z *= j
    return z


def distinct_rearrangements(nu) -> list[Rearrangement]:
    """Every distinct rearrangement of nu once, with a minimal swap word.

    BFS over descent swaps: from rho with rho_i > rho_{i+1}, the swapped
    composition gets word (i,) + word(rho).  The identity comes first and
    words are shortest possible.
    """
    nu = tuple(nu)
    start = Rearrangement(nu, ())
    seen = {nu}
    out = [start]
    queue = deque([start])
    while queue:
        comp, word = queue.popleft()
        for i in range(len(comp) - 1):
            if comp[i] > comp[i + 1]:
                swapped = comp[:i] + (comp[i + 1], comp[i]) + comp[i + 2:]
                if swapped not in seen:
                    seen.add(swapped)
                    item = Rearrangement(swapped, (i + 1,) + word)
                    out.append(item)
                    queue.append(item)
    return out


def full_symmetric_group(n: int) -> list[PermWord]:
    """All n! permutations with minimal reduced words, identity first."""
    ident = tuple(range(1, n + 1))
    start = PermWord(ident, ())
    seen = {ident}
    out = [start]
    queue = deque([start])
    while queue:
        perm, word = queue.popleft()
        for i in range(n - 1):
            nxt = perm[:i] + (perm[i + 1], perm[i]) + perm[i + 2:]
            if nxt not in seen:
                seen.add(nxt)
                item = PermWord(nxt, (i + 1,) + word)
                out.append(item)
                queue.append(item)
    return out


def apply_perm(perm, comp) -> tuple:
    """Rearranged composition matching T_sigma acting on f-subscripts.

    perm is one-line notation built from the identity by the same swap word
    (rightmost letter first), so entry perm[pos] names the original position
    whose value sits at pos.
    """
    return tuple(comp[img - 1] for img in perm)


def partitions_of(d: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[tuple]:
    """Partitions of d, weakly decreasing, largest part first."""
    if d == 0:
        yield ()
        return
    cap = min(d, max_part) if max_part else d
    for first in range(cap, 0, -1):
        if max_len is not None and max_len < 1:
            return
        for rest in partitions_of(d - first, None if max_len is None else max_len - 1, first):
            yield (first,) + rest


def multiplicity_count(parts) -> int:
    """Number of distinct rearrangements: n! / prod(mult!)."""
    from math import factorial

    n = len(parts)
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    count = factorial(n)
    for m in mult.values():
        count //= factorial(m)
    return count
