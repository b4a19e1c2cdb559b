"""Factorizations of semigroup elements, unique factorization, alpha constants.

A factorization of h is a coefficient tuple (b1, ..., be) of non-negative
integers with sum(b_i * n_i) = h.  Factorizations are plain int tuples; use
``H.degree(coeffs)`` to recover h.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EnumerationOverflow, NotMember

DEFAULT_CAP = 10**6


def _enumerate(gens, h, cap, out):
    """Depth-first search over decreasing budgets, last generator outermost."""
    e = len(gens)
    coeffs = [0] * e
    n1 = gens[0]

    def rec(i, rem):
        if i == 0:
            if rem % n1 == 0:
                coeffs[0] = rem // n1
                out.append(tuple(coeffs))
                if len(out) > cap:
                    raise EnumerationOverflow(
                        f"more than {cap} factorizations of {h}", cap, {"found": len(out)}
                    )
            return
        g = gens[i]
        for c in range(rem // g, -1, -1):
            coeffs[i] = c
            rec(i - 1, rem - c * g)
        coeffs[i] = 0

    rec(e - 1, h)


def factorizations_of(gens, h, cap=DEFAULT_CAP):
    """All factorizations of h over an arbitrary positive generator list.

    Returned in descending lexicographic order.
    """
    if h < 0:
        return []
    out: list = []
    _enumerate(tuple(gens), h, cap, out)
    out.sort(reverse=True)
    return out


def factorizations(H, h: int, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """Every factorization of h in H (empty when h is not in H)."""
    if not H.contains(h):
        return []
    return factorizations_of(H.generators, h, cap)


def factorizations_upto(H, bound: int) -> dict[int, list[tuple[int, ...]]]:
    """Factorizations of every element of H up to ``bound``, keyed by degree.

    Each list is in descending lexicographic order.
    """
    gens = H.generators
    e = len(gens)
    by_degree: dict[int, list] = {}
    coeffs = [0] * e

    def rec(i, used):
        if i == e:
            by_degree.setdefault(used, []).append(tuple(coeffs))
            return
        g = gens[i]
        c = 0
        while used + c * g <= bound:
            coeffs[i] = c
            rec(i + 1, used + c * g)
            c += 1
        coeffs[i] = 0

    rec(0, 0)
    for fibre in by_degree.values():
        fibre.sort(reverse=True)
    return by_degree


def has_uf(H, h: int) -> bool:
    if not H.contains(h):
        raise NotMember(h, H.generators)
    return _count_upto(H, h, 2) == 1


def _count_upto(H, h, limit):
    try:
        return len(factorizations(H, h, cap=limit - 1))
    except EnumerationOverflow:
        return limit


def support(coeffs):
    return frozenset(i for i, c in enumerate(coeffs) if c)


@dataclass(frozen=True)
class AlphaTable:
    """alpha[i] is the least positive a with a*n_i expressible without n_i.

    ``witnesses[i]`` is the lexicographically smallest full coefficient tuple
    (zero at position i) realizing alpha[i] * n_i.
    """

    alpha: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]

    def __getitem__(self, i):
        return self.alpha[i]

    def __iter__(self):
        return iter(self.alpha)

    def __len__(self):
        return len(self.alpha)


def _min_multiple(gens, i):
    n = gens[i]
    others = gens[:i] + gens[i + 1:]
    k = 1
    while True:
        facts = factorizations_of(others, k * n)
        if facts:
            w = min(facts)
            return k, w[:i] + (0,) + w[i:]
        k += 1


def alphas(H) -> AlphaTable:
    gens = H.generators
    if len(gens) < 2:
        raise ValueError("alpha constants need at least two generators")
    pairs = [_min_multiple(gens, i) for i in range(len(gens))]
    return AlphaTable(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
