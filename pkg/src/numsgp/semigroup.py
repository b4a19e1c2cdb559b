"""Numerical semigroups: membership, Apéry sets, pseudo-Frobenius numbers.

Everything is driven by one cached table, the Apéry set of the smallest
generator ``n1``: entry ``r`` is the least element of H congruent to ``r``
modulo ``n1``.  Membership, gaps, genus, Frobenius number and the
pseudo-Frobenius numbers are all read off that table.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Sequence

from .errors import EmptyInput, GcdNotOne, NotMember

SYMMETRIC = "symmetric"
PSEUDO_SYMMETRIC = "pseudo-symmetric"
ALMOST_SYMMETRIC = "almost-symmetric"
NONE = "none"


def _closure_bits(gens, bound):
    """Bitmask of the monoid generated by ``gens`` intersected with [0, bound]."""
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for g in gens:
        step = g
        while step <= bound:
            bits |= (bits << step) & mask
            step <<= 1
    return bits


def minimalize(gens: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split sorted distinct ``gens`` into (minimal generators, redundant ones)."""
    kept: list[int] = []
    dropped: list[int] = []
    for n in gens:
        if kept and (_closure_bits(kept, n) >> n) & 1:
            dropped.append(n)
        else:
            kept.append(n)
    return tuple(kept), tuple(dropped)


def apery_table(gens: Sequence[int]) -> list[int]:
    """Least element of <gens> in each residue class mod ``gens[0]``.

    Dijkstra over Z/n1 with edge weights n2, ..., ne.
    """
    n1 = gens[0]
    dist: list = [None] * n1
    dist[0] = 0
    heap = [(0, 0)]
    done = [False] * n1
    while heap:
        w, r = heapq.heappop(heap)
        if done[r]:
            continue
        done[r] = True
        for g in gens[1:]:
            s = (r + g) % n1
            cand = w + g
            if not done[s] and (dist[s] is None or cand < dist[s]):
                dist[s] = cand
                heapq.heappush(heap, (cand, s))
    return dist


@dataclass(frozen=True)
class AperyTable:
    base: int
    elements: tuple[int, ...]  # sorted

    def __contains__(self, h):
        return h in self._set

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def _set(self):
        return frozenset(self.elements)


@dataclass(frozen=True)
class PFData:
    frobenius: int
    genus: int
    pf: tuple[int, ...]
    pf_prime: tuple[int, ...]
    type: int
    classification: str

    @property
    def is_almost_symmetric(self):
        return self.classification != NONE

    def as_dict(self):
        return {
            "frobenius": self.frobenius,
            "genus": self.genus,
            "pf": list(self.pf),
            "pf_prime": list(self.pf_prime),
            "type": self.type,
            "classification": self.classification,
        }


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators n1 < ... < ne.

    Build instances with :meth:`new` (or :func:`semigroup`), which sorts,
    removes redundant generators and checks the gcd.  ``redundant`` records
    the generators that were dropped.
    """

    generators: tuple[int, ...]
    redundant: tuple[int, ...] = ()

    @classmethod
    def new(cls, raw_generators: Sequence[int]) -> "NumericalSemigroup":
        raw = [int(x) for x in raw_generators]
        if not raw:
            raise EmptyInput("no generators given")
        if any(x < 1 for x in raw):
            raise EmptyInput(f"generators must be positive, got {raw}")
        g = reduce(math.gcd, raw)
        if g != 1:
            raise GcdNotOne(raw, g)
        gens, dropped = minimalize(sorted(set(raw)))
        return cls(gens, dropped)

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"<{', '.join(map(str, self.generators))}>"

    @property
    def e(self) -> int:
        return len(self.generators)

    @property
    def N(self) -> int:
        return sum(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @cached_property
    def apery_min(self) -> tuple[int, ...]:
        return tuple(apery_table(self.generators))

    def contains(self, h: int) -> bool:
        if h < 0:
            return False
        return self.apery_min[h % self.generators[0]] <= h

    __contains__ = contains

    def leq(self, a: int, b: int) -> bool:
        """The order a <=_H b, i.e. b - a in H."""
        return self.contains(b - a)

    def degree(self, coeffs: Sequence[int]) -> int:
        return sum(c * n for c, n in zip(coeffs, self.generators))

    def apery(self, a: int) -> AperyTable:
        if a <= 0 or not self.contains(a):
            raise NotMember(a, self.generators)
        if a == self.generators[0]:
            return AperyTable(a, tuple(sorted(self.apery_min)))
        elems = []
        for r in range(a):
            h = r
            while not self.contains(h):
                h += a
            elems.append(h)
        return AperyTable(a, tuple(sorted(elems)))

    @property
    def frobenius(self) -> int:
        return max(self.apery_min) - self.generators[0]

    @cached_property
    def genus(self) -> int:
        n1 = self.generators[0]
        return sum(w // n1 for w in self.apery_min)

    def gaps(self) -> list[int]:
        return [h for h in range(self.frobenius + 1) if not self.contains(h)]

    def elements_upto(self, bound: int) -> list[int]:
        return [h for h in range(bound + 1) if self.contains(h)]

    @cached_property
    def pf_data(self) -> PFData:
        return pseudo_frobenius(self)

    @property
    def pf(self) -> tuple[int, ...]:
        return self.pf_data.pf

    @property
    def pf_prime(self) -> tuple[int, ...]:
        return self.pf_data.pf_prime

    @property
    def type(self) -> int:
        return self.pf_data.type

    @property
    def classification(self) -> str:
        return self.pf_data.classification

    @property
    def is_almost_symmetric(self) -> bool:
        return self.pf_data.is_almost_symmetric

    @cached_property
    def alphas(self):
        from .factorization import alphas

        return alphas(self)


def semigroup(*gens) -> NumericalSemigroup:
    """Shorthand: ``semigroup(5, 6, 8, 9)`` or ``semigroup([5, 6, 8, 9])``."""
    if len(gens) == 1 and not isinstance(gens[0], int):
        gens = tuple(gens[0])
    return NumericalSemigroup.new(gens)


def contains(H: NumericalSemigroup, h: int) -> bool:
    return H.contains(h)


def leq_H(H: NumericalSemigroup, a: int, b: int) -> bool:
    return H.leq(a, b)


def apery(H: NumericalSemigroup, a: int) -> AperyTable:
    return H.apery(a)


def pseudo_frobenius(H: NumericalSemigroup) -> PFData:
    """Frobenius number, genus, PF(H), type and the symmetry class of H.

    PF(H) is read off the Apéry table of n1: f is pseudo-Frobenius iff f + n1
    is a maximal element of Ap(n1, H) for the order <=_H.
    """
    n1 = H.generators[0]
    if n1 == 1:
        # H = N: the usual convention PF = {-1}, type 1
        return PFData(-1, 0, (-1,), (), 1, SYMMETRIC)
    frob = H.frobenius
    genus = H.genus
    pf = sorted(
        w - n1
        for w in H.apery_min
        if w and all(H.contains(w - n1 + n) for n in H.generators[1:])
    )
    t = len(pf)
    if t == 1:
        cls = SYMMETRIC
    elif 2 * genus == frob + t:
        cls = PSEUDO_SYMMETRIC if t == 2 else ALMOST_SYMMETRIC
    else:
        cls = NONE
    return PFData(frob, genus, tuple(pf), tuple(pf[:-1]), t, cls)
