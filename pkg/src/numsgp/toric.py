"""Minimal binomial generators and graded Betti numbers of K[H] = S/I_H.

Two independent routes are implemented:

* fibre graphs: the factorizations of a degree d, joined when they share a
  variable; a minimal generating set of I_H needs (components - 1)
  binomials in degree d;
* squarefree divisor complexes: beta_{i,h} is the dimension of the reduced
  (i-1)-st homology of {S : h - sum_{j in S} n_j in H}, computed over Q.

Both scan degrees up to F(H) + N, the largest shift in the resolution.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .binomial import Binomial
from .errors import PrecondFailed
from .factorization import factorizations_upto
from .linalg import rank
from .report import Report, not_applicable
from .semigroup import NumericalSemigroup


def scan_bound(H) -> int:
    return H.frobenius + H.N


@lru_cache(maxsize=256)
def _fibres(gens):
    H = NumericalSemigroup(gens)
    return factorizations_upto(H, scan_bound(H))


def fibres(H):
    """Factorizations of every element up to F(H) + N, keyed by degree."""
    return _fibres(H.generators)


def fibre(H, d):
    if d <= scan_bound(H):
        return fibres(H).get(d, [])
    from .factorization import factorizations

    return factorizations(H, d)


def _components(vertices):
    """Components of the shared-support graph, each sorted ascending.

    Components are ordered by their lexicographically smallest vertex.
    """
    k = len(vertices)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    e = len(vertices[0])
    for i in range(e):
        first = None
        for idx, v in enumerate(vertices):
            if v[i]:
                if first is None:
                    first = idx
                else:
                    a, b = find(first), find(idx)
                    if a != b:
                        parent[b] = a
    groups: dict[int, list] = {}
    for idx, v in enumerate(vertices):
        groups.setdefault(find(idx), []).append(v)
    comps = [sorted(g) for g in groups.values()]
    comps.sort(key=lambda c: c[0])
    return comps


@dataclass
class FiberGraph:
    degree: int
    vertices: list
    components: list

    @property
    def betti1(self):
        return max(len(self.components) - 1, 0)


def fiber_graph(H, d) -> FiberGraph:
    verts = fibre(H, d)
    comps = _components(verts) if verts else []
    return FiberGraph(d, verts, comps)


@lru_cache(maxsize=256)
def _minimal_generators(gens):
    H = NumericalSemigroup(gens)
    out = []
    for d in sorted(fibres(H)):
        verts = fibres(H)[d]
        if len(verts) < 2:
            continue
        comps = _components(verts)
        for comp in comps[1:]:
            out.append(Binomial.from_pair(comps[0][0], comp[0], gens))
    return tuple(out)


def minimal_generators(H) -> list[Binomial]:
    """A minimal binomial generating set of I_H, ordered by degree."""
    return list(_minimal_generators(H.generators))


def generator_degrees(H) -> list[int]:
    """Degrees of the minimal generators of I_H, with multiplicity."""
    return [b.degree for b in minimal_generators(H)]


def is_minimal_binomial(H, b: Binomial) -> bool:
    """True when b belongs to some minimal generating set of I_H.

    That happens exactly when its two monomials lie in different components
    of the fibre graph of its degree.
    """
    comps = fiber_graph(H, b.degree).components
    lo = [min(x, y) for x, y in zip(b.plus, b.minus)]
    if any(lo):
        return False
    where = {v: k for k, c in enumerate(comps) for v in c}
    return where[b.plus] != where[b.minus]


def in_ideal_generated_by(H, binomials, d) -> bool:
    """Is the fibre of degree d connected by moves from ``binomials``?"""
    verts = fibre(H, d)
    if len(verts) < 2:
        return True
    moves = [b for b in binomials if b.degree <= d]
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for b in moves:
            for w in b.moves(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == len(verts)


# -- squarefree divisor complexes -------------------------------------------


@dataclass
class DivisorComplex:
    element: int
    faces: list  # tuples of 0-based generator indices, including ()

    def faces_of_size(self, k):
        return [f for f in self.faces if len(f) == k]


def divisor_complex(H, h) -> DivisorComplex:
    gens = H.generators
    idx = range(len(gens))
    faces = [()]
    for k in range(1, len(gens) + 1):
        for S in combinations(idx, k):
            if H.contains(h - sum(gens[i] for i in S)):
                faces.append(S)
    return DivisorComplex(h, faces)


def reduced_homology(faces, e):
    """Dimensions of reduced homology, keyed by dimension (-1 .. e-1)."""
    by_size: dict[int, list] = {}
    for f in faces:
        by_size.setdefault(len(f), []).append(f)
    if not by_size.get(0):
        return {}
    index = {k: {f: j for j, f in enumerate(fs)} for k, fs in by_size.items()}
    ranks = {}
    for k in range(1, e + 1):
        rows = by_size.get(k, [])
        if not rows:
            ranks[k] = 0
            continue
        lower = index[k - 1]
        mat = []
        for f in rows:
            row = [0] * len(lower)
            for pos in range(k):
                row[lower[f[:pos] + f[pos + 1:]]] = -1 if pos % 2 else 1
            mat.append(row)
        ranks[k] = rank(mat)
    dims = {}
    for k in range(0, e + 1):
        n = len(by_size.get(k, []))
        d = n - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if d:
            dims[k - 1] = d
    return dims


def _is_cone(faces_set, vertices):
    for v in vertices:
        if all(tuple(sorted(set(f) | {v})) in faces_set for f in faces_set):
            return True
    return False


@dataclass
class BettiTable:
    e: int
    entries: dict  # (i, degree) -> beta_{i,degree}
    a_degrees: tuple = ()
    b_degrees: tuple = ()
    last_degrees: tuple = ()
    m0: int | None = None
    surplus: int | None = None
    betti: tuple = field(default=())

    @property
    def mu(self):
        return self.betti[1] if len(self.betti) > 1 else 0

    def degrees(self, i):
        out = []
        for (j, d), c in sorted(self.entries.items()):
            if j == i:
                out += [d] * c
        return tuple(out)

    def as_dict(self):
        return {
            "betti": list(self.betti),
            "mu": self.mu,
            "entries": [[i, d, c] for (i, d), c in sorted(self.entries.items())],
            "a_degrees": list(self.a_degrees),
            "b_degrees": list(self.b_degrees),
            "last_degrees": list(self.last_degrees),
            "m0": self.m0,
            "surplus": self.surplus,
        }


@lru_cache(maxsize=256)
def _graded_betti(gens):
    H = NumericalSemigroup(gens)
    e = H.e
    N = H.N
    entries: dict = {}
    for h in range(scan_bound(H) + 1):
        if not H.contains(h):
            continue
        if h and H.contains(h - N):
            continue  # full simplex
        cx = divisor_complex(H, h)
        faces_set = set(cx.faces)
        verts = [f[0] for f in cx.faces if len(f) == 1]
        if verts and _is_cone(faces_set, verts):
            continue
        for dim, c in reduced_homology(cx.faces, e).items():
            entries[(dim + 1, h)] = c
    table = BettiTable(e, entries)
    table.betti = tuple(
        sum(c for (i, _), c in entries.items() if i == k) for k in range(e)
    )
    table.a_degrees = table.degrees(1)
    table.b_degrees = table.degrees(2) if e > 2 else ()
    table.last_degrees = table.degrees(e - 1)
    if e == 4 and H.is_almost_symmetric:
        table.m0 = 3 * (H.type - 1)
        table.surplus = table.mu - table.m0
    return table


def graded_betti(H) -> BettiTable:
    if H.e > 6:
        raise PrecondFailed(f"graded_betti supports e <= 6, got e = {H.e}")
    return _graded_betti(H.generators)


def _multiset_minus(big, small):
    rest = Counter(big)
    rest.subtract(Counter(small))
    if any(v < 0 for v in rest.values()):
        return None
    return sorted(rest.elements())


def verify_comparison(H) -> Report:
    """Degree multisets of the resolution of an almost symmetric 4-generated H.

    Checks that, after setting aside the ``s`` surplus generators, the first
    syzygy degrees pair up under a -> F + N - a into {f + n_i + n_j}, that
    the matching second syzygy degrees are {f + N - n_i}, and that every
    surplus degree a satisfies F + N - a in the remaining b-degrees.
    """
    name = "resolution-degree-multisets"
    if H.e != 4 or not H.is_almost_symmetric:
        raise PrecondFailed(f"{name} needs e = 4 and H almost symmetric")
    rep = Report(name)
    table = graded_betti(H)
    t = H.type
    F, N = H.frobenius, H.N
    gens = H.generators
    m0 = 3 * (t - 1)
    s = table.mu - m0
    rep.details.update(m0=m0, surplus=s, mu=table.mu, F_plus_N=F + N,
                       a_degrees=list(table.a_degrees), b_degrees=list(table.b_degrees))
    rep.require(s >= 0, f"mu = {table.mu} < 3(t-1) = {m0}")
    pairs = [f + gens[i] + gens[j] for f in H.pf_prime for i, j in combinations(range(4), 2)]
    singles = [f + N - n for f in H.pf_prime for n in gens]
    b_surplus = _multiset_minus(table.b_degrees, singles)
    if not rep.require(b_surplus is not None,
                       f"{{f+N-n_i}} = {sorted(singles)} is not inside b-degrees"):
        return rep
    rep.require(len(b_surplus) == s, f"{len(b_surplus)} surplus b-degrees but s = {s}")
    a_surplus = [F + N - b for b in b_surplus]
    a_main = _multiset_minus(table.a_degrees, a_surplus)
    if not rep.require(a_main is not None,
                       f"F+N - surplus b-degrees {sorted(a_surplus)} not among a-degrees"):
        return rep
    doubled = sorted(a_main + [F + N - a for a in a_main])
    rep.require(doubled == sorted(pairs),
                f"a-degrees doubled {doubled} != {{f+n_i+n_j}} {sorted(pairs)}")
    rep.details["surplus_pairs"] = [[a, b] for a, b in zip(a_surplus, b_surplus)]
    rep.notes.append("surplus pairing uses F(H) + N")
    return rep


def betti_summary(H) -> Report:
    """Sanity identities of the Betti table (beta_0, beta_{e-1}, Euler sum)."""
    rep = Report("betti-identities")
    if H.e < 2:
        return not_applicable(rep.name, "e < 2")
    table = graded_betti(H)
    b = table.betti
    rep.require(b[0] == 1 and table.entries.get((0, 0)) == 1, f"beta_0 = {b[0]}")
    rep.require(b[-1] == H.type, f"beta_{H.e - 1} = {b[-1]} != t(H) = {H.type}")
    rep.require(sorted(table.last_degrees) == sorted(f + H.N for f in H.pf),
                f"last shifts {table.last_degrees} != PF + N")
    alt = sum((-1) ** i * x for i, x in enumerate(b))
    rep.require(alt == 0, f"alternating sum of Betti numbers = {alt}")
    rep.require(table.mu == len(minimal_generators(H)),
                f"mu from homology {table.mu} != fibre count {len(minimal_generators(H))}")
    rep.details["betti"] = list(b)
    return rep
