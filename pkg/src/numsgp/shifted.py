"""Shifted families H + m = <n1 + m, ..., ne + m> and the H(a, b; d) family.

"Sufficiently large m" is never assumed: scans report where behaviour
settles inside the scanned window and say INCONCLUSIVE when it does not.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd

from .binomial import Binomial
from .errors import GcdNotOne, InvalidParams, PrecondFailed
from .report import INCONCLUSIVE, INFO, Report
from .rf import contains_matrix, generates_check
from .semigroup import ALMOST_SYMMETRIC, NumericalSemigroup
from .toric import minimal_generators


@dataclass(frozen=True)
class ShiftInvariants:
    s: int
    d: int
    s_prime: int

    @classmethod
    def of(cls, gens):
        n1 = gens[0]
        s = gens[-1] - n1
        d = reduce(gcd, (n - n1 for n in gens[1:]), 0)
        return cls(s, d, s // d if d else 0)


def invariants(H) -> ShiftInvariants:
    return ShiftInvariants.of(H.generators)


def shift(H, m: int) -> NumericalSemigroup:
    """H + m; ``redundant`` on the result lists generators that stopped being minimal."""
    if m < 0:
        raise PrecondFailed(f"shift must be non-negative, got {m}")
    gens = [n + m for n in H.generators]
    g = reduce(gcd, gens)
    if g != 1:
        raise GcdNotOne(gens, g)
    return NumericalSemigroup.new(gens)


@dataclass
class ShiftScanRecord:
    m: int
    valid: bool
    minimal: bool = False
    generators: list = field(default_factory=list)
    classification: str | None = None
    type: int | None = None
    frobenius: int | None = None
    pf: list = field(default_factory=list)
    alphas: list = field(default_factory=list)
    f: int | None = None
    f_prime: int | None = None

    @property
    def as_type3(self):
        return self.classification == ALMOST_SYMMETRIC and self.type == 3

    @property
    def as_type2(self):
        return self.classification == "pseudo-symmetric"

    def as_dict(self):
        return {
            "m": self.m, "valid": self.valid, "minimal": self.minimal,
            "generators": self.generators, "classification": self.classification,
            "type": self.type, "frobenius": self.frobenius, "pf": self.pf,
            "alphas": self.alphas, "f": self.f, "f_prime": self.f_prime,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(**{k: v for k, v in d.items()})


def scan_record(gens, m, with_alphas=True) -> ShiftScanRecord:
    shifted = [n + m for n in gens]
    if reduce(gcd, shifted) != 1:
        return ShiftScanRecord(m, False, generators=shifted)
    H = NumericalSemigroup.new(shifted)
    rec = ShiftScanRecord(
        m, True, minimal=not H.redundant, generators=list(H.generators),
        classification=H.classification, type=H.type, frobenius=H.frobenius, pf=list(H.pf),
    )
    if with_alphas and rec.minimal and H.e >= 2:
        rec.alphas = list(H.alphas.alpha)
    if H.e == 4 and rec.minimal and rec.as_type3:
        rec.f, rec.f_prime = H.pf_prime
    return rec


def _scan_chunk(args):
    gens, ms, with_alphas = args
    return [scan_record(gens, m, with_alphas) for m in ms]


def default_m_max(H):
    return min(20 * H.generators[-1] ** 2, 10**6)


def worker_count():
    try:
        return max(1, int(os.environ.get("NUMSGP_THREADS", "1")))
    except ValueError:
        return 1


def scan(H, m_max=None, m_from=0, workers=None, with_alphas=True):
    """One record per m in [m_from, m_max], invalid m included and flagged."""
    if m_max is None:
        m_max = default_m_max(H)
    if m_max < m_from or m_from < 0:
        raise PrecondFailed(f"bad scan range [{m_from}, {m_max}]")
    ms = list(range(m_from, m_max + 1))
    workers = workers or worker_count()
    if workers == 1 or len(ms) < 64:
        return _scan_chunk((H.generators, ms, with_alphas))
    size = -(-len(ms) // (4 * workers))
    chunks = [(H.generators, ms[i:i + size], with_alphas) for i in range(0, len(ms), size)]
    with ProcessPoolExecutor(workers) as pool:
        return [r for part in pool.map(_scan_chunk, chunks) for r in part]


def as_type3_shifts(records):
    return [r.m for r in records if r.valid and r.minimal and len(r.generators) == 4 and r.as_type3]


def type2_window(H, m_max=None) -> Report:
    """Shifts that are almost symmetric of type 2, with an empirical threshold.

    PASS when the last such shift lies in the first half of the window, so the
    second half is free of them; INCONCLUSIVE otherwise.
    """
    if H.e != 4:
        raise PrecondFailed("type2_window needs e = 4")
    if m_max is None:
        m_max = default_m_max(H)
    recs = scan(H, m_max, with_alphas=False)
    hits = [r.m for r in recs if r.valid and r.minimal and len(r.generators) == 4 and r.as_type2]
    threshold = hits[-1] + 1 if hits else 0
    rep = Report("type2-window", details={"m_max": m_max, "type2_shifts": hits,
                                          "threshold": threshold})
    if threshold > m_max // 2:
        rep.verdict = INCONCLUSIVE
        rep.notes.append(f"type-2 shift at m = {hits[-1]} in the second half of the window")
    return rep


def alpha_growth(H, m_lo, m_hi, step=1) -> Report:
    """Growth of alpha_i(m) over valid minimal shifts m in [m_lo, m_hi].

    Bounds are compared after scaling by s' so everything stays integral:
    alpha_1(m) s' >= m + n1 and (alpha_e(m) + 1) s' >= m + n1.  Deviations are
    reported as numerators over s'.
    """
    if H.e < 3:
        raise PrecondFailed("alpha_growth needs e >= 3")
    inv = invariants(H)
    n1 = H.generators[0]
    rep = Report("alpha-growth", details={"s": inv.s, "d": inv.d, "s_prime": inv.s_prime,
                                          "range": [m_lo, m_hi, step]})
    rows = []
    for m in range(m_lo, m_hi + 1, step):
        rec = scan_record(H.generators, m)
        if not (rec.valid and rec.minimal and len(rec.generators) == H.e):
            continue
        rows.append((m, rec))
    if not rows:
        rep.verdict = INCONCLUSIVE
        rep.notes.append("no valid shift in range")
        return rep
    middle = [tuple(r.alphas[1:-1]) for _, r in rows]
    stable_from = rows[-1][0]
    for (m, _), mid in zip(reversed(rows), reversed(middle)):
        if mid != middle[-1]:
            break
        stable_from = m
    rep.details.update(middle_alphas=list(middle[-1]), stable_from=stable_from,
                       shifts=len(rows))
    if stable_from != rows[0][0]:
        rep.verdict = INCONCLUSIVE
        rep.notes.append(f"alpha_2..alpha_(e-1) only constant from m = {stable_from}")
    dev1, deve = [], []
    for m, r in rows:
        lhs = m + n1
        a1, ae = r.alphas[0], r.alphas[-1]
        rep.require(a1 * inv.s_prime >= lhs, f"m={m}: alpha_1 = {a1} < (m+n1)/s'")
        rep.require((ae + 1) * inv.s_prime >= lhs, f"m={m}: alpha_e = {ae} < (m+n1)/s' - 1")
        dev1.append(a1 * inv.s_prime - lhs)
        deve.append(ae * inv.s_prime - lhs)
        if len(r.generators) == 4 and r.as_type3:
            rep.require(a1 - ae == inv.d, f"m={m}: alpha_1 - alpha_4 = {a1 - ae} != d")
    rep.details.update(max_dev_alpha1_num=max(dev1), max_dev_alphae_num=max(deve),
                       denominator=inv.s_prime)
    return rep


def frobenius_growth(H, records) -> Report:
    """F(H + m) s >= m^2, reporting the smallest m from which it holds throughout."""
    inv = invariants(H)
    rows = [(r.m, r.frobenius) for r in records if r.valid]
    bad = [m for m, F in rows if F * inv.s < m * m]
    start = (bad[-1] + 1) if bad else (rows[0][0] if rows else 0)
    rep = Report("frobenius-growth", details={"holds_from": start, "s": inv.s})
    if rows and start > rows[-1][0] // 2:
        rep.verdict = INCONCLUSIVE
        rep.notes.append("bound does not settle in the first half of the window")
    return rep


def homogeneous_stable(H, ms) -> Report:
    """Minimal binomials of I_H with equal total degree stay in I_{H+m}."""
    rep = Report("homogeneous-binomials-shift")
    homog = [b for b in minimal_generators(H) if sum(b.plus) == sum(b.minus)]
    rep.details["homogeneous"] = [str(b) for b in homog]
    for m in ms:
        gens = [n + m for n in H.generators]
        for b in homog:
            lhs = sum(c * n for c, n in zip(b.plus, gens))
            rhs = sum(c * n for c, n in zip(b.minus, gens))
            rep.require(lhs == rhs, f"{b} fails for m = {m}")
    return rep


# -- the H(a, b; d) family ---------------------------------------------------------


@dataclass(frozen=True)
class FamilyParams:
    a: int
    b: int
    d: int

    def validate(self):
        a, b, d = self.a, self.b, self.d
        problems = []
        if a < 3 or a % 2 == 0:
            problems.append(f"a = {a} must be odd and >= 3")
        if d < 1 or d % 2 == 0:
            problems.append(f"d = {d} must be odd and positive")
        if gcd(a, d) != 1:
            problems.append(f"gcd(a, d) = {gcd(a, d)}")
        if b < d + 2:
            problems.append(f"b = {b} < d + 2")
        if problems:
            raise InvalidParams("; ".join(problems))
        return self

    def next(self, k=1):
        return FamilyParams(self.a, self.b + k, self.d)


def family_generators(p: FamilyParams):
    a, b, d = p.a, p.b, p.d
    n1 = 2 * a + (b - d - 2) * (2 * a - 2)
    n4 = 2 * a + (b - 2) * (2 * a - 2)
    assert n4 == n1 + (2 * a - 2) * d
    return (n1, n1 + (a - 2) * d, n1 + a * d, n4)


def construct_family(p: FamilyParams) -> NumericalSemigroup:
    p.validate()
    gens = family_generators(p)
    g = gcd(gens[0], p.d)
    if g != 1:
        raise InvalidParams(f"H({p.a},{p.b};{p.d}) = {gens} has gcd {g}")
    H = NumericalSemigroup.new(gens)
    if H.generators != gens:
        raise InvalidParams(f"{gens} is not a minimal generating set")
    return H


def family_params(H) -> FamilyParams:
    """Recover (a, b, d) from generators of the H(a, b; d) shape."""
    if H.e != 4:
        raise InvalidParams("family members have four generators")
    n1, n2, n3, n4 = H.generators
    d = invariants(H).d
    a, r = divmod(n3 - n1, d)
    if r or a < 3:
        raise InvalidParams(f"{H} is not of the form H(a, b; d)")
    q, r = divmod(n1 - 2 * a, 2 * a - 2)
    p = FamilyParams(a, q + d + 2, d)
    if r or family_generators(p) != H.generators:
        raise InvalidParams(f"{H} is not of the form H(a, b; d)")
    return p.validate()


def family_rf(p: FamilyParams):
    """Expected RF(f) and RF(f') rows together with f and f'."""
    a, b, d = p.a, p.b, p.d
    n1, n2, n3, _ = family_generators(p)
    rf_f = [(-1, a - 1, 0, 0), (1, -1, a - 2, 0), (0, a - 2, -1, 1), (0, 0, a - 1, -1)]
    rf_g = [(-1, 0, 1, b - d - 2), (0, -1, 0, b - d - 1), (b - 1, 0, -1, 0), (b - 2, 1, 0, -1)]
    return ((a - 1) * n2 - n1, rf_f), ((b - 1) * n1 - n3, rf_g)


def family_binomials(p: FamilyParams):
    """The seven generators in x, y, z, w order, as exponent pairs."""
    a, b, d = p.a, p.b, p.d
    return [
        ((1, 0, 0, 1), (0, 1, 1, 0)),
        ((0, a, 0, 0), (2, 0, a - 2, 0)),
        ((0, 0, a, 0), (0, a - 2, 0, 2)),
        ((1, 0, a - 1, 0), (0, a - 1, 0, 1)),
        ((b, 0, 0, 0), (0, 0, 2, b - d - 2)),
        ((0, 0, 0, b - d), (b - 2, 2, 0, 0)),
        ((b - 1, 1, 0, 0), (0, 0, 1, b - d - 1)),
    ]


def verify_family_member(p: FamilyParams, rep: Report):
    H = construct_family(p)
    tag = f"H({p.a},{p.b};{p.d}) = <{', '.join(map(str, H.generators))}>"
    ok = rep.require(H.classification == ALMOST_SYMMETRIC and H.type == 3,
                     f"{tag}: {H.classification}, type {H.type}")
    (f, rf_f), (g, rf_g) = family_rf(p)
    rep.require(set(H.pf) == {f, g, H.frobenius} and f + g == H.frobenius,
                f"{tag}: PF = {list(H.pf)}, expected f = {f}, f' = {g}")
    if ok and f in H.pf and g in H.pf:
        rep.require(contains_matrix(H, f, rf_f), f"{tag}: RF({f}) shape fails")
        rep.require(contains_matrix(H, g, rf_g), f"{tag}: RF({g}) shape fails")
    try:
        bins = [Binomial.from_pair(u, v, H.generators) for u, v in family_binomials(p)]
    except PrecondFailed as exc:
        rep.fail(f"{tag}: {exc}")
        bins = []
    mu = len(minimal_generators(H))
    rep.require(len(bins) == 7 and generates_check(H, bins), f"{tag}: seven binomials do not generate")
    alpha = H.alphas.alpha
    rep.require(alpha[0] == p.b and alpha[1] == p.a, f"{tag}: alphas {alpha}")
    if p.b > p.d + 2:
        rep.require(mu == 7, f"{tag}: mu = {mu}")
        rep.require(alpha[2] == p.a and alpha[3] == p.b - p.d, f"{tag}: alphas {alpha}")
    else:
        # b = d + 2 gives b n1 = 2 n3, so x^b - z^2 drops alpha_3 to 2 and
        # one of the seven binomials becomes redundant
        rep.require(mu == 6 and alpha[2] == 2, f"{tag}: mu = {mu}, alphas {alpha}")
        rep.notes.append(f"{tag}: b = d + 2, seven binomials generate but mu = 6")
    n1, n2, n3, n4 = H.generators
    rep.require(n1 + n4 == n2 + n3, f"{tag}: n1 + n4 != n2 + n3")
    return H


def verify_family(p: FamilyParams, steps: int = 5) -> Report:
    p.validate()
    rep = Report("family", details={"a": p.a, "b": p.b, "d": p.d, "steps": steps, "members": []})
    prev = None
    for k in range(steps + 1):
        q = p.next(k)
        if gcd(family_generators(q)[0], q.d) != 1:
            rep.notes.append(f"H({q.a},{q.b};{q.d}) skipped: generators share a factor")
            rep.details["members"].append(None)
            prev = None
            continue
        H = verify_family_member(q, rep)
        rep.details["members"].append(list(H.generators))
        if prev is not None:
            shifted = shift(prev, 2 * p.a - 2)
            rep.require(shifted.generators == H.generators,
                        f"H({p.a},{q.b};{p.d}) != H({p.a},{q.b - 1};{p.d}) + {2 * p.a - 2}")
        prev = H
    return rep


def family_shift_check(H, records) -> Report:
    """At every almost symmetric type-3 shift, with a = alpha_2 and
    b = alpha_1: a is odd, the generators are H(a, b; d) and the RF shapes
    hold.  Shifts where alpha_3 != alpha_2 are listed, not failed."""
    rep = Report("family-shift-shape")
    d = invariants(H).d
    seen = 0
    late = []
    for r in records:
        if not (r.valid and r.minimal and len(r.generators) == 4 and r.as_type3):
            continue
        seen += 1
        a1, a2, a3, a4 = r.alphas
        p = FamilyParams(a2, a1, d)
        if a3 != a2:
            late.append(r.m)
        if not rep.require(a2 % 2 == 1 and a1 >= d + 2, f"m={r.m}: alphas {r.alphas}, d = {d}"):
            continue
        rep.require(tuple(r.generators) == family_generators(p),
                    f"m={r.m}: {r.generators} != H{(p.a, p.b, p.d)}")
        Hm = NumericalSemigroup.new(r.generators)
        (f, rf_f), (g, rf_g) = family_rf(p)
        rep.require((r.f, r.f_prime) == tuple(sorted((f, g))), f"m={r.m}: PF' {r.f, r.f_prime}")
        rep.require(contains_matrix(Hm, f, rf_f) and contains_matrix(Hm, g, rf_g),
                    f"m={r.m}: RF shapes fail")
    rep.details.update(as_type3_shifts=seen, alpha3_differs_at=late)
    return rep


# d > 1 examples quoted in the literature as almost symmetric of type 3
REFERENCE_EXAMPLES = ((20, 23, 44, 47), (19, 24, 49, 54))


def odd_generator_search(bound: int, workers=None) -> Report:
    """All-odd 4-generated almost symmetric type-3 semigroups with n4 <= bound.

    Also lists every hit with d > 1.
    """
    rep = Report("odd-generator-search", verdict=INFO, details={"bound": bound})
    all_odd, wide = [], []
    for H in almost_symmetric_4gen(bound, types=(3,), workers=workers):
        n = H.generators
        if all(x % 2 for x in n):
            all_odd.append(list(n))
        d = invariants(H).d
        if d > 1:
            wide.append({"generators": list(n), "d": d})
    refs = []
    for g in REFERENCE_EXAMPLES:
        if g[-1] <= bound:
            H = NumericalSemigroup.new(g)
            refs.append({"generators": list(g), "d": invariants(H).d, "type": H.type,
                         "classification": H.classification,
                         "almost_symmetric_type3": H.classification == ALMOST_SYMMETRIC
                         and H.type == 3})
    rep.details.update(all_odd=all_odd, d_gt_1=wide, count_d_gt_1=len(wide), reference=refs)
    if all_odd:
        rep.notes.append(f"{len(all_odd)} all-odd almost symmetric type-3 semigroups, "
                         f"smallest {all_odd[0]}")
    return rep


def _classify_chunk(args):
    tuples, types = args
    out = []
    for g in tuples:
        H = NumericalSemigroup.new(g)
        if H.e == 4 and not H.redundant and H.is_almost_symmetric and H.type in types:
            out.append(g)
    return out


def almost_symmetric_4gen(bound, types=(2, 3), workers=None):
    """Minimal 4-generated almost symmetric H of the given types, n4 <= bound."""
    cands = [g for g in combinations(range(3, bound + 1), 4) if reduce(gcd, g) == 1]
    workers = workers or worker_count()
    if workers == 1:
        hits = _classify_chunk((cands, types))
    else:
        size = -(-len(cands) // (4 * workers))
        chunks = [(cands[i:i + size], types) for i in range(0, len(cands), size)]
        with ProcessPoolExecutor(workers) as pool:
            hits = [g for part in pool.map(_classify_chunk, chunks) for g in part]
    return [NumericalSemigroup.new(g) for g in hits]
