"""The ten acceptance criteria.

Each test records a one-line verdict in RESULTS; conftest prints them at the
end of the run.  ``python3 tests/test_acceptance.py`` runs the same suite.
"""

import math
import random
from functools import reduce

import pytest

import oracles
from numsgp import NumericalSemigroup, semigroup
from numsgp.factorization import alphas
from numsgp.lemmas import run_all
from numsgp.rf import generates_check, rf_matrices, rf_matrix_count, rf_relations
from numsgp.shifted import as_type3_shifts, construct_family, family_params, scan, verify_family
from numsgp.structure import (
    komeda_form,
    verify_rf_generation,
    verify_seven_gen,
    verify_type2_structure,
)
from numsgp.binomial import binomial
from numsgp.toric import graded_betti, is_minimal_binomial, minimal_generators, verify_comparison

RESULTS = {}

TITLES = {
    1: "PF and classification fixtures",
    2: "alpha fixtures",
    3: "RF-matrix fixtures",
    4: "RF-relations of <7,12,13,22>",
    5: "toric ideal and Betti fixtures",
    6: "pseudo-symmetric corpus (n4 <= 60)",
    7: "type bound over almost symmetric corpus (n4 <= 60)",
    8: "shifted-family periodicity",
    9: "H(a,b;d) construction and verification",
    10: "randomized property suites",
}


class Tally:
    """Collects violations for one criterion and records the verdict."""

    def __init__(self, number):
        self.number = number
        self.violations = []
        self.info = []

    def check(self, cond, message):
        if not cond:
            self.violations.append(message)
        return cond

    def finish(self):
        ok = not self.violations
        extra = "; ".join(self.info)
        line = (f"criterion {self.number:2d} {'PASS' if ok else 'FAIL'}  {TITLES[self.number]}"
                + (f"  ({extra})" if extra else ""))
        if not ok:
            line += f"  first violation: {self.violations[0]}"
        RESULTS[self.number] = line
        print(line)
        assert ok, "\n".join(self.violations[:20])


# -- 1 ----------------------------------------------------------------------------------

PF_FIXTURES = [
    ((7, 12, 13, 22), [15, 30], None),
    ((22, 28, 47, 53), [25, 258, 283], "almost-symmetric"),
    ((33, 56, 61, 84), [28, 835, 863], "almost-symmetric"),
    ((9, 22, 46, 57), [35, 70, 105], None),
    ((5, 6, 8, 9), [3, 4, 7], None),
    ((18, 21, 23, 26), [31, 66, 97], None),
    ((10, 11, 15, 16, 28), [5, 17, 29, 34], "almost-symmetric"),
]


def test_criterion_01_pf_fixtures():
    t = Tally(1)
    for gens, pf, cls in PF_FIXTURES:
        H = semigroup(*gens)
        t.check(list(H.pf) == pf, f"{gens}: PF {list(H.pf)} != {pf}")
        t.check(oracles.classify(gens)["pf"] == pf, f"{gens}: sieve disagrees")
        if cls:
            t.check(H.classification == cls and H.type == len(pf),
                    f"{gens}: {H.classification} type {H.type}")
    t.finish()


# -- 2 ----------------------------------------------------------------------------------

def test_criterion_02_alphas():
    t = Tally(2)
    for gens, alpha in [((22, 28, 47, 53), (14, 11, 2, 2)), ((33, 56, 61, 84), (28, 3, 2, 2)),
                        ((9, 22, 46, 57), (10, 3, 3, 2))]:
        got = alphas(semigroup(*gens)).alpha
        t.check(got == alpha, f"{gens}: {got} != {alpha}")
        t.check(tuple(oracles.alpha(gens, i) for i in range(4)) == alpha, f"{gens}: oracle")
    t.finish()


# -- 3 ----------------------------------------------------------------------------------

RF_FIXTURES = [
    ((7, 12, 13, 22), 15, [[-1, 0, 0, 1], [2, -1, 1, 0], [4, 0, -1, 0], [0, 2, 1, -1]]),
    ((5, 6, 8, 9), 3, [[-1, 0, 1, 0], [0, -1, 0, 1], [1, 1, -1, 0], [0, 2, 0, -1]]),
    ((5, 6, 8, 9), 4, [[-1, 0, 0, 1], [2, -1, 0, 0], [0, 2, -1, 0], [1, 0, 1, -1]]),
    ((9, 22, 46, 57), 35, [[-1, 2, 0, 0], [0, -1, 0, 1], [9, 0, -1, 0], [0, 0, 2, -1]]),
    ((9, 22, 46, 57), 70, [[-1, 1, 0, 1], [0, -1, 2, 0], [8, 2, -1, 0], [9, 0, 1, -1]]),
    ((33, 56, 61, 84), 28, [[-1, 0, 1, 0], [0, -1, 0, 1], [1, 1, -1, 0], [0, 2, 0, -1]]),
]


def test_criterion_03_rf_fixtures():
    t = Tally(3)
    for gens, f, rows in RF_FIXTURES:
        mats = [M.as_lists() for M in rf_matrices(semigroup(*gens), f)]
        t.check(rows in mats, f"RF({f}) of {gens} not among {len(mats)} enumerated")
    t.finish()


# -- 4 ----------------------------------------------------------------------------------

def test_criterion_04_rf_relations():
    t = Tally(4)
    H = semigroup(7, 12, 13, 22)
    rels = rf_relations(H, 15)
    degs = sorted(b.degree for b in rels)
    t.check(degs == [26, 34, 35, 36, 44, 50], f"degrees {degs}")
    minimal = [b for b in rels if is_minimal_binomial(H, b)]
    t.check(len(minimal) == 5, f"{len(minimal)} minimal")
    t.check(len(minimal_generators(H)) == 5 and generates_check(H, minimal),
            "minimal RF-relations do not form a minimal generating set")
    t.finish()


# -- 5 ----------------------------------------------------------------------------------

PRINTED_5689 = [((3, 0, 0, 0), (0, 1, 0, 1)), ((0, 3, 0, 0), (2, 0, 1, 0)),
                ((0, 0, 2, 0), (2, 1, 0, 0)), ((0, 0, 0, 2), (0, 3, 0, 0)),
                ((1, 2, 0, 0), (0, 0, 1, 1)), ((1, 0, 0, 1), (0, 1, 1, 0))]


def test_criterion_05_toric_betti():
    t = Tally(5)
    H = semigroup(5, 6, 8, 9)
    ours = minimal_generators(H)
    printed = [binomial(H.generators, u, v) for u, v in PRINTED_5689]
    t.check(len(ours) == 6, f"mu(<5,6,8,9>) = {len(ours)}")
    t.check(generates_check(H, printed), "printed list does not generate")
    # mutual membership: each list generates the ideal of the other
    t.check(generates_check(H, ours) and generates_check(H, printed), "mutual membership")
    K = semigroup(18, 21, 23, 26)
    t.check(len(minimal_generators(K)) == 7, "mu(<18,21,23,26>) != 7")

    P = semigroup(5, 6, 7, 9)
    bp = graded_betti(P)
    t.check(sorted(bp.a_degrees) == [12, 14, 15, 16, 18], f"a-degrees {bp.a_degrees}")
    t.check(sorted(bp.b_degrees) == [21, 22, 23, 24, 25, 26], f"b-degrees {bp.b_degrees}")
    rp = verify_comparison(P)
    t.check(rp.passed, str(rp))
    t.check(sorted(map(tuple, rp.details["surplus_pairs"])) == [(12, 23), (14, 21)],
            f"pairs {rp.details['surplus_pairs']}")
    t.check(P.frobenius + P.N == 35, "F + N != 35")

    bk = graded_betti(K)
    t.check(sorted(bk.a_degrees) == [44, 72, 75, 78, 105, 110, 115], f"a {bk.a_degrees}")
    t.check(sorted(bk.b_degrees) == [93, 96, 98, 101, 128, 131, 133, 136, 141],
            f"b {bk.b_degrees}")
    rk = verify_comparison(K)
    t.check(rk.passed and rk.details["surplus_pairs"] == [[44, 141]], str(rk))
    t.check(K.frobenius + K.N == 185, "F + N != 185")
    t.finish()


# -- 6 and 7: corpus ------------------------------------------------------------------------

def test_criterion_06_komeda_corpus(almost_symmetric4):
    t = Tally(6)
    members = [g for g, info in almost_symmetric4 if info["classification"] == "pseudo-symmetric"]
    t.check(len(members) > 0, "empty corpus")
    for gens in members:
        H = NumericalSemigroup.new(gens)
        if not t.check(H.classification == "pseudo-symmetric", f"{gens}: library says "
                       f"{H.classification}"):
            continue
        half = H.frobenius // 2
        t.check(rf_matrix_count(H, half) == 1, f"{gens}: RF(F/2) not unique")
        form = komeda_form(H)
        a1, a2, a3, a4 = form.alphas
        t.check(form.generators[1] == a1 * a4 * (a3 - 1) + 1, f"{gens}: n2 formula")
        rep = verify_type2_structure(H)
        t.check(rep.passed and rep.details["mu"] == 5, f"{gens}: {rep}")
    t.info.append(f"{len(members)} pseudo-symmetric semigroups")
    t.finish()


def test_criterion_07_type_bound_corpus(almost_symmetric4):
    t = Tally(7)
    counts = {1: 0, 2: 0, 3: 0}
    for gens, info in almost_symmetric4:
        typ, F = info["type"], info["frobenius"]
        if not t.check(typ <= 3, f"{gens}: type {typ}"):
            continue
        counts[typ] += 1
        if F % 2 == 0:
            t.check(typ == 2, f"{gens}: F = {F} even, type {typ}")
        if typ == 1:
            continue
        H = NumericalSemigroup.new(gens)
        t.check(H.type == typ and list(H.pf) == info["pf"], f"{gens}: library disagrees")
        if typ == 3:
            rep = verify_seven_gen(H)
            t.check(rep.passed, f"{gens}: {rep}")
        rep = verify_rf_generation(H)
        t.check(rep.passed, f"{gens}: {rep}")
    t.info.append(f"types 1/2/3: {counts[1]}/{counts[2]}/{counts[3]}")
    t.finish()


# -- 8 ----------------------------------------------------------------------------------------

def test_criterion_08_periodicity():
    t = Tally(8)
    for gens, period in [((10, 11, 13, 14), 4), ((10, 13, 15, 18), 8),
                         ((14, 19, 21, 26), 12), ((18, 25, 27, 34), 16)]:
        m_max = 5 * period
        hits = as_type3_shifts(scan(semigroup(*gens), m_max))
        t.check(hits == list(range(0, m_max + 1, period)), f"{gens}: {hits}")
    t.finish()


# -- 9 ----------------------------------------------------------------------------------------

def test_criterion_09_family():
    t = Tally(9)
    for gens in [(10, 11, 13, 14), (10, 13, 15, 18), (14, 19, 21, 26), (18, 25, 27, 34)]:
        p = family_params(semigroup(*gens))
        t.check(construct_family(p).generators == gens, f"{gens}: construction")
        rep = verify_family(p, 5)
        t.check(rep.passed and None not in rep.details["members"], f"{gens}: {rep}")
    t.finish()


# -- 10 ---------------------------------------------------------------------------------------

FUZZ_SEED = 20240611
FUZZ_COUNT = 1000
FUZZ_CHECKS = ["apery-cardinality", "apery-dichotomy", "rf-pairwise-zero", "rf-positive-columns",
               "single-power-rows", "minimal-degree-bound", "betti-identities"]


def fuzz_corpus(rng, count, top=60):
    out = []
    while len(out) < count:
        gens = sorted(rng.sample(range(4, top + 1), 4))
        if reduce(math.gcd, gens) != 1:
            continue
        if NumericalSemigroup.new(gens).e == 4:
            out.append(tuple(gens))
    return out


def test_criterion_10_properties(almost_symmetric4):
    t = Tally(10)
    rng = random.Random(FUZZ_SEED)
    sample = fuzz_corpus(rng, FUZZ_COUNT)
    # almost symmetric members are rare among uniform draws; add a seeded
    # sample from the corpus so the checks restricted to them are exercised
    extra = [g for g, info in almost_symmetric4 if info["type"] > 1]
    sample += rng.sample(extra, 300)
    applied = dict.fromkeys(FUZZ_CHECKS, 0)
    for gens in sample:
        H = NumericalSemigroup.new(gens)
        info = oracles.classify(gens)
        t.check(list(H.pf) == info["pf"], f"{gens}: PF")
        paired = oracles.pf_pairing(info["pf"])
        t.check(paired == (2 * info["genus"] == info["frobenius"] + info["type"]),
                f"{gens}: pairing vs 2g = F + t")
        t.check(paired == H.is_almost_symmetric, f"{gens}: classification")
        for rep in run_all(H, FUZZ_CHECKS):
            t.check(rep.verdict in ("PASS", "N/A"), f"{gens}: {rep}")
            applied[rep.name] += rep.verdict == "PASS"
    t.info.append(f"{len(sample)} semigroups; "
                  + ", ".join(f"{k} applied {v}x" for k, v in applied.items()))
    t.finish()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
