"""Property checks over a single semigroup.

Each check returns a :class:`Report`.  Checks whose hypotheses do not hold
for the given H return verdict N/A rather than PASS, so corpus summaries can
tell "verified" from "vacuous".
"""

from __future__ import annotations

from itertools import combinations
from math import prod

from .errors import EnumerationOverflow
from .factorization import factorizations
from .report import INCONCLUSIVE, Report, not_applicable
from .rf import (
    relations_of, rf_matrices, special_rows, verify_pairwise_zero, verify_positive_columns,
)
from .semigroup import (
    ALMOST_SYMMETRIC, NONE, PSEUDO_SYMMETRIC, SYMMETRIC, NumericalSemigroup,
)
from .toric import betti_summary, minimal_generators

CHECKS = {}


def check(name):
    def wrap(fn):
        CHECKS[name] = fn
        fn.check_name = name
        return fn
    return wrap


def _as4(H):
    return H.e == 4 and H.is_almost_symmetric and H.type >= 2


def _skip(name, H, need_as=False, need_e4=False):
    if H.generators[0] == 1:
        return not_applicable(name, "H is the whole of N")
    if need_e4 and H.e != 4:
        return not_applicable(name, f"e = {H.e}, not 4")
    if need_as and not H.is_almost_symmetric:
        return not_applicable(name, "H is not almost symmetric")
    return None


def _support(c):
    return [i for i, x in enumerate(c) if x]


def _capped(H, h, cap=2):
    try:
        return factorizations(H, h, cap=cap)
    except EnumerationOverflow:
        return None


def _count2(H, h):
    """Number of factorizations of h, truncated at 2."""
    fs = _capped(H, h)
    return 2 if fs is None else len(fs)


# -- Apéry sets and the symmetry classes ----------------------------------------


@check("apery-cardinality")
def apery_cardinality(H, bases=None):
    """|Ap(a, H)| = a, one element per residue, largest = a + F(H)."""
    name = "apery-cardinality"
    if H.generators[0] == 1:
        return not_applicable(name, "H is the whole of N")
    rep = Report(name)
    if bases is None:
        bases = sorted(set(H.generators) | {H.frobenius + 1, H.generators[0] + H.generators[-1]})
    for a in bases:
        ap = H.apery(a)
        rep.require(len(ap) == a, f"|Ap({a})| = {len(ap)}")
        rep.require(len({w % a for w in ap}) == a, f"Ap({a}) misses a residue class")
        rep.require(max(ap) == a + H.frobenius, f"max Ap({a}) = {max(ap)} != {a} + F")
        rep.require(0 in ap, f"0 not in Ap({a})")
    rep.details["bases"] = list(bases)
    return rep


@check("apery-divisor-closed")
def apery_divisor_closed(H):
    """h, h' in H and h + h' in Ap(a, H) force h, h' in Ap(a, H)."""
    name = "apery-divisor-closed"
    if H.generators[0] == 1:
        return not_applicable(name, "H is the whole of N")
    rep = Report(name)
    for a in H.generators:
        ap = H.apery(a)
        for w in ap:
            for h in range(w + 1):
                if H.contains(h) and H.contains(w - h) and h not in ap:
                    rep.fail(f"{h} + {w - h} = {w} in Ap({a}) but {h} is not")
    return rep


@check("apery-dichotomy")
def apery_dichotomy(H):
    """Almost symmetric H: (a + F) - h in Ap(a, H) or h - a in PF'(H)."""
    name = "apery-dichotomy"
    if (s := _skip(name, H, need_as=True)):
        return s
    rep = Report(name)
    F = H.frobenius
    pf, pfp = set(H.pf), set(H.pf_prime)
    for a in H.generators:
        ap = H.apery(a)
        for h in ap:
            if (a + F) - h in ap:
                continue
            if rep.require(h - a in pfp, f"a={a}, h={h}: neither branch holds"):
                rep.require((a + F) - h in pf, f"a={a}, h={h}: (a+F)-h not in PF")
    return rep


@check("symmetry-classes")
def symmetry_classes(H):
    """Type, genus and Frobenius number agree on the symmetry class.

    Symmetric iff t = 1 iff 2g = F + 1; almost symmetric iff 2g = F + t iff
    f_i + f_{t-i} = F for the sorted PF(H); pseudo-symmetric iff
    PF = {F/2, F}; always 2g >= F + t.
    """
    name = "symmetry-classes"
    if H.generators[0] == 1:
        return not_applicable(name, "H is the whole of N")
    rep = Report(name)
    F, t = H.frobenius, H.type
    g = len(H.gaps())
    pf = sorted(H.pf)
    rep.require(g == H.genus, f"genus {H.genus} != gap count {g}")
    rep.require(2 * g >= F + t, f"2g = {2 * g} < F + t = {F + t}")
    rep.require(pf[-1] == F, "max PF != F")
    paired = all(pf[i] + pf[t - 2 - i] == F for i in range(t - 1))
    as_ = 2 * g == F + t
    rep.require(as_ == paired, f"2g = F + t is {as_} but the PF pairing is {paired}")
    cls = H.classification
    rep.require((cls != NONE) == as_, f"class {cls} but 2g = F + t is {as_}")
    rep.require((t == 1) == (2 * g == F + 1), "t = 1 disagrees with 2g = F + 1")
    rep.require((cls == SYMMETRIC) == (t == 1), f"class {cls} with t = {t}")
    pseudo = F % 2 == 0 and pf == [F // 2, F]
    rep.require((cls == PSEUDO_SYMMETRIC) == pseudo, f"class {cls} with PF {pf}")
    if cls == ALMOST_SYMMETRIC:
        rep.require(t >= 3, f"almost symmetric label with t = {t}")
    rep.details.update(genus=g, frobenius=F, type=t, classification=cls)
    return rep


# -- factorizations of f + n_k -------------------------------------------------


@check("alpha-apery")
def alpha_apery(H):
    """alpha_i >= 2 and (alpha_i - 1) n_i in Ap(n_k, H) for k != i."""
    name = "alpha-apery"
    if H.generators[0] == 1 or H.e < 2:
        return not_applicable(name, "needs e >= 2 and H != N")
    rep = Report(name)
    gens = H.generators
    alpha = H.alphas.alpha
    for i, (a, n) in enumerate(zip(alpha, gens)):
        rep.require(a >= 2, f"alpha_{i + 1} = {a}")
        for k, m in enumerate(gens):
            if k != i:
                rep.require(not H.contains((a - 1) * n - m),
                            f"(alpha_{i + 1}-1)n_{i + 1} - n_{k + 1} lies in H")
    return rep


@check("single-power-lower-bound")
def single_power_lower_bound(H):
    """f in PF(H), f + n_k = b n_i (k != i) implies b >= alpha_i - 1."""
    name = "single-power-lower-bound"
    if H.generators[0] == 1:
        return not_applicable(name, "H is the whole of N")
    rep = Report(name)
    gens, alpha = H.generators, H.alphas.alpha
    for f in H.pf:
        for k, nk in enumerate(gens):
            for i, ni in enumerate(gens):
                if i != k and (f + nk) % ni == 0:
                    b = (f + nk) // ni
                    rep.require(b >= alpha[i] - 1,
                                f"{f}+n_{k + 1} = {b} n_{i + 1} < (alpha_{i + 1}-1) n_{i + 1}")
    return rep


@check("frobenius-lift")
def frobenius_lift(H):
    """Almost symmetric H, f in PF'(H), beta a factorization of f + n_k with
    beta_i > 0: some factorization a of F + n_k has a_i = beta_i - 1 and
    a_j >= beta_j for j != i."""
    name = "frobenius-lift"
    if (s := _skip(name, H, need_as=True)):
        return s
    rep = Report(name)
    F = H.frobenius
    for k, nk in enumerate(H.generators):
        big = factorizations(H, F + nk)
        for f in H.pf_prime:
            for beta in factorizations(H, f + nk):
                for i in _support(beta):
                    ok = any(a[i] == beta[i] - 1 and
                             all(a[j] >= beta[j] for j in range(H.e) if j != i)
                             for a in big)
                    rep.require(ok, f"f={f}, k={k + 1}, beta={beta}, i={i + 1}: no lift")
    return rep


@check("mixed-row-breaks-uf")
def mixed_row_breaks_uf(H):
    """Almost symmetric H: a factorization of f + n_k (f in PF') with two or
    more non-zero coefficients forces F + n_k to lack UF."""
    name = "mixed-row-breaks-uf"
    if (s := _skip(name, H, need_as=True)):
        return s
    rep = Report(name)
    F = H.frobenius
    for k, nk in enumerate(H.generators):
        mixed = [(f, c) for f in H.pf_prime for c in factorizations(H, f + nk)
                 if len(_support(c)) >= 2]
        if mixed:
            n = _count2(H, F + nk)
            rep.require(n >= 2, f"F + n_{k + 1} has UF although {mixed[0][0]} + n_{k + 1} "
                                f"= {mixed[0][1]}")
    return rep


@check("non-uf-dominates-alpha")
def non_uf_dominates_alpha(H):
    """e = 4, f in PF(H): if f + n_k lacks UF then f + n_k >=_H alpha_i n_i."""
    name = "non-uf-dominates-alpha"
    if (s := _skip(name, H, need_e4=True)):
        return s
    rep = Report(name)
    gens, alpha = H.generators, H.alphas.alpha
    for f in H.pf:
        for k, nk in enumerate(gens):
            if _count2(H, f + nk) >= 2:
                rep.require(any(H.contains(f + nk - a * n) for a, n in zip(alpha, gens)),
                            f"{f} + n_{k + 1} lacks UF but dominates no alpha_i n_i")
    return rep


@check("two-generator-rows")
def two_generator_rows(H):
    """e = 4 almost symmetric, f in PF': factorizations of f + n_i use at most
    two generators, and two distinct generators appearing across a non-UF
    fibre satisfy alpha_j n_j = alpha_k n_k."""
    name = "two-generator-rows"
    if (s := _skip(name, H, need_as=True, need_e4=True)):
        return s
    rep = Report(name)
    gens, alpha = H.generators, H.alphas.alpha
    for f in H.pf_prime:
        for i, ni in enumerate(gens):
            fs = factorizations(H, f + ni)
            for c in fs:
                rep.require(len(_support(c)) <= 2, f"{f} + n_{i + 1} = {c} uses 3 generators")
            if len(fs) >= 2:
                used = sorted({j for c in fs for j in _support(c)})
                if len(used) == 2:
                    j, k = used
                    rep.require(alpha[j] * gens[j] == alpha[k] * gens[k],
                                f"{f}+n_{i + 1} lacks UF but alpha_{j + 1}n_{j + 1} != "
                                f"alpha_{k + 1}n_{k + 1}")
    return rep


@check("uf-count-identity")
def uf_count_identity(H):
    """Almost symmetric H with F + n_k having UF (beta): n_k = prod(beta_j + 1) + t - 1."""
    name = "uf-count-identity"
    if (s := _skip(name, H, need_as=True)):
        return s
    rep = Report(name)
    hits = 0
    for k, nk in enumerate(H.generators):
        fs = _capped(H, H.frobenius + nk)
        if fs is None or len(fs) != 1:
            continue
        hits += 1
        beta = fs[0]
        val = prod(b + 1 for j, b in enumerate(beta) if j != k) + H.type - 1
        rep.require(val == nk, f"n_{k + 1} = {nk} but the product count gives {val}")
    rep.details["uf_rows"] = hits
    return rep


# -- RF-matrices ---------------------------------------------------------------


def _matrices(H, f, rep, cap=10**4):
    try:
        return rf_matrices(H, f, cap)
    except EnumerationOverflow as exc:
        rep.verdict = INCONCLUSIVE
        rep.notes.append(str(exc))
        return []


@check("rf-row-zeros")
def rf_row_zeros(H):
    """e = 4 almost symmetric, f in PF': every row of every RF(f) has an
    off-diagonal zero, and some position per row is zero in every choice."""
    name = "rf-row-zeros"
    if (s := _skip(name, H, need_as=True, need_e4=True)):
        return s
    rep = Report(name)
    for f in H.pf_prime:
        mats = _matrices(H, f, rep)
        if not mats:
            continue
        for M in mats:
            for i, r in enumerate(M.entries):
                rep.require(any(c == 0 for j, c in enumerate(r) if j != i),
                            f"row {i + 1} of RF({f}) has no zero:\n{M}")
        for i in range(H.e):
            rep.require(any(all(M.entries[i][j] == 0 for M in mats) for j in range(H.e) if j != i),
                        f"row {i + 1} of RF({f}): no position is zero in every choice")
    return rep


@check("special-row-count")
def special_row_count(H):
    """Pseudo-symmetric e = 4: RF(F/2) has two special rows.  Almost
    symmetric type 3: RF(f) and RF(F - f) carry at least four special rows
    between them (over all choices)."""
    name = "special-row-count"
    if (s := _skip(name, H, need_as=True, need_e4=True)):
        return s
    if H.type not in (2, 3):
        return not_applicable(name, f"type {H.type}")
    rep = Report(name)
    if H.type == 2:
        from .structure import komeda_form

        form = komeda_form(H)
        rows = special_rows(NumericalSemigroup(form.generators), form.matrix)
        rep.require(len(rows) == 2, f"{len(rows)} special rows in the canonical RF(F/2)")
        rep.details["special_rows"] = [r.as_dict() for r in rows]
        return rep
    f, f2 = H.pf_prime
    found = set()
    for g in (f, f2):
        for M in _matrices(H, g, rep):
            found.update((g, s.row) for s in special_rows(H, M))
    rep.details["special_rows"] = sorted([g, r + 1] for g, r in found)
    if rep.verdict != INCONCLUSIVE:
        rep.require(len(found) >= 4, f"only {len(found)} special rows in RF({f}), RF({f2})")
    return rep


@check("single-power-rows")
def single_power_rows(H):
    """e = 4 almost symmetric, f in PF', f + n_k = b n_i: either b = alpha_i - 1,
    or b >= alpha_i and alpha_i n_i = alpha_j n_j for some j not in {i, k}."""
    name = "single-power-rows"
    if (s := _skip(name, H, need_as=True, need_e4=True)):
        return s
    rep = Report(name)
    gens, alpha = H.generators, H.alphas.alpha
    for f in H.pf_prime:
        for k, nk in enumerate(gens):
            for i, ni in enumerate(gens):
                if i == k or (f + nk) % ni:
                    continue
                b = (f + nk) // ni
                ok = b == alpha[i] - 1 or (
                    b >= alpha[i] and any(alpha[i] * ni == alpha[j] * gens[j]
                                          for j in range(4) if j not in (i, k)))
                rep.require(ok, f"{f} + n_{k + 1} = {b} n_{i + 1} with alpha_{i + 1} = {alpha[i]}")
    return rep


@check("pf-collisions")
def pf_collisions(H):
    """e = 4 almost symmetric: no value f + n_k is hit from three different k,
    and a collision f + n_k = f' + n_l (f != f' in PF') equals (alpha_i - 1) n_i
    for some i outside {k, l}."""
    name = "pf-collisions"
    if (s := _skip(name, H, need_as=True, need_e4=True)):
        return s
    rep = Report(name)
    gens, alpha = H.generators, H.alphas.alpha
    hits: dict = {}
    for f in H.pf_prime:
        for k, nk in enumerate(gens):
            hits.setdefault(f + nk, []).append((f, k))
    for v, src in sorted(hits.items()):
        ks = {k for _, k in src}
        rep.require(len(ks) < 3, f"{v} = f + n_k for k in {sorted(x + 1 for x in ks)}")
        for (f, k), (f2, l) in combinations(src, 2):
            if f == f2:
                continue
            rep.require(any(v == (alpha[i] - 1) * gens[i] for i in range(4) if i not in (k, l)),
                        f"{f}+n_{k + 1} = {f2}+n_{l + 1} = {v} is no (alpha_i-1)n_i")
    return rep


@check("rf-relation-degrees")
def rf_relation_degrees(H):
    """deg phi_ij <=_H f + n_i + n_j for every RF(f)-relation, f in PF(H)."""
    name = "rf-relation-degrees"
    if H.generators[0] == 1:
        return not_applicable(name, "H is the whole of N")
    rep = Report(name)
    gens = H.generators
    for f in H.pf:
        for M in _matrices(H, f, rep):
            for (i, j), b in relations_of(H, M).items():
                rep.require(H.leq(b.degree, f + gens[i] + gens[j]),
                            f"RF({f}) rows {i + 1},{j + 1}: degree {b.degree} exceeds "
                            f"{f + gens[i] + gens[j]}")
    return rep


@check("half-frobenius-rf")
def half_frobenius_rf(H):
    """e = 4 with F/2 in PF(H): every RF(F/2) has a_ij a_ji = 0 and a positive
    entry in each row and column; for pseudo-symmetric H it is unique."""
    name = "half-frobenius-rf"
    F = H.frobenius
    if H.e != 4 or F % 2 or F // 2 not in H.pf:
        return not_applicable(name, "needs e = 4 and F/2 in PF(H)")
    rep = Report(name)
    mats = _matrices(H, F // 2, rep)
    for M in mats:
        A = M.entries
        for i, j in combinations(range(4), 2):
            rep.require(A[i][j] * A[j][i] == 0, f"a_{i + 1}{j + 1} a_{j + 1}{i + 1} != 0:\n{M}")
        for i in range(4):
            rep.require(any(c > 0 for c in A[i]), f"row {i + 1} has no positive entry:\n{M}")
            rep.require(any(A[r][i] > 0 for r in range(4)),
                        f"column {i + 1} has no positive entry:\n{M}")
    if H.classification == PSEUDO_SYMMETRIC and rep.verdict != INCONCLUSIVE:
        rep.require(len(mats) == 1, f"{len(mats)} RF-matrices of F/2")
    rep.details["matrices"] = len(mats)
    return rep


# -- the toric ideal -----------------------------------------------------------


@check("minimal-degree-bound")
def minimal_degree_bound(H):
    """Every minimal binomial x^u - x^v satisfies deg <=_H f + n_i + n_j for
    some f in PF(H), whichever x_i | x^u and x_j | x^v are chosen."""
    name = "minimal-degree-bound"
    if H.generators[0] == 1 or H.e < 2:
        return not_applicable(name, "needs e >= 2")
    rep = Report(name)
    gens = H.generators
    for b in minimal_generators(H):
        for i in _support(b.plus):
            for j in _support(b.minus):
                rep.require(any(H.leq(b.degree, f + gens[i] + gens[j]) for f in H.pf),
                            f"{b} (degree {b.degree}) with x{i + 1}, x{j + 1}")
    return rep


@check("mu-lower-bound")
def mu_lower_bound(H):
    """e = 4 almost symmetric of type t: mu(I_H) >= 3(t - 1)."""
    name = "mu-lower-bound"
    if not _as4(H):
        return not_applicable(name, "needs e = 4, almost symmetric, t >= 2")
    mu = len(minimal_generators(H))
    rep = Report(name, details={"mu": mu, "m0": 3 * (H.type - 1)})
    rep.require(mu >= 3 * (H.type - 1), f"mu = {mu} < 3(t-1)")
    return rep


@check("rf-pairwise-zero")
def rf_pairwise_zero(H):
    """a_ij = 0 or b_ji = 0 for RF(f), RF(f') whenever f + f' is not in H."""
    name = "rf-pairwise-zero"
    if H.generators[0] == 1:
        return not_applicable(name, "H is the whole of N")
    rep = Report(name)
    pairs = [(f, g) for f, g in combinations(H.pf + H.pf, 2)
             if f <= g and not H.contains(f + g)]
    for f, g in sorted(set(pairs)):
        sub = verify_pairwise_zero(H, f, g)
        for v in sub.violations:
            rep.fail(v)
    rep.details["pairs"] = [list(p) for p in sorted(set(pairs))]
    return rep


@check("rf-positive-columns")
def rf_positive_columns(H):
    """e = 4 almost symmetric: each column of each RF(f), f in PF', has a positive entry."""
    name = "rf-positive-columns"
    if (s := _skip(name, H, need_as=True, need_e4=True)):
        return s
    rep = Report(name)
    for f in H.pf_prime:
        try:
            sub = verify_positive_columns(H, f, cap=10**4)
        except EnumerationOverflow as exc:
            rep.verdict = INCONCLUSIVE
            rep.notes.append(str(exc))
            continue
        for v in sub.violations:
            rep.fail(v)
    return rep


@check("betti-identities")
def betti_identities(H):
    """beta_0 = 1, beta_{e-1} = t with shifts PF + N, sum (-1)^i beta_i = 0."""
    if H.generators[0] == 1 or H.e > 6:
        return not_applicable("betti-identities", "needs 2 <= e <= 6")
    return betti_summary(H)


def run_all(H, names=None):
    """Every registered check (or the named subset) on H, in registration order."""
    names = list(CHECKS) if names is None else names
    return [CHECKS[n](H) for n in names]
