import pytest
from hypothesis import given

import oracles
from numsgp import (
    EmptyInput,
    GcdNotOne,
    NotMember,
    NumericalSemigroup,
    apery,
    contains,
    leq_H,
    pseudo_frobenius,
    semigroup,
)
from strategies import generator_sets


def test_constructor_sorts_and_minimalizes():
    H = semigroup(9, 5, 10, 6, 8)
    assert H.generators == (5, 6, 8, 9)
    assert H.redundant == (10,)
    assert H.e == 4 and H.N == 28


@pytest.mark.parametrize("gens, exc", [((), EmptyInput), ((4, 6), GcdNotOne), ((0, 3), EmptyInput)])
def test_constructor_rejects(gens, exc):
    with pytest.raises(exc):
        NumericalSemigroup.new(gens)


def test_whole_naturals():
    H = semigroup(1)
    assert (H.frobenius, H.genus, H.pf, H.classification) == (-1, 0, (-1,), "symmetric")


def test_membership_and_order():
    H = semigroup(3, 5)
    assert [h for h in range(12) if contains(H, h)] == [0, 3, 5, 6, 8, 9, 10, 11]
    assert leq_H(H, 3, 8) and not leq_H(H, 5, 6)
    assert H.gaps() == [1, 2, 4, 7]


def test_apery_requires_member():
    with pytest.raises(NotMember):
        apery(semigroup(5, 6, 8, 9), 7)


@pytest.mark.parametrize("gens, pf, cls", [
    ((7, 12, 13, 22), [15, 30], "pseudo-symmetric"),
    ((22, 28, 47, 53), [25, 258, 283], "almost-symmetric"),
    ((5, 6, 8, 9), [3, 4, 7], "almost-symmetric"),
    ((3, 5), [7], "symmetric"),
    ((4, 5, 11), [6, 7], "none"),
])
def test_pf_fixtures(gens, pf, cls):
    d = pseudo_frobenius(semigroup(*gens))
    assert list(d.pf) == pf and d.classification == cls
    assert d.frobenius == pf[-1] and list(d.pf_prime) == pf[:-1]


@given(generator_sets())
def test_pf_matches_sieve(gens):
    H = NumericalSemigroup.new(gens)
    ref = oracles.classify(H.generators)
    assert H.frobenius == ref["frobenius"]
    assert H.genus == ref["genus"]
    assert list(H.pf) == ref["pf"]
    assert H.classification == ref["classification"]
    assert 2 * H.genus >= H.frobenius + H.type


@given(generator_sets(max_size=4, max_value=20))
def test_apery_matches_sieve(gens):
    H = NumericalSemigroup.new(gens)
    for a in (H.generators[0], H.generators[-1], H.generators[0] + H.generators[-1]):
        A = H.apery(a)
        assert list(A.elements) == oracles.apery(H.generators, a)
        assert len(A) == a and max(A) == a + H.frobenius
