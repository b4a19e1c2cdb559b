import pytest

from numsgp import semigroup
from numsgp.lemmas import CHECKS, run_all

SAMPLES = [
    (5, 6, 8, 9), (5, 6, 7, 9), (7, 12, 13, 22), (22, 28, 47, 53), (33, 56, 61, 84),
    (9, 22, 46, 57), (18, 21, 23, 26), (10, 11, 15, 16, 28), (4, 5, 6, 7), (3, 5, 7),
    (7, 8, 9, 10), (2, 3), (1,),
]


@pytest.mark.parametrize("gens", SAMPLES)
def test_no_check_fails(gens):
    for rep in run_all(semigroup(*gens)):
        assert rep.verdict in ("PASS", "N/A", "INFO"), rep


def test_registry_order_and_subset():
    names = list(CHECKS)
    assert names[0] == "apery-cardinality" and "betti-identities" in names
    reps = run_all(semigroup(5, 6, 8, 9), ["special-row-count", "pf-collisions"])
    assert [r.name for r in reps] == ["special-row-count", "pf-collisions"]


def test_special_row_count_detail():
    (rep,) = run_all(semigroup(5, 6, 8, 9), ["special-row-count"])
    assert rep.passed


def test_checks_are_not_vacuous():
    """Only the F/2 check is skipped on a type-3 example with odd F."""
    reps = run_all(semigroup(22, 28, 47, 53))
    assert [r.name for r in reps if r.verdict != "PASS"] == ["half-frobenius-rf"]
    assert all(r.verdict == "PASS" for r in run_all(semigroup(5, 6, 7, 9)))
