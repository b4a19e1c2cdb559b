"""Exact computations with numerical semigroups.

Apéry sets, pseudo-Frobenius numbers, factorizations, row-factorization
matrices, toric ideals and their Betti numbers, plus verifiers for the
structure of 4-generated almost symmetric semigroups and shifted families.
"""

from .binomial import Binomial
from .errors import (
    EmptyInput,
    EnumerationOverflow,
    GcdNotOne,
    InvalidParams,
    NoCanonicalForm,
    NotInIdeal,
    NotMember,
    NotPseudoSymmetric,
    NumsgpError,
    PatternNotFound,
    PrecondFailed,
)
from .factorization import AlphaTable, alphas, factorizations, has_uf
from .report import Report
from .rf import RFMatrix, generates_check, rf_matrices, rf_relations, special_rows
from .semigroup import (
    AperyTable,
    NumericalSemigroup,
    PFData,
    apery,
    contains,
    leq_H,
    pseudo_frobenius,
    semigroup,
)
from .shifted import FamilyParams, construct_family, scan, shift, verify_family
from .structure import komeda_form, verify_type2_structure, verify_type_bound
from .toric import BettiTable, graded_betti, minimal_generators

__version__ = "0.1.0"

__all__ = [n for n, v in list(globals().items())
           if not n.startswith("_") and not isinstance(v, type(__import__("sys")))]
