"""Shifted families H + m and the H(a, b; d) construction."""

from numsgp import FamilyParams, construct_family, scan, semigroup, verify_family
from numsgp.shifted import as_type3_shifts, family_params, odd_generator_search, type2_window

for gens in [(10, 11, 13, 14), (10, 13, 15, 18), (14, 19, 21, 26)]:
    H = semigroup(*gens)
    hits = as_type3_shifts(scan(H, 48))
    p = family_params(H)
    print(f"{H}: almost symmetric of type 3 at m = {hits}; H = H({p.a},{p.b};{p.d}), "
          f"period 2a - 2 = {2 * p.a - 2}")

print("\ntype-2 shifts of <5,6,7,9> up to m = 200:",
      type2_window(semigroup(5, 6, 7, 9), 200).details["type2_shifts"])

p = FamilyParams(3, 4, 1)
print(f"\nH(3,4;1) = {construct_family(p)}; five steps: {verify_family(p, 5).verdict}")

rep = odd_generator_search(40)
print(f"\nall-odd almost symmetric type-3 semigroups with n4 <= 40: {rep.details['all_odd']}")
