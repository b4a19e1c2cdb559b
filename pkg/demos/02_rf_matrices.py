"""Row-factorization matrices and the binomials they produce."""

from numsgp import generates_check, minimal_generators, rf_matrices, rf_relations, semigroup
from numsgp.rf import special_rows
from numsgp.toric import is_minimal_binomial

H = semigroup(7, 12, 13, 22)
print(f"H = {H}, PF(H) = {list(H.pf)}")

(M,) = rf_matrices(H, 15)
print("RF(15):")
print(M)
print("special rows:", [(s.row + 1, s.carrier + 1, s.value) for s in special_rows(H, M)])

print("\ndifferences of rows:")
rels = rf_relations(H, 15)
for b in rels:
    flag = "minimal" if is_minimal_binomial(H, b) else "redundant"
    print(f"  deg {b.degree:3d}  {b}  ({flag})")

print(f"\nmu(I_H) = {len(minimal_generators(H))}; RF-relations generate I_H: "
      f"{generates_check(H, rels)}")

# RF(f) need not be unique: the second PF' number of <33,56,61,84> has many.
K = semigroup(33, 56, 61, 84)
for f in K.pf_prime:
    print(f"{K}: {len(rf_matrices(K, f))} choice(s) of RF({f})")
