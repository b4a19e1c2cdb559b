"""Structure of 4-generated almost symmetric semigroups."""

from numsgp import komeda_form, semigroup, verify_type2_structure
from numsgp.structure import analyze_cyclic_rf, cyclic_examples, verify_seven_gen

# Pseudo-symmetric: one canonical RF(F/2) after relabeling.
H = semigroup(5, 6, 7, 9)
form = komeda_form(H)
print(f"{H}: canonical order {form.generators}, alphas {form.alphas}, alpha42 = {form.alpha42}")
print(form.matrix)
print("five-binomial presentation:", verify_type2_structure(H).details["binomials"])

# Type 3: six or seven minimal generators, seven only when n1 + n4 = n2 + n3.
for gens in [(5, 6, 8, 9), (18, 21, 23, 26)]:
    rep = verify_seven_gen(semigroup(*gens))
    print(f"{gens}: mu = {rep.details['mu']}, n1+n4 = n2+n3: {rep.details['relation']}")

# RF-matrices with a single positive entry per row form a 4-cycle.
for alpha, K in cyclic_examples(3)[:3]:
    rep = analyze_cyclic_rf(K)
    print(f"alphas {alpha} -> {K}: {rep.verdict}, RF({rep.details['f']}) = {rep.details['matrix']}")
