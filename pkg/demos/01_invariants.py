"""Basic invariants: Apéry sets, pseudo-Frobenius numbers, alphas, factorizations."""

from numsgp import factorizations, has_uf, semigroup

H = semigroup(22, 28, 47, 53)
print(f"H = {H}")
print(f"Frobenius number {H.frobenius}, genus {H.genus}")
print(f"PF(H) = {list(H.pf)}, type {H.type}, class {H.classification}")

A = H.apery(22)
print(f"Ap(22, H) has {len(A)} elements, largest {max(A)} = 22 + F")

# Almost symmetric: the non-maximal pseudo-Frobenius numbers pair up around F.
F = H.frobenius
print("pairing f <-> F - f:", [(f, F - f) for f in H.pf_prime])

al = H.alphas
for i, (a, w) in enumerate(zip(al.alpha, al.witnesses), start=1):
    print(f"alpha_{i} = {a:2d}   {a} * n_{i} = {H.degree(w)} via {w}")

for f in H.pf_prime:
    for n in H.generators:
        facts = factorizations(H, f + n)
        tag = "UF" if has_uf(H, f + n) else f"{len(facts)} factorizations"
        print(f"f + n = {f} + {n} = {f + n}: {tag}")
