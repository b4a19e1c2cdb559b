"""Graded Betti numbers of K[H] and their degree multisets."""

from numsgp import graded_betti, semigroup
from numsgp.toric import verify_comparison

for gens in [(5, 6, 7, 9), (5, 6, 8, 9), (18, 21, 23, 26)]:
    H = semigroup(*gens)
    table = graded_betti(H)
    print(f"{H}: PF {list(H.pf)}, Betti numbers {list(table.betti)}")
    print(f"  generator degrees  {sorted(table.a_degrees)}")
    print(f"  first syzygies     {sorted(table.b_degrees)}")
    print(f"  last shifts        {sorted(table.last_degrees)} (PF + N, N = {H.N})")
    rep = verify_comparison(H)
    print(f"  degree pairing around F + N = {H.frobenius + H.N}: {rep.verdict}, "
          f"surplus pairs {rep.details.get('surplus_pairs')}")
