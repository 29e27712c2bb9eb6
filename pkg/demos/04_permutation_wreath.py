"""The canonical generalized wreath product of permutation groups.

Given Delta_1 acting on the subgroup U of Z_n and Delta_0 acting on the
quotient by L (with matching actions on the common section U/L), the
wreath product acts on all of Z_n: it moves the U-cosets through
Delta_0 while twisting each coset fibre by elements of Delta_1 whose
section action agrees.  Here we build it for the dihedral groups on
Z_4 glued over Z_2, compare with the automorphism group of the
corresponding S-ring wreath product over Z_8, and confirm that every
generator preserves the ring's Cayley colors.
"""

from schurring import (
    automorphism_group,
    cyclotomic,
    gen_wreath,
    group_order,
    k_m,
    perm_gen_wreath,
)
from schurring.perm import PermGroup
from schurring.schurity import color


def dihedral(n):
    shift = tuple((x + 1) % n for x in range(n))
    neg = tuple((-x) % n for x in range(n))
    return PermGroup(n, [shift, neg])


d4 = dihedral(4)
print(f"Delta_1 = Delta_0 = dihedral on Z_4, order {group_order(d4)}")

G = perm_gen_wreath(d4, d4, 8, 4, 2)
print(f"wreath product on Z_8: order {group_order(G)}")
for g in G.generators:
    print(f"  generator {g}")

A = gen_wreath(cyclotomic(k_m(4)), cyclotomic(k_m(4)), 2)
print(f"\nmatching S-ring over Z_8: {[list(c) for c in A.classes]}")

aut = automorphism_group(A)
print(f"aut(A) order: {group_order(aut)}")

ok = all(
    color(A, x, y) == color(A, g[x], g[y])
    for g in G.generators
    for x in range(8)
    for y in range(8)
)
print(f"every wreath generator preserves the colors: {ok}")
print(f"wreath product inside aut(A): {all(g in aut for g in G.generators)}")
