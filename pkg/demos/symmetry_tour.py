"""
Symmetry groups of small quandles
=================================

Inner groups, full automorphism groups, connectivity, and transitivity,
computed two independent ways where the order permits.
"""

import quandles as q

# the inner group is generated by the columns of the operation table
r5 = q.dihedral(5)
inn = q.inner_group(r5)
print("inner group of R_5 has order", inn.order())

# the full automorphism group comes from a backtracking search
aut = q.automorphism_group_backtrack(r5)
print("automorphism group of R_5 has order", aut.order())

# for tiny orders a brute-force filter over all permutations must agree
brute = q.brute_force_aut(r5)
print("brute force agrees:", aut.order() == len(brute))

# connectivity is transitivity of the inner action
for n in (3, 4, 5, 6, 7):
    x = q.dihedral(n)
    print(f"R_{n} connected: {q.is_connected(x)}")

# odd dihedral quandles have doubly transitive automorphism groups
print("Aut(R_5) doubly transitive:", q.aut_is_doubly_transitive(r5))
print("R_5 two-point homogeneous:", q.is_two_point_homogeneous(r5))

# the trivial quandle is fixed by every permutation of its points
t4 = q.trivial_quandle(4)
print("Aut of the 4-point trivial quandle:",
      q.automorphism_group_backtrack(t4).order(), "= 4!")

# isomorphism search returns an explicit relabeling or None
a = q.alexander(q.make_cyclic(5), q.scalar_map(q.make_cyclic(5), 2))
b = q.alexander(q.make_cyclic(5), q.scalar_map(q.make_cyclic(5), 3))
print("Alex(Z/5, 2) isomorphic to R_5:", q.quandle_isomorphic(a, r5) is not None)
print("Alex(Z/5, 2) isomorphic to Alex(Z/5, 3):", q.quandle_isomorphic(a, b) is not None)

# every quandle maps into the conjugation quandle of its inner group via
# a -> S_a; on R_9 the map is injective, on R_4 two columns collide
for x, name in ((q.dihedral(9), "R_9"), (q.dihedral(4), "R_4")):
    rep = q.embed_in_conj_inn(x)
    print(f"{name}: S map homomorphism={rep.is_homomorphism}, "
          f"injective={rep.is_injective}, collision={rep.injectivity_witness}")
