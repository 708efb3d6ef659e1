"""
The graded Lie algebra of a finite p-group
==========================================

Each layer D_i/D_{i+1} of the dimension series is an F_p vector space;
group commutation induces a graded bracket between the layers. Elements
of the group map into the algebra through their leading coset.
"""

from grouplab import build_dl, decomposition_witness, check_prop_2_11, check_cor_2_14
from grouplab.corpus import load_corpus

corpus = load_corpus()
heis = corpus.groups["Heis27"]

L = build_dl(heis)
print("component dimensions:", list(L.dims), "over F_%d" % L.p)
print("nilpotency class:", L.nilpotency_class())

# The two degree-1 basis vectors bracket onto the degree-2 line.
e1, e2 = L.component_basis(1)
print("[e1, e2] =", L.bracket(e1, e2))
print("[e2, e1] =", L.bracket(e2, e1))
print("[e1, e1] =", L.bracket(e1, e1))

# star: group element -> leading graded piece.
g1, g2, g3 = heis.generators
print("degree of g1:", L.degree_of(g1))
print("degree of the central g3:", L.degree_of(g3))
print("star(g3) =", L.star(g3))

# Power/index correspondence: x^p's depth and ad-nilpotency respect the
# grading; checked per element.
from grouplab import lazard_check

x = heis.multiply(g1, g2)
print("correspondence at g1*g2:", lazard_check(heis, L, x).ok)

# The group is an ordered product of the cyclic groups generated by the
# simple commutators in the generators, at every filtration depth.
w = decomposition_witness(heis, None)
print(f"\nwitness: class c={w.c}, {w.s} simple commutators, max order K={w.K}")
print("ordered cyclic cover:", check_prop_2_11(heis, w).ok)
print("index bound |G : D_i| <= K^s:", check_cor_2_14(heis, w).detail)
