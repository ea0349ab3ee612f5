"""
Automorphisms of the Fermat cubic
=================================

Lines and automorphisms of x^3 + y^3 + z^3 + t^3 = 0 over Q(w), a marking
against the abstract 27 lines, and the induced embedding into W(E6).
"""

from collections import Counter

import numpy as np

from artifact import fermat as F
from artifact import permgroup as pg
from artifact import weyl as Wy

lines = F.fermat_lines()
print(len(lines), "lines, first few:", lines[:3])
print("each meets", set(F.fermat_incidence().sum(axis=1)), "others")

G = F.fermat_aut_group()
print("|Aut| =", len(G))

# eigenvalue patterns of the monomial matrices, up to a scalar
print(Counter(F.eigen_type(g).value for g in G))
print("A2 elements:", F.a2_census())

# match Fermat lines to lattice classes and push automorphisms to W(E6)
m = F.find_marking()
print("marking preserves incidence:", m.preserves_incidence())
emb = F.embed_aut(m)
types = Wy.carter_types_of_rows(np.array([w.perm.images for w in emb.values()]))
print("types agree:", all(F.eigen_type(g) is t for g, t in zip(emb, types)))

# with a marking adapted to an A2 element, b lands inside the image
H = F.embedded_group(F.find_marking(adapted_to=F.a2_census()[0]))
b = Wy.element_b()
C = pg.centralizer(H, b.perm)
print("centralizer of b in the image:", C.order, "Sylow-3:", pg.sylow3_unique(C).order)

# the plane picture: six points, two order-3 maps with no common fixed point
print("general position:", F.general_position().ok)
rep = F.plane_actions_check()
print("b on points", rep.b_on_points, "c on points", rep.c_on_points)
print("common fixed points:", rep.common_fixed, "commutator w^", rep.commutator_exponent)
