"""
The 27 lines and W(E6)
======================

Builds the line classes of the Picard lattice, checks the incidence graph and
generates the Weyl group as permutations of the lines.
"""

import numpy as np

from artifact import permgroup as pg
from artifact import piclattice as P
from artifact import weyl as Wy

# the 27 classes with self-intersection -1 and degree 1 against -K
lines = P.lines27()
print(len(lines), "lines, e.g.", lines[P.line_index("Q1")])

# every line meets exactly ten others
A = P.intersection_matrix()
print("degrees:", np.unique((A == 1).sum(axis=1)))
print("sixers:", len(P.sixers()))

# five skew lines have exactly one common transversal
print("transversal of E2..E6:", P.unique_transversal(["E2", "E3", "E4", "E5", "E6"]).name)

# the reflection groups for 4, 5 and 6 blown-up points
for n in (4, 5, 6):
    print(f"|W| for n={n}:", Wy.generate(n).order)

# the element b permutes E4, E5, E6; its class and centralizer
G = Wy.weyl_e6()
b = Wy.element_b()
print("type of b:", Wy.carter_type(b).value)
C = pg.centralizer(G, b.perm)
print("class size", len(pg.conjugacy_class(G, b.perm)), "centralizer", C.order)
Z = pg.sylow3_unique(C)
print("Sylow-3 order", Z.order, "rank", pg.is_elementary_abelian_3(Z))

# r sends E1..E6 to another sixer and joins b, c in an elementary abelian 3-group
r = Wy.build_r()
print("r(E1..E6):", [lines[r(f"E{i}")].name for i in range(1, 7)])
H = pg.closure([b.perm, Wy.element_c().perm, r.perm])
print("|<b,c,r>| =", H.order)
