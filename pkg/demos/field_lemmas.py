"""
Small field-theory facts
========================

Diagonal order-3 matrices with rational trace, cube roots in Q(2^(1/3)),
and the degree-3 symbol algebra.
"""

from artifact import fieldlemmas as FL
from artifact.exact import RadCubicNum, rad_cube, rad_trace

rep = FL.rep_lemma_check()
print("det 1:", len(rep.cond1), " det 1 and rational trace:", len(rep.cond12))
print("not closed under addition:", rep.non_closed_pair)
print("with w in the field:", len(FL.rep_lemma_check(has_omega=True).cond12))

y = RadCubicNum(2, 0, 1, 1)
print("(X + X^2)^3 =", rad_cube(y).coefficients, " trace", rad_trace(y))
print(FL.rad_cubic_classification(2, samples=2000, seed=1).ok)

print(FL.pgl2_diagonal_check())
print([p for p in FL.primes_between(5, 60) if FL.prime_orbit_check(p)])

A = FL.SymbolAlg(2, 3)
print("x y x^-1 =", A.mul(A.mul(A.x, A.y), A.x_inverse()))
print(FL.symbol_algebra_check(2, 3).ok)
