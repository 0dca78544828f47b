"""
Rearranging a zonotope onto a parallelepiped
============================================

For a full-row-rank unimodular M with L = M M^T, points of the centered
zonotope Z0(M) are written as p = sum alpha_i L_i and translated by the
columns of L whose coefficient is negative.  On reduced K3 the images fill
the parallelepiped Z(L) exactly once.  On a path with four vertices some
coefficients exceed 1 and the translation is not defined everywhere.
"""

# %%
# Reduced K3
# ----------
import random
from fractions import Fraction

from zonomtt import graph as gr
from zonomtt.theorems import check_rearrange
from zonomtt.zonotope import Rearrangement, contains

M = gr.reduced_incidence(gr.complete_graph(3))
R = Rearrangement(M)
print("L =", R.L)
print("max |alpha| over Z0(M):", R.coefficient_bound()[0])

rng = random.Random(0)
for _ in range(5):
    t = [Fraction(rng.randint(-499, 499), 1000) for _ in range(3)]
    p = [sum(a * b for a, b in zip(row, t)) for row in M]
    cell, q = R.forward(p)
    print(f"p = {[str(x) for x in p]}  epsilon = {cell.epsilon}  q = {[str(x) for x in q]}  "
          f"tile = {R.locate(q)}")

report = check_rearrange(M, samples=2000, seed=1)
print(report.passed, {k: str(v) for k, v in report.quantities.items()})

# %%
# A path on four vertices
# -----------------------
# The exact bound is 3/2, attained at a vertex of the cube.  That vertex of
# Z0(M) is sent outside Z(L).
P4 = gr.reduced_incidence(gr.path_graph(4))
R = Rearrangement(P4)
bound, i, t = R.coefficient_bound()
p = [sum(a * b for a, b in zip(row, t)) for row in P4]
print("bound:", bound, " coordinate:", i, " witness p:", [str(x) for x in p])
print("alpha at witness:", [str(a) for a in R.coefficients(p)])
print("p in Z0(M):", contains(P4, p, centered=True))
print(check_rearrange(P4, samples=0).notes)
