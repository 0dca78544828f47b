"""
Counting spanning trees of K4 three ways
========================================

The complete graph on four vertices has 16 spanning trees.  This script
recovers that number from the Laplacian spectrum, from the bases of the
graphic matroid, and as the lattice volume of two zonotopes.
"""

# %%
# Graph and Laplacian
# -------------------
from zonomtt import graph as gr
from zonomtt.linalg import det, matmul, product_nonzero_eigenvalues, transpose
from zonomtt.matroid import bases
from zonomtt.zonotope import volume

G = gr.complete_graph(4)
N = gr.incidence_matrix(G)
L = gr.laplacian(G)
for row in L:
    print(row)

# %%
# Deletion-contraction and the spectrum
# -------------------------------------
# The product of the nonzero Laplacian eigenvalues is the vertex count times
# the tree count, computed here from the characteristic polynomial, exactly.
trees = gr.spanning_tree_count(G)
product = product_nonzero_eigenvalues(L)
print("trees:", trees, " eigenvalue product:", product, " n * trees:", G.n * trees)

# %%
# Zonotopes
# ---------
# The incidence matrix is unimodular, so the lattice volume of the zonotope
# it generates counts its column bases, which are the spanning trees.  Any
# three Laplacian columns are a basis of the lattice they generate, each of
# volume 16 in the sum-zero lattice, so Z(L) has volume 4 * 16 = 64.
print("bases of N:", len(bases(N)))
print("vol Z(N):", volume(N))
print("vol Z(L):", volume(L))

M = gr.reduced_incidence(G)
print("full-rank reduction, vol Z(M) =", volume(M), " det(M M^T) =", det(matmul(M, transpose(M))))
