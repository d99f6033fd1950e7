"""
Chebyshev nodes and orthonormal polynomials
===========================================

The four Chebyshev weights each come with closed-form orthonormal
polynomials in the angle ``t = arccos x``. Their zeros and Christoffel
numbers give an n-point Gauss rule.
"""

import numpy as np

from vpinterp import ChebyshevKind, make_nodes, ortho_poly_eval
from vpinterp.basis import ortho_matrix, total_mass

n = 8
for kind in ChebyshevKind:
    nodes = make_nodes(kind, n)
    print(f"{kind.value}: first nodes x = {np.round(nodes.x_nodes[:3], 4)}, "
          f"sum of Christoffel numbers = {nodes.christoffel.sum():.12f} (mass {total_mass(kind):.12f})")

# p_n vanishes at its own zeros
nodes = make_nodes("w3", n)
print("max |p_n(x_k)| for w3:", np.abs(ortho_poly_eval("w3", n, nodes.t_nodes)).max())

# a 2n-point rule integrates products of degree < 2n exactly, so the Gram
# matrix of p_0..p_{2n-1} comes out as the identity
gauss = make_nodes("w4", 2 * n)
P = ortho_matrix("w4", 2 * n, gauss.t_nodes)
gram = P.T @ (gauss.christoffel[:, None] * P)
print("Gram matrix deviation from identity:", np.abs(gram - np.eye(2 * n)).max())

# endpoint values are finite limits, not 0/0
print("p_5(w2) at x=1:", ortho_poly_eval("w2", 5, 0.0), "=", np.sqrt(2 / np.pi) * 6)
