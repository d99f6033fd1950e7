"""
Fundamental VP polynomials
==========================

``Phi_{n,k}^m`` has degree n+m-1, takes the value 1 at node k and 0 at the
other nodes. With m = 0 it is the fundamental Lagrange polynomial. Three
independent formulas are available and should agree.
"""

import numpy as np

from vpinterp import VPParams, fundamental_vp_mean, fundamental_vp_sum, fundamental_vp_trig, make_nodes
from vpinterp.filtered import fundamental_matrix

n, k = 30, 15
t = np.linspace(0, np.pi, 1001)
for m in (0, 7, 15, 22):
    phi = fundamental_matrix("w1", VPParams(n, m), t)[:, k - 1]
    # the side lobes shrink as the filter widens
    far = np.abs(np.cos(t) - make_nodes("w1", n).x_nodes[k - 1]) > 0.3
    print(f"m={m:2d}: peak {phi.max():.4f}, largest far-field lobe {np.abs(phi[far]).max():.4f}")

# the three representations
params = VPParams(n, 15)
tt = np.linspace(0.01, 3.13, 400)
s = fundamental_vp_sum("w2", params, 4, tt)
print("sum vs Darboux mean:", np.abs(s - fundamental_vp_mean("w2", params, 4, tt)).max())
print("sum vs compact     :", np.abs(s - fundamental_vp_trig("w2", params, 4, tt)).max())

# interpolation property on all nodes
tk = make_nodes("w4", n).t_nodes
F = fundamental_matrix("w4", params, tk)
print("max |Phi_k(x_h) - delta_kh|:", np.abs(F - np.eye(n)).max())
