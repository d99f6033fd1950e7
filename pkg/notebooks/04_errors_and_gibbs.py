"""
Approximation errors and the Gibbs phenomenon
=============================================

For smooth functions VP and Lagrange interpolation are about equally
accurate. Near a jump the filter damps the oscillations that Lagrange
interpolation produces.
"""

import numpy as np

from vpinterp import JacobiWeight, VPParams, lagrange_interpolate, make_nodes, vp_interpolate
from vpinterp.analysis import weighted_sup_error
from vpinterp.reproduce import gibbs_max_errors, interpolation_errors

# f1 = |x+1/2|^(7/2) sin(x)/(1+x^2) with w3 and u = v^(0.6,0.6)
ns = [50, 150, 250, 350, 450]
errs = [interpolation_errors("f1", n) for n in ns]
for n, (m, vp, lag) in zip(ns, errs):
    print(f"f1 n={n}: m={m}, VP {vp:.2e}, Lagrange {lag:.2e}")
slope = np.polyfit(np.log(ns), np.log([e[1] for e in errs]), 1)[0]
print(f"observed rate n^{slope:.2f}")

# a custom function: Runge's example on w1 nodes
def runge(x):
    return 1 / (1 + 25 * x**2)

n = 60
data = runge(make_nodes("w1", n).x_nodes)
u = JacobiWeight(0, 0)
print("Runge, n=60: Lagrange", f"{weighted_sup_error(lagrange_interpolate('w1', n, data), runge, u):.2e}",
      " VP(theta=0.3)", f"{weighted_sup_error(vp_interpolate('w1', VPParams.from_theta(n, 0.3), data), runge, u):.2e}")

# f5 = sign(x) - x/2: the weighted overshoot on [0.05, 1] drops as theta grows
g = gibbs_max_errors(50, (0.2, 0.4, 0.6, 0.8))
print("Gibbs, n=50: Lagrange", round(g[None], 4), {th: round(v, 4) for th, v in g.items() if th is not None})
