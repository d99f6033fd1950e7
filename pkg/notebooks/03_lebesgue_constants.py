"""
Weighted Lebesgue constants
===========================

The VP operator is bounded in a weighted sup norm exactly when the Jacobi
exponents satisfy a short list of inequalities. Inside that range the
Lebesgue constants settle down; outside they keep growing.
"""

import numpy as np

from vpinterp import JacobiWeight, VPParams, bound_violations, divergence_probe, lebesgue_constant
from vpinterp.analysis import lagrange_lebesgue

# unweighted Chebyshev zeros: Lagrange grows like log n, VP stays put
for n in (16, 64, 256, 1024):
    lag = lagrange_lebesgue("w1", n, JacobiWeight())
    vp = lebesgue_constant("w1", VPParams(n, n // 2), JacobiWeight())
    print(f"n={n:5d}  Lagrange {lag:.4f}  VP(theta=0.5) {vp:.4f}")

# larger filters give smaller constants
w = JacobiWeight(0.5, 0.4)
print("w2, u=v^(0.5,0.4), n=200:",
      [round(lebesgue_constant("w2", VPParams.from_theta(200, th), w), 3) for th in (0.1, 0.3, 0.5, 0.7, 0.9)])

# the boundedness test names what fails
for kind, weight in [("w3", JacobiWeight(0.4, 1.5)), ("w3", JacobiWeight(0.4, 0.0)), ("w1", JacobiWeight(0.3, 1.5))]:
    print(kind, weight, "violations:", bound_violations(kind, weight) or "none")

# along n = 4l, m = 2l the out-of-range weight diverges
probe = divergence_probe("w1", JacobiWeight(0.3, 1.5), l_values=(4, 16, 64, 256))
print("w1, u=v^(0.3,1.5):", np.round(probe.values, 2))
