"""
A numeric sanity check with random matrices
===========================================

Substitute random 4x4 matrices for A and B and a number for q, then watch
how the truncation error shrinks as x goes to zero.  A formula that is right
through order N leaves an error of order x^(N+1).
"""

import numpy as np

from qzassenhaus import derive_zassenhaus
from qzassenhaus.matoracle import OracleConfig, residual_order, weyl_check

cfg = OracleConfig(dim=4, q0=0.7, seed=42)
for N in (3, 4, 5):
    r = residual_order(derive_zassenhaus("escalating", N), cfg)
    print(f"N = {N}: residuals", np.round(r.residuals, 12), f"slope {r.slope:.2f}")

# dropping the top factors lowers the slope accordingly
short = derive_zassenhaus("escalating", 5).truncated(3)
print("truncated after grade 3: slope", round(residual_order(short, cfg).slope, 2))

# when AB = q^{-1} BA holds exactly the product of single exponentials is enough
rep = weyl_check(4)
print("q-Weyl pair, identity residual", rep.identity_residual)
