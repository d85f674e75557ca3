"""
Deriving a q-Zassenhaus factorization
=====================================

Solve for the factors of e_q^{x(A+B)} order by order, then check that
multiplying the factors back together reproduces the left side exactly.
"""

# the solver works in the free algebra on A, B over the field Q(q)
from qzassenhaus import derive_zassenhaus, verify_reconstruction

f = derive_zassenhaus("escalating", 5)
for factor in f.factors:
    print(f"grade {factor.grade}, base q^{factor.base}:")
    print("   ", factor.exponent)

# the residual is a whole graded series; every coefficient is zero
residual = verify_reconstruction(f)
print("residual is zero through order", residual.order, ":", residual.is_zero())

# the uniform variant uses base q in every factor and departs at grade 4
g = derive_zassenhaus("uniform", 4)
print("uniform minus escalating at grade 4:")
print("   ", g.exponent(4) - f.exponent(4))
