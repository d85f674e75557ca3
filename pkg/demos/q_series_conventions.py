"""
Switching between q-exponential conventions
===========================================

The Jackson exponential differs from the series e_q(x) and E_q(x) only by
a rescaling of its argument.  The same rescaling turns a factorization of
one into a factorization of the other.
"""

from qzassenhaus import derive_zassenhaus, transform_variant, verify_reconstruction
from qzassenhaus.disentangler import annihilated

jackson = derive_zassenhaus("escalating", 4)
for target in ("e_lower", "E_upper"):
    g = transform_variant(jackson, target)
    print(target, "grade 2 exponent:", g.exponent(2))
    print("   reconstructs exactly:", verify_reconstruction(g).is_zero())
    # E_q obeys the dual commutation rule, so its exponents vanish under AB = q BA
    print("   vanishes under its q-Weyl rule:", all(annihilated(g).values()))
