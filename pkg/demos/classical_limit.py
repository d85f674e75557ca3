"""
The q -> 1 limit
================

Every exponent coefficient is a rational function of q.  Evaluating at q = 1
recovers the ordinary Zassenhaus and BCH expansions.
"""

from qzassenhaus import classical_limit, derive_qbch, derive_zassenhaus

zz = classical_limit(derive_zassenhaus("escalating", 4))
for grade, exponent in zz.exponents().items():
    print(f"C{grade} =", exponent)

# the q-BCH series becomes log(e^A e^B)
bch = classical_limit(derive_qbch(3))
for grade, exponent in bch.exponents().items():
    print(f"Z{grade} =", exponent)
