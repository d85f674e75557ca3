"""
Exact derivation and verification of q-deformed Zassenhaus and
Baker-Campbell-Hausdorff formulas.

    >>> from qzassenhaus import derive_zassenhaus
    >>> f = derive_zassenhaus("escalating", 4)
    >>> print(f.exponent(2))
    -q/(1 + q)*AB + 1/(1 + q)*BA
"""
__version__ = "0.1.0"

from .qfield import QPoly, QRat, eval_at, q_factorial, q_int, q_power
from .wordalg import A, B, I, NCPoly, nested_X, normal_order, q_commutator
from .gseries import (
    GradedSeries,
    conj_expand,
    q_antiderivative,
    q_derivative,
    qexp,
    scale_argument,
    series_inverse,
    series_mul,
)
from .disentangler import (
    Factor,
    Factorization,
    classical_limit,
    derive_qbch,
    derive_zassenhaus,
    transform_variant,
    verify_reconstruction,
)

__all__ = [
    "QPoly", "QRat", "eval_at", "q_factorial", "q_int", "q_power",
    "A", "B", "I", "NCPoly", "nested_X", "normal_order", "q_commutator",
    "GradedSeries", "conj_expand", "q_antiderivative", "q_derivative", "qexp",
    "scale_argument", "series_inverse", "series_mul",
    "Factor", "Factorization", "classical_limit", "derive_qbch",
    "derive_zassenhaus", "transform_variant", "verify_reconstruction",
]
