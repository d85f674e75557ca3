"""
Order-by-order solvers for q-deformed disentanglement formulas.

Both q-Zassenhaus variants are found by *peeling*: start from

    H(x) = e_q^{-xB-inverse} e_q^{-xA-inverse} e_q^{x(A+B)}

(with the generic series inverse), read the lowest surviving coefficient as
the next exponent, divide the corresponding factor off from the left and
repeat.  The escalating variant uses base ``q^n`` for the grade-``n`` factor,
the uniform (Katriel-Rasetti-Solomon) variant uses base ``q`` throughout.

The q-BCH exponent ``S(x) = x(A+B) + sum_n x^n Z_n`` is solved from
``e_q^{S(x)} = e_q^{xA} e_q^{xB}``; ``Z_n`` enters the ``x^n`` coefficient
only through the linear term, so each grade is one subtraction.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .gseries import (
    GradedSeries,
    exp_classical,
    exp_series,
    identity,
    max_order,
    qexp,
    series_inverse,
    series_mul,
)
from .qfield import ONE, PoleError, QRat, eval_at, q_power
from .wordalg import A, B, I, NCPoly, ZERO_POLY, normal_order

__all__ = [
    "VARIANTS",
    "CONVENTIONS",
    "Factor",
    "Factorization",
    "ClassicalLimitError",
    "check_order",
    "derive_zassenhaus",
    "derive_qbch",
    "classical_limit",
    "transform_variant",
    "factor_series",
    "reconstruct",
    "verify_reconstruction",
    "annihilated",
]

VARIANTS = ("escalating", "uniform", "qbch", "classical")
# jackson: e_q^x = sum x^n/[n]!; e_lower / E_upper: the two q-series exponentials
CONVENTIONS = ("jackson", "e_lower", "E_upper", "classical")


@dataclass(frozen=True)
class Factor:
    """One exponential factor ``exp_{q^base}(x^grade * exponent)``.

    ``base == 0`` denotes the ordinary exponential.
    """

    grade: int
    base: int
    exponent: NCPoly


@dataclass(frozen=True)
class Factorization:
    """Derived disentanglement data.

    For the product variants ``factors`` are the factors of grade >= 2 in
    left-to-right order; the grade 0/1 prefix ``exp(xA) exp(xB)`` is implicit.
    For the ``qbch`` variant (and its classical limit, ``shape="exponent"``)
    the factors carry the exponent terms ``Z_n`` of a single exponential.
    """

    variant: str
    order: int
    factors: tuple[Factor, ...]
    convention: str = "jackson"
    shape: str = "product"
    generators: tuple[NCPoly, NCPoly] = field(default=(A, B), compare=True)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        grades = [f.grade for f in self.factors]
        if any(g < 2 for g in grades) or grades != sorted(set(grades)):
            raise ValueError("factor grades must be strictly increasing from 2")

    def exponent(self, grade: int) -> NCPoly:
        for f in self.factors:
            if f.grade == grade:
                return f.exponent
        raise KeyError(grade)

    def exponents(self) -> dict[int, NCPoly]:
        return {f.grade: f.exponent for f in self.factors}

    def truncated(self, grade: int) -> "Factorization":
        """Drop every factor above ``grade``; ``order`` is kept."""
        return dataclasses.replace(
            self, factors=tuple(f for f in self.factors if f.grade <= grade))


class ClassicalLimitError(PoleError):
    def __init__(self, grade: int, word: str, coeff: QRat):
        self.grade, self.word, self.coeff = grade, word, coeff
        super().__init__(f"grade {grade}: coefficient {coeff} of {word} has a pole at q = 1")


def check_order(N: int) -> int:
    cap = max_order()
    if not isinstance(N, int) or N < 2 or N > cap:
        raise ValueError(f"order must be an integer in [2, {cap}], got {N!r}")
    return N


def derive_zassenhaus(variant: str, N: int, a: NCPoly = A, b: NCPoly = B) -> Factorization:
    """Peel ``e_q^{x(a+b)} = e_q^{xa} e_q^{xb} prod_n e_{q^m}^{x^n C_n}``.

    ``m = n`` for ``variant="escalating"`` and ``m = 1`` for ``"uniform"``.
    """
    if variant not in ("escalating", "uniform"):
        raise ValueError("variant must be 'escalating' or 'uniform'")
    check_order(N)
    F = qexp(a + b, 1, 1, N)
    H = series_mul(series_inverse(qexp(b, 1, 1, N)),
                   series_mul(series_inverse(qexp(a, 1, 1, N)), F))
    factors = []
    for n in range(2, N + 1):
        Cn = H[n]
        m = n if variant == "escalating" else 1
        factors.append(Factor(n, m, Cn))
        if Cn:
            H = series_mul(series_inverse(qexp(Cn, m, n, N)), H)
    if not H.is_identity():
        raise ArithmeticError("peeling left a nonidentity remainder")
    return Factorization(variant, N, tuple(factors), generators=(a, b))


def derive_qbch(N: int, a: NCPoly = A, b: NCPoly = B) -> Factorization:
    """Solve ``e_q^{S(x)} = e_q^{xa} e_q^{xb}`` for ``S = x(a+b) + sum x^n Z_n``."""
    check_order(N)
    P = series_mul(qexp(a, 1, 1, N), qexp(b, 1, 1, N))
    S = [ZERO_POLY, a + b]
    factors = []
    for n in range(2, N + 1):
        partial = GradedSeries(S, N)
        Zn = P[n] - exp_series(partial, 1)[n]
        S.append(Zn)
        factors.append(Factor(n, 1, Zn))
    return Factorization("qbch", N, tuple(factors), shape="exponent", generators=(a, b))


def classical_limit(f: Factorization) -> Factorization:
    """Evaluate every coefficient at ``q = 1``.

    Grade-``n`` factors become ordinary exponentials (base 0).
    """
    def at_one(P: NCPoly, grade: int) -> NCPoly:
        out = {}
        for w, c in P.items():
            try:
                out[w] = QRat(eval_at(c, 1))
            except PoleError:
                raise ClassicalLimitError(grade, w, c) from None
        return NCPoly(out)

    factors = tuple(Factor(x.grade, 0, at_one(x.exponent, x.grade)) for x in f.factors)
    gens = tuple(at_one(g, 1) for g in f.generators)
    return Factorization("classical", f.order, factors, convention="classical",
                         shape=f.shape, generators=gens)


def transform_variant(f: Factorization, target: str) -> Factorization:
    """Rewrite a Jackson-convention product formula for ``e_q(x)`` or ``E_q(x)``.

    With ``e_q(y) = e_q^{y/(1-q)}`` and ``E_q(y) = e_{q^-1}^{y/(1-q)}``, the
    generators are rescaled by ``1/(1-q)`` and each factor
    ``e_{q^m}^{W}`` becomes ``e_{q^m}((1-q^m) W)``.  For ``E_upper`` the source
    formula is first taken in base ``q^-1`` (``q -> 1/q`` in all coefficients).
    """
    if target not in ("e_lower", "E_upper"):
        raise ValueError("target must be 'e_lower' or 'E_upper'")
    if f.variant not in ("escalating", "uniform") or f.convention != "jackson":
        raise ValueError("transform_variant needs a Jackson-convention product formula")
    one_minus_q = ONE - q_power(1)
    factors = []
    for x in f.factors:
        W = x.exponent
        if target == "E_upper":
            W = W.map_coefficients(QRat.invert_base)
        scale = (ONE - q_power(x.base)) / one_minus_q ** x.grade
        factors.append(Factor(x.grade, x.base, W.scale(scale)))
    return Factorization(f.variant, f.order, tuple(factors), convention=target,
                         generators=f.generators)


# ---------------------------------------------------------------------------
# reconstruction


def _q_series_exp(W: NCPoly, m: int, g: int, N: int, upper: bool) -> GradedSeries:
    """``e_{q^m}(x^g W)`` or ``E_{q^m}(x^g W)`` from their defining sums."""
    coeffs = [ZERO_POLY] * (N + 1)
    power, denom = I, ONE
    j = 0
    while g * j <= N:
        w = ONE / denom
        if upper:
            w = w * q_power(m * j * (j - 1) // 2)
        coeffs[g * j] = power.scale(w)
        j += 1
        denom = denom * (ONE - q_power(m * j))
        power = power * W
        if not power:
            break
    return GradedSeries(coeffs, N)


def factor_series(W: NCPoly, base: int, grade: int, N: int,
                  convention: str = "jackson") -> GradedSeries:
    """Truncated series of one factor in the given exponential convention."""
    if convention == "classical" or base == 0:
        return exp_classical(W, grade, N)
    if convention == "jackson":
        return qexp(W, base, grade, N)
    return _q_series_exp(W, base, grade, N, upper=(convention == "E_upper"))


def reconstruct(f: Factorization, N: int | None = None) -> tuple[GradedSeries, GradedSeries]:
    """``(product side, target side)`` of the factorization through ``x**N``."""
    N = f.order if N is None else N
    if N > f.order:
        raise ValueError(f"factorization derived only through order {f.order}")
    a, b = f.generators
    conv = f.convention
    first = 0 if conv == "classical" else 1
    if f.shape == "exponent":
        S = [ZERO_POLY, a + b] + [ZERO_POLY] * (N - 1)
        for x in f.factors:
            if x.grade <= N:
                S[x.grade] = x.exponent
        lhs = exp_series(GradedSeries(S, N), first)
        rhs = series_mul(factor_series(a, first, 1, N, conv),
                         factor_series(b, first, 1, N, conv))
        return lhs, rhs
    prod = series_mul(factor_series(a, first, 1, N, conv), factor_series(b, first, 1, N, conv))
    for x in f.factors:
        if x.grade <= N and x.exponent:
            prod = series_mul(prod, factor_series(x.exponent, x.base, x.grade, N, conv))
    target = factor_series(a + b, first, 1, N, conv)
    return prod, target


def verify_reconstruction(f: Factorization, N: int | None = None) -> GradedSeries:
    """Residual ``product - target`` through ``x**N``; zero when the formula holds."""
    lhs, rhs = reconstruct(f, N)
    return lhs - rhs


def annihilated(f: Factorization, k: int | None = None) -> dict[int, bool]:
    """Per grade, whether the exponent vanishes modulo ``BA = q^k AB``.

    ``k`` defaults to the relation under which the formula's convention
    collapses: ``AB = q^-1 BA`` (``k = 1``) except for ``E_upper``, whose
    collapse needs ``AB = q BA`` (``k = -1``).
    """
    if k is None:
        k = -1 if f.convention == "E_upper" else 1
    return {x.grade: normal_order(x.exponent, k).is_zero() for x in f.factors}
