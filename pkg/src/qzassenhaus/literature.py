"""
Closed forms of low-order coefficients as they appear in the literature,
expanded into the free algebra, together with a comparison harness.

The solver output is the ground truth; published forms are test targets.
:func:`discrepancy_report` compares every known published coefficient
against a fresh derivation and reports mismatches with the exact difference.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .disentangler import derive_qbch, derive_zassenhaus
from .qfield import QRat, q_factorial, q_int, q_power
from .wordalg import A, B, NCPoly, q_commutator as qc

__all__ = [
    "escalating_C2",
    "escalating_C3",
    "escalating_C3_swapped",
    "escalating_C4",
    "krs_c2",
    "krs_c3",
    "krs_c4",
    "krs_c4_corrected",
    "qbch_Z2",
    "qbch_Z3",
    "qbch_Z3_corrected",
    "classical_zassenhaus",
    "classical_bch",
    "Comparison",
    "compare",
    "discrepancy_report",
]


def _c(X, Y, k=0):
    return qc(X, Y, k)


def escalating_C2() -> NCPoly:
    """``-q [A,B]_{q^-1} / [2]``."""
    return qc(A, B, -1).scale(-q_power(1) / q_int(2))


def escalating_C3() -> NCPoly:
    """``[[B,A]_q, B]_q/[3] + [[B,A]_q, A]_{q^2}/[3]!``."""
    BA = qc(B, A, 1)
    return qc(BA, B, 1) / q_int(3) + qc(BA, A, 2) / q_factorial(3)


def escalating_C3_swapped() -> NCPoly:
    """The same coefficient written with inverse-base brackets.

    ``q^3 [A,[A,B]_{q^-1}]_{q^-2}/[3]! - q [[A,B]_{q^-1}, B]_q/[3]``.
    """
    AB = qc(A, B, -1)
    return (qc(A, AB, -2).scale(q_power(3) / q_factorial(3))
            - qc(AB, B, 1).scale(q_power(1) / q_int(3)))


def escalating_C4() -> NCPoly:
    AB = qc(A, B, -1)
    inner = qc(A, AB, -2)
    total = (qc(A, inner, -3).scale(-q_power(6))
             + qc(inner, B, 1).scale(q_power(3) * q_int(3))
             - qc(qc(AB, B, 1), B, 2).scale(q_power(1) * q_int(3)))
    return total / q_factorial(4)


def krs_c2() -> NCPoly:
    return qc(B, A, 1) / q_int(2)


def krs_c3() -> NCPoly:
    BA = qc(B, A, 1)
    return qc(BA, A, 2) / q_factorial(3) + qc(BA, B, 1) / q_int(3)


def _krs_c4(bbb_bases: tuple[int, int]) -> NCPoly:
    BA = qc(B, A, 1)
    k1, k2 = bbb_bases
    d24 = q_int(2) * q_int(4)
    return (qc(qc(BA, A, 2), A, 3) / q_factorial(4)
            + qc(qc(BA, B, k1), B, k2) / d24
            + qc(qc(BA, A, 2), B, 1) / d24
            + qc(BA, BA, 1).scale(q_power(1) / (q_int(2) ** 2 * q_int(4))))


def krs_c4() -> NCPoly:
    """As published: the ``BBB`` bracket uses bases ``q^2, q^3``."""
    return _krs_c4((2, 3))


def krs_c4_corrected() -> NCPoly:
    """The published form with the ``BBB`` bracket bases lowered to ``q, q^2``."""
    return _krs_c4((1, 2))


def qbch_Z2() -> NCPoly:
    return qc(A, B, -1).scale(q_power(1) / q_int(2))


def _z3_bracket() -> NCPoly:
    AB = qc(A, B, 1)
    return qc(A, AB, -1) + qc(AB, B, -1)


def qbch_Z3() -> NCPoly:
    """As published: ``q^2/([2] 3!)`` with a classical ``3! = 6``."""
    return _z3_bracket().scale(q_power(2) / (q_int(2) * 6))


def qbch_Z3_corrected() -> NCPoly:
    """With the q-factorial ``[3]!`` in place of ``3!``."""
    return _z3_bracket().scale(q_power(2) / (q_int(2) * q_factorial(3)))


def _frac(a, b=1) -> QRat:
    return QRat(Fraction(a, b))


def classical_zassenhaus() -> dict[int, NCPoly]:
    """Exponents of ``e^{A+B} = e^A e^B e^{C_2} e^{C_3} e^{C_4} ...``."""
    AB = _c(A, B)
    return {
        2: AB.scale(_frac(-1, 2)),
        3: _c(A, AB).scale(_frac(1, 6)) + _c(AB, B).scale(_frac(-1, 3)),
        4: (_c(A, _c(A, AB)).scale(-1) + _c(_c(A, AB), B).scale(3)
            + _c(_c(AB, B), B).scale(-3)).scale(_frac(1, 24)),
    }


def classical_bch() -> dict[int, NCPoly]:
    """Exponent terms of ``e^A e^B = e^{A + B + Z_2 + Z_3 + ...}``."""
    AB = _c(A, B)
    return {
        2: AB.scale(_frac(1, 2)),
        3: (_c(A, AB) + _c(AB, B)).scale(_frac(1, 12)),
    }


@dataclass(frozen=True)
class Comparison:
    name: str
    published: NCPoly
    derived: NCPoly

    @property
    def match(self) -> bool:
        return self.published == self.derived

    @property
    def difference(self) -> NCPoly:
        """``derived - published``."""
        return self.derived - self.published

    def line(self) -> str:
        if self.match:
            return f"{self.name}: match"
        return f"{self.name}: MISMATCH, derived - published = {self.difference}"


def compare(name: str, published: NCPoly, derived: NCPoly) -> Comparison:
    return Comparison(name, published, derived)


def discrepancy_report() -> list[Comparison]:
    """Compare every published low-order coefficient with the solvers."""
    esc = derive_zassenhaus("escalating", 4).exponents()
    uni = derive_zassenhaus("uniform", 4).exponents()
    bch = derive_qbch(3).exponents()
    return [
        compare("escalating C2", escalating_C2(), esc[2]),
        compare("escalating C3", escalating_C3(), esc[3]),
        compare("escalating C3 (inverse-base form)", escalating_C3_swapped(), esc[3]),
        compare("escalating C4", escalating_C4(), esc[4]),
        compare("KRS c2", krs_c2(), uni[2]),
        compare("KRS c3", krs_c3(), uni[3]),
        compare("KRS c4", krs_c4(), uni[4]),
        compare("KRS c4 (BBB bracket bases q, q^2)", krs_c4_corrected(), uni[4]),
        compare("q-BCH Z2", qbch_Z2(), bch[2]),
        compare("q-BCH Z3", qbch_Z3(), bch[3]),
        compare("q-BCH Z3 ([3]! denominator)", qbch_Z3_corrected(), bch[3]),
    ]
