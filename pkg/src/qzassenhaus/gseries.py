"""
Truncated power series in a commuting grading variable ``x`` with
coefficients in the free algebra, plus formal q-calculus on them.

A :class:`GradedSeries` of order ``N`` stores the coefficients of
``x**0 ... x**N``; anything beyond ``x**N`` is unknown, not zero.  Binary
operations require equal orders.

The q-exponential in base ``q**m`` of ``x**g W`` is

    e_{q^m}^{x^g W} = sum_j x^(g j) W^j / [j]_{q^m}!

and :func:`qexp` returns its truncation.
"""
from __future__ import annotations

import os
from fractions import Fraction
from typing import Sequence

from .qfield import ONE, QRat, q_factorial, q_int, q_power, InvalidBaseError
from .wordalg import A, B, I, NCPoly, ZERO_POLY, sum_of_products

__all__ = [
    "DEFAULT_ORDER",
    "MAX_ORDER",
    "max_order",
    "OrderMismatchError",
    "NotInvertibleError",
    "GradedSeries",
    "identity",
    "constant",
    "qexp",
    "exp_classical",
    "exp_series",
    "series_mul",
    "series_inverse",
    "conj_expand",
    "q_derivative",
    "q_antiderivative",
    "scale_argument",
]

DEFAULT_ORDER = 6
MAX_ORDER = 10


def max_order() -> int:
    """Truncation cap; ``QZX_MAX_ORDER`` in the environment overrides it."""
    env = os.environ.get("QZX_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"QZX_MAX_ORDER must be an integer, got {env!r}") from None
    return MAX_ORDER


class OrderMismatchError(ValueError):
    pass


class NotInvertibleError(ArithmeticError):
    pass


class GradedSeries:
    """Immutable truncated series ``sum_n x^n coeffs[n]``, ``n = 0..order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[NCPoly], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs += [ZERO_POLY] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    def __getitem__(self, n: int) -> NCPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(f"x^{n}: {c}" for n, c in enumerate(self.coeffs) if c)
        return f"GradedSeries(order={self.order}, {{{body}}})"

    def _check(self, other: "GradedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        self._check(other)
        return GradedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        self._check(other)
        return GradedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "GradedSeries":
        return GradedSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            return series_mul(self, other)
        if isinstance(other, NCPoly):
            return GradedSeries([c * other for c in self.coeffs], self.order)
        return GradedSeries([c.scale(other) for c in self.coeffs], self.order)

    def __rmul__(self, other):
        if isinstance(other, NCPoly):
            return GradedSeries([other * c for c in self.coeffs], self.order)
        return GradedSeries([c.scale(other) for c in self.coeffs], self.order)

    def truncate(self, order: int) -> "GradedSeries":
        if order > self.order:
            raise OrderMismatchError("cannot raise the order of a truncated series")
        return GradedSeries(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_identity(self) -> bool:
        return self.coeffs[0] == I and all(c.is_zero() for c in self.coeffs[1:])

    def first_nonzero(self) -> int | None:
        """Lowest grade with a nonzero coefficient, or ``None``."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def is_graded(self) -> bool:
        """Whether every ``x^n`` coefficient is homogeneous of word length ``n``."""
        return all(c.is_homogeneous(n) for n, c in enumerate(self.coeffs))

    def map_coefficients(self, f) -> "GradedSeries":
        return GradedSeries([c.map_coefficients(f) for c in self.coeffs], self.order)


def identity(N: int) -> GradedSeries:
    return GradedSeries([I], N)


def constant(P: NCPoly, N: int) -> GradedSeries:
    return GradedSeries([P], N)


def _power_series(W: NCPoly, g: int, N: int, weights) -> GradedSeries:
    if g < 1:
        raise ValueError("grade g must be positive")
    coeffs = [ZERO_POLY] * (N + 1)
    power = I
    j = 0
    while g * j <= N:
        coeffs[g * j] = power.scale(weights(j))
        j += 1
        power = power * W
        if not power:
            break
    return GradedSeries(coeffs, N)


def qexp(W: NCPoly, m: int, g: int, N: int) -> GradedSeries:
    """Truncation at ``x**N`` of ``e_{q^m}^{x^g W}``."""
    if m == 0:
        raise InvalidBaseError("q-exponential requested for base q**0")
    return _power_series(W, g, N, lambda j: ONE / q_factorial(j, m))


def exp_classical(W: NCPoly, g: int, N: int) -> GradedSeries:
    """Truncation of the ordinary exponential ``exp(x^g W)``."""
    fact = [1]
    for j in range(1, N + 1):
        fact.append(fact[-1] * j)
    return _power_series(W, g, N, lambda j: QRat(Fraction(1, fact[j])))


def series_mul(S: GradedSeries, T: GradedSeries) -> GradedSeries:
    """Cauchy product truncated at the common order."""
    S._check(T)
    N = S.order
    out = []
    for n in range(N + 1):
        out.append(sum_of_products(
            (S.coeffs[i], T.coeffs[n - i]) for i in range(n + 1)))
    return GradedSeries(out, N)


def series_inverse(S: GradedSeries) -> GradedSeries:
    """Two-sided inverse of a series with constant term ``I``.

    Unit-triangular recursion ``T_n = -sum_{i=1..n} S_i T_{n-i}``; the left
    and right inverses coincide for a unit constant term.
    """
    if S.coeffs[0] != I:
        raise NotInvertibleError("series constant term is not the identity")
    N = S.order
    T = [I]
    for n in range(1, N + 1):
        T.append(sum_of_products(((S.coeffs[i], T[n - i]) for i in range(1, n + 1)), -1))
    return GradedSeries(T, N)


def exp_series(S: GradedSeries, m: int = 1) -> GradedSeries:
    """``e_{q^m}^{S(x)}`` for a series with zero constant term.

    Uses exact truncated powers of ``S``; ``m = 0`` selects the ordinary
    exponential.
    """
    if S.coeffs[0]:
        raise ValueError("exponent series must have zero constant term")
    N = S.order
    out = identity(N)
    power = identity(N)
    for j in range(1, N + 1):
        power = series_mul(power, S)
        if power.is_zero():
            break
        if m == 0:
            w = QRat(Fraction(1, _factorial(j)))
        else:
            w = ONE / q_factorial(j, m)
        out = out + power * w
    return out


def _factorial(n: int) -> int:
    r = 1
    for j in range(2, n + 1):
        r *= j
    return r


def conj_expand(N: int) -> GradedSeries:
    """``e_{q^-1}^{-q x A} B e_q^{x A}`` expanded through ``x**N``."""
    left = qexp(A.scale(-q_power(1)), -1, 1, N)
    return series_mul(series_mul(left, constant(B, N)), qexp(A, 1, 1, N))


def q_derivative(S: GradedSeries) -> GradedSeries:
    """Jackson derivative; the result has order ``S.order - 1``."""
    if S.order == 0:
        return GradedSeries([ZERO_POLY], 0)
    return GradedSeries(
        [S.coeffs[n + 1].scale(q_int(n + 1, 1)) for n in range(S.order)], S.order - 1)


def q_antiderivative(S: GradedSeries) -> GradedSeries:
    """Formal Jackson integral from 0; keeps the order of ``S``.

    The ``x**N`` coefficient of the result needs only ``S[N-1]``, so nothing
    is fabricated.
    """
    coeffs = [ZERO_POLY]
    for n in range(1, S.order + 1):
        coeffs.append(S.coeffs[n - 1].scale(ONE / q_int(n, 1)))
    return GradedSeries(coeffs, S.order)


def scale_argument(S: GradedSeries, k: int) -> GradedSeries:
    """Substitute ``x -> q^k x``."""
    return GradedSeries([c.scale(q_power(k * n)) for n, c in enumerate(S.coeffs)], S.order)
