import pytest
import sympy

from qzassenhaus.gseries import (
    GradedSeries,
    NotInvertibleError,
    OrderMismatchError,
    conj_expand,
    constant,
    exp_series,
    identity,
    q_antiderivative,
    q_derivative,
    qexp,
    scale_argument,
    series_inverse,
    series_mul,
)
from qzassenhaus.qfield import ONE, InvalidBaseError, QRat, q_factorial, q_int, q_power
from qzassenhaus.wordalg import A, B, I, NCPoly, ZERO_POLY, nested_X

from randgen import rand_ncpoly, rand_series

qs, xs = sympy.symbols("q x")


def test_qexp_example():
    S = qexp(A, 1, 1, 3)
    assert S[0] == I and S[1] == A
    assert S[2] == (A * A).scale(ONE / QRat("1 + q"))
    assert S[3] == (A * A * A).scale(ONE / (QRat("1 + q") * QRat("1 + q + q^2")))


def test_qexp_zero_exponent():
    assert qexp(NCPoly(), 3, 2, 5) == identity(5)


def test_qexp_base_q2_grade2(rng):
    C = rand_ncpoly(rng, max_len=2)
    S = qexp(C, 2, 2, 4)
    assert S[4] == (C * C).scale(ONE / QRat("1 + q^2"))
    assert S[1].is_zero() and S[3].is_zero()


def test_qexp_invalid_base():
    with pytest.raises(InvalidBaseError):
        qexp(A, 0, 1, 3)


def test_series_mul_identity(rng):
    S = rand_series(rng, 4)
    assert series_mul(S, identity(4)) == S
    assert series_mul(identity(4), S) == S


def test_series_mul_order_mismatch():
    with pytest.raises(OrderMismatchError):
        series_mul(identity(3), identity(4))


def test_series_mul_associative(rng):
    for _ in range(5):
        S, T, U = (rand_series(rng, 3) for _ in range(3))
        assert series_mul(series_mul(S, T), U) == series_mul(S, series_mul(T, U))


@pytest.mark.parametrize("N", [1, 4, 6])
def test_inverse_pair(N):
    left = qexp(A, 1, 1, N)
    right = qexp(-A, -1, 1, N)
    assert series_mul(left, right) == identity(N)
    assert series_inverse(left) == right


def test_series_inverse_properties(rng):
    assert series_inverse(identity(5)) == identity(5)
    for _ in range(5):
        S = rand_series(rng, 4)
        S = GradedSeries((I,) + S.coeffs[1:], 4)
        T = series_inverse(S)
        assert series_mul(S, T) == identity(4)
        assert series_mul(T, S) == identity(4)
        assert series_inverse(T) == S


def test_series_inverse_rejects_nonunit():
    with pytest.raises(NotInvertibleError):
        series_inverse(constant(A, 3))


def test_conj_expand_low_order():
    S = conj_expand(3)
    BA_q = B * A - (A * B).scale(q_power(1))
    assert S[0] == B
    assert S[1] == BA_q
    X2 = BA_q * A - (A * BA_q).scale(q_power(2))
    assert S[2] == X2 / q_factorial(2)


@pytest.mark.parametrize("N", range(1, 7))
def test_conj_expand_matches_nested(N):
    S = conj_expand(N)
    for n in range(1, N + 1):
        assert S[n] == nested_X(n) / q_factorial(n, 1)


def test_q_derivative_examples():
    E = qexp(A, 1, 1, 5)
    assert q_derivative(E) == (A * E).truncate(4)
    assert q_derivative(constant(B, 3)).is_zero()
    x2 = GradedSeries([ZERO_POLY, ZERO_POLY, I], 2)
    assert q_derivative(x2) == GradedSeries([ZERO_POLY, I.scale(QRat("1 + q"))], 1)


def _to_sympy(r):
    return (sum(c * qs**k for k, c in r.num.terms)
            / sum(c * qs**k for k, c in r.den.terms))


def test_q_derivative_against_difference_quotient(rng):
    # scalar series: compare with (f(x) - f(qx)) / ((1 - q) x) computed by sympy
    from randgen import rand_qrat
    N = 5
    cs = [rand_qrat(rng) for _ in range(N + 1)]
    S = GradedSeries([I.scale(c) for c in cs], N)
    f = sum(_to_sympy(c) * xs**n for n, c in enumerate(cs))
    dq = sympy.expand(sympy.cancel((f - f.subs(xs, qs * xs)) / ((1 - qs) * xs)))
    D = q_derivative(S)
    for n in range(N):
        expected = dq.coeff(xs, n)
        assert sympy.cancel(_to_sympy(D[n].coeff("")) - expected) == 0


def test_q_antiderivative_examples(rng):
    S = rand_series(rng, 5)
    assert q_derivative(q_antiderivative(S)) == S.truncate(4)
    assert q_antiderivative(GradedSeries([], 3)).is_zero()
    assert q_antiderivative(constant(B, 3)) == GradedSeries([ZERO_POLY, B], 3)


def test_scale_argument(rng):
    S = rand_series(rng, 4)
    assert scale_argument(S, 0) == S
    assert scale_argument(scale_argument(S, 1), -1) == S


def test_q_leibniz_both_forms(rng):
    for _ in range(5):
        f, g = rand_series(rng, 4), rand_series(rng, 4)
        lhs = q_derivative(series_mul(f, g))
        Df, Dg = q_derivative(f), q_derivative(g)
        first = series_mul(Df, g.truncate(3)) + series_mul(scale_argument(f, 1).truncate(3), Dg)
        second = series_mul(Df, scale_argument(g, 1).truncate(3)) + series_mul(f.truncate(3), Dg)
        assert lhs == first
        assert lhs == second


def test_defining_equation_of_F():
    N = 5
    F = qexp(A + B, 1, 1, N)
    assert q_derivative(F) == ((A + B) * F).truncate(N - 1)


def test_grading_homogeneous():
    assert qexp(A + B, 1, 1, 5).is_graded()
    assert series_mul(qexp(A, 1, 1, 5), series_inverse(qexp(B, 1, 1, 5))).is_graded()


def test_exp_series_of_linear_term():
    N = 4
    S = GradedSeries([ZERO_POLY, A + B], N)
    assert exp_series(S, 1) == qexp(A + B, 1, 1, N)
