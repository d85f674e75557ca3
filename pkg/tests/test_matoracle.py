import math

import numpy as np
import pytest

from qzassenhaus.disentangler import (
    classical_limit,
    derive_qbch,
    derive_zassenhaus,
    transform_variant,
)
from qzassenhaus.matoracle import OracleConfig, residual_order, sample_pair, weyl_check
from qzassenhaus.qfield import PoleError
from qzassenhaus.wordalg import NCPoly


def test_sample_pair_reproducible():
    cfg = OracleConfig(seed=7)
    A1, B1 = sample_pair(cfg)
    A2, B2 = sample_pair(cfg)
    assert np.array_equal(A1, A2) and np.array_equal(B1, B2)
    assert np.linalg.norm(A1 @ B1 - B1 @ A1) > 0
    assert np.abs(A1).max() <= cfg.entry_bound


@pytest.mark.parametrize("kwargs", [
    {"dim": 1},
    {"q0": 1.0},
    {"q0": -0.5},
    {"x_samples": (0.1, 0.2)},
])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        OracleConfig(**kwargs)


@pytest.mark.parametrize("N", [3, 4, 5])
@pytest.mark.parametrize("variant", ["escalating", "uniform", "qbch"])
def test_residual_slope(variant, N):
    f = derive_qbch(N) if variant == "qbch" else derive_zassenhaus(variant, N)
    r = residual_order(f)
    assert r.passed, r
    # no leakage below x^(N+1): slope is not far above N+1 either
    assert r.slope < N + 1.5


@pytest.mark.parametrize("q0", [0.3, 0.7, 1.6])
def test_residual_slope_other_q(q0):
    r = residual_order(derive_zassenhaus("escalating", 4), OracleConfig(q0=q0, seed=3))
    assert r.passed, r


def test_classical_limit_slope():
    f = classical_limit(derive_zassenhaus("escalating", 4))
    assert residual_order(f).slope >= 4.5


@pytest.mark.parametrize("target", ["e_lower", "E_upper"])
def test_transformed_conventions_slope(target):
    f = transform_variant(derive_zassenhaus("escalating", 4), target)
    assert residual_order(f).passed


def test_zero_B_gives_exact_zero():
    f = derive_zassenhaus("escalating", 4, b=NCPoly())
    Am, _ = sample_pair(OracleConfig())
    r = residual_order(f, mats=(Am, np.zeros_like(Am)))
    assert all(v == 0.0 for v in r.residuals)
    assert math.isinf(r.slope)


def test_truncated_formula_fails_contract():
    f = derive_zassenhaus("escalating", 5).truncated(3)
    r = residual_order(f)
    assert not r.passed
    assert abs(r.slope - 4) < 0.5


def test_exact_fallback_agrees():
    f = derive_zassenhaus("escalating", 4)
    r = residual_order(f, OracleConfig(exact=True))
    assert r.passed


def test_pole_at_q0():
    from qzassenhaus.disentangler import Factor, Factorization
    from qzassenhaus.qfield import QRat
    f = Factorization("uniform", 2, (Factor(2, 1, NCPoly({"AB": QRat("1", "2 - 5*q")})),))
    with pytest.raises(PoleError):
        residual_order(f, OracleConfig(q0=0.4))


def test_weyl_dim2():
    rep = weyl_check(2)
    assert rep.q_commutator_norm == 0.0
    assert rep.passed


@pytest.mark.parametrize("dim", [3, 4, 5])
def test_weyl_identity(dim):
    rep = weyl_check(dim, truncation=12)
    assert rep.identity_residual < 1e-10
    assert rep.relation_residual < 1e-10
    assert rep.generic_residual > 1e-3
    assert rep.passed


def test_weyl_rejects_dim1():
    with pytest.raises(ValueError):
        weyl_check(1)
