"""
Numeric cross-check of symbolic factorizations with concrete matrices.

``A`` and ``B`` are replaced by random matrices, ``q`` and ``x`` by numbers,
and the residual of a truncated factorization is fitted against ``x`` on a
log-log scale.  A formula that is correct through ``x**N`` leaves a residual
of order ``x**(N+1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .disentangler import Factorization
from .qfield import eval_at
from .wordalg import NCPoly

__all__ = [
    "OracleConfig",
    "ResidualScaling",
    "WeylReport",
    "sample_pair",
    "evaluate_poly",
    "residual_order",
    "weyl_check",
]


@dataclass(frozen=True)
class OracleConfig:
    dim: int = 4
    q0: float = 0.7
    x_samples: tuple = (0.1, 0.05, 0.025)
    seed: int = 42
    entry_bound: float = 1.0
    tolerance: float = 0.5
    exact: bool = False

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError("dim must be >= 2; 1x1 matrices always commute")
        if not self.q0 > 0 or self.q0 == 1:
            raise ValueError("q0 must be positive and different from 1")
        xs = tuple(self.x_samples)
        if len(xs) < 2 or any(x <= 0 for x in xs) or any(b >= a for a, b in zip(xs, xs[1:])):
            raise ValueError("x_samples must be positive and strictly decreasing")
        object.__setattr__(self, "x_samples", xs)


def sample_pair(cfg: OracleConfig) -> tuple[np.ndarray, np.ndarray]:
    """Two reproducible random matrices that do not commute.

    In exact mode the entries are rounded to multiples of 1/64 and returned
    as ``Fraction`` object arrays.
    """
    rng = np.random.default_rng(cfg.seed)
    d, b = cfg.dim, cfg.entry_bound
    while True:
        Am = rng.uniform(-b, b, (d, d))
        Bm = rng.uniform(-b, b, (d, d))
        if cfg.exact:
            Am, Bm = _to_fractions(Am), _to_fractions(Bm)
            if np.any(Am.dot(Bm) - Bm.dot(Am) != 0):
                return Am, Bm
        elif np.linalg.norm(Am @ Bm - Bm @ Am) > 1e-8 * b * b:
            return Am, Bm


def _to_fractions(M: np.ndarray) -> np.ndarray:
    out = np.empty(M.shape, dtype=object)
    for idx, v in np.ndenumerate(M):
        out[idx] = Fraction(round(v * 64), 64)
    return out


class _WordCache:
    """Memoized matrix products of words over {A, B}."""

    def __init__(self, gens: dict[str, np.ndarray]):
        self.gens = gens
        M = next(iter(gens.values()))
        self.eye = _eye_like(M)
        self.cache = {"": self.eye}

    def __call__(self, w: str) -> np.ndarray:
        if w not in self.cache:
            self.cache[w] = self(w[:-1]).dot(self.gens[w[-1]])
        return self.cache[w]


def _eye_like(M: np.ndarray) -> np.ndarray:
    if M.dtype == object:
        E = np.empty(M.shape, dtype=object)
        E[...] = Fraction(0)
        for i in range(M.shape[0]):
            E[i, i] = Fraction(1)
        return E
    return np.eye(M.shape[0], dtype=M.dtype)


def evaluate_poly(P: NCPoly, words: _WordCache, q0) -> np.ndarray:
    """Matrix value of ``P`` with coefficients evaluated at ``q0``."""
    out = words.eye * 0
    for w, c in P.items():
        out = out + words(w) * eval_at(c, q0)
    return out


def _weights(convention: str, base: int, q0, jmax: int) -> list:
    """Series weights of the one-variable exponential of the factor."""
    w = [1]
    if convention == "classical" or base == 0:
        for j in range(1, jmax + 1):
            w.append(w[-1] / j if not isinstance(q0, Fraction) else w[-1] * Fraction(1, j))
        return w
    qm = q0 ** base
    denom = 1
    for j in range(1, jmax + 1):
        if convention == "jackson":
            denom = denom * (1 - qm ** j) / (1 - qm)
            w.append(1 / denom if not isinstance(q0, Fraction) else Fraction(1) / denom)
        else:
            denom = denom * (1 - qm ** j)
            wj = (1 / denom) if not isinstance(q0, Fraction) else Fraction(1) / denom
            if convention == "E_upper":
                wj = wj * qm ** (j * (j - 1) // 2)
            w.append(wj)
    return w


def _exp_matrix(M: np.ndarray, weights: Sequence, xg, jmax: int, eye: np.ndarray) -> np.ndarray:
    out = eye.copy()
    power = eye
    for j in range(1, jmax + 1):
        power = power.dot(M)
        out = out + power * (weights[j] * xg ** j)
    return out


def _sides(f: Factorization, mats, q0, x, N: int):
    Am, Bm = mats
    words = _WordCache({"A": Am, "B": Bm})
    a, b = (evaluate_poly(g, words, q0) for g in f.generators)
    eye = words.eye
    conv = f.convention
    first = 0 if conv == "classical" else 1

    def fexp(M, base, grade):
        jmax = N // grade
        return _exp_matrix(M, _weights(conv, base, q0, jmax), x ** grade, jmax, eye)

    if f.shape == "exponent":
        S = (a + b) * x
        for t in f.factors:
            if t.grade <= N:
                S = S + evaluate_poly(t.exponent, words, q0) * x ** t.grade
        lhs = _exp_matrix(S, _weights(conv, first, q0, N), 1, N, eye)
        rhs = fexp(a, first, 1).dot(fexp(b, first, 1))
        return lhs, rhs
    lhs = fexp(a, first, 1).dot(fexp(b, first, 1))
    for t in f.factors:
        if t.grade <= N:
            lhs = lhs.dot(fexp(evaluate_poly(t.exponent, words, q0), t.base, t.grade))
    return lhs, fexp(a + b, first, 1)


@dataclass(frozen=True)
class ResidualScaling:
    order: int
    x_samples: tuple
    residuals: tuple
    slope: float
    tolerance: float

    @property
    def required(self) -> float:
        return self.order + 1 - self.tolerance

    @property
    def passed(self) -> bool:
        return self.slope >= self.required


def residual_order(f: Factorization, cfg: OracleConfig | None = None,
                   N: int | None = None, mats=None) -> ResidualScaling:
    """Fit ``log ||residual||`` against ``log x`` for the truncated formula.

    Returns ``slope = inf`` when every residual is exactly zero.  Coefficient
    poles at ``cfg.q0`` raise :class:`~qzassenhaus.qfield.PoleError`.
    """
    cfg = cfg or OracleConfig()
    N = f.order if N is None else N
    if mats is None:
        mats = sample_pair(cfg)
    exact = mats[0].dtype == object
    q0 = Fraction(cfg.q0).limit_denominator(10**6) if exact else cfg.q0
    res = []
    for x in cfg.x_samples:
        xv = Fraction(x).limit_denominator(10**6) if exact else x
        lhs, rhs = _sides(f, mats, q0, xv, N)
        R = lhs - rhs
        if exact:
            R = R.astype(float)
        res.append(float(np.linalg.norm(R)))
    if all(r == 0.0 for r in res):
        slope = math.inf
    else:
        if any(r == 0.0 for r in res):
            raise ArithmeticError("residual vanished at some but not all sample points")
        slope = float(np.polyfit(np.log(cfg.x_samples), np.log(res), 1)[0])
    return ResidualScaling(N, cfg.x_samples, tuple(res), slope, cfg.tolerance)


@dataclass
class WeylReport:
    dim: int
    omega: complex
    truncation: int
    clock_shift_residual: float
    relation_residual: float
    q_commutator_norm: float
    identity_residual: float
    generic_residual: float | None
    tol: float = 1e-10
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        ok = (self.clock_shift_residual < self.tol and self.relation_residual < self.tol
              and self.identity_residual < self.tol)
        if self.generic_residual is not None:
            ok = ok and self.generic_residual > self.tol
        return ok


def _jackson_exp_at(M: np.ndarray, q: complex, order: int) -> np.ndarray:
    out = np.eye(M.shape[0], dtype=complex)
    power = out
    fact = 1.0 + 0j
    for j in range(1, order + 1):
        power = power @ M
        if not np.any(power):
            break
        fact *= (1 - q ** j) / (1 - q)
        out = out + power / fact
    return out


def weyl_check(dim: int, truncation: int = 12, seed: int = 0) -> WeylReport:
    """Matrix witness of ``e_q^A e_q^B = e_q^{A+B}`` when ``AB = q^-1 BA``.

    With ``w = exp(2 pi i / dim)``, the clock ``Q = diag(w^j)`` and the cyclic
    shift ``P`` satisfy ``P Q = w^-1 Q P``.  At ``q = w`` the numbers
    ``[n]`` vanish for ``n = dim``, so the q-exponential of ``P`` itself is
    undefined; the check uses the nilpotent part ``N`` of the shift (the
    wrap-around entry removed), which obeys the same relation with ``Q``.
    ``A = N`` and ``B = N Q`` then satisfy ``AB = w^-1 BA`` and every series
    terminates below ``x^dim``.
    """
    if dim < 2:
        raise ValueError("dim must be >= 2")
    w = np.exp(2j * np.pi / dim)
    Q = np.diag(w ** np.arange(dim))
    P = np.roll(np.eye(dim, dtype=complex), 1, axis=0)
    N = np.diag(np.ones(dim - 1, dtype=complex), -1)
    Am, Bm = N, N @ Q
    clock = np.linalg.norm(P @ Q - Q @ P / w)
    rel = np.linalg.norm(Am @ Bm - Bm @ Am / w)
    qcomm = np.linalg.norm(Am @ Bm - (1 / w) * Bm @ Am)
    lhs = _jackson_exp_at(Am, w, truncation) @ _jackson_exp_at(Bm, w, truncation)
    ident = np.linalg.norm(lhs - _jackson_exp_at(Am + Bm, w, truncation))
    generic = None
    notes = []
    if dim >= 3:
        rng = np.random.default_rng(seed)
        Ar = np.tril(rng.uniform(-1, 1, (dim, dim)), -1).astype(complex)
        Br = np.tril(rng.uniform(-1, 1, (dim, dim)), -1).astype(complex)
        g = _jackson_exp_at(Ar, w, truncation) @ _jackson_exp_at(Br, w, truncation)
        generic = float(np.linalg.norm(g - _jackson_exp_at(Ar + Br, w, truncation)))
    else:
        notes.append("dim 2: nilpotent 2x2 pairs commute, no generic counter-check")
    return WeylReport(dim, complex(w), truncation, float(clock), float(rel), float(qcomm),
                      float(ident), generic, notes=notes)
